"""Acceptance suite: one printed PASS/FAIL line per criterion.

Each test records its verdict before asserting, so the summary printed at
the end of the session lists every criterion even when some fail.
"""

import itertools
import time

import numpy as np
from char2forms import canon as C
from char2forms import liealg as L
from char2forms import oracle as O
from char2forms import superalg as S
from char2forms.contact import OneFormSpec, is_contact
from char2forms.ff import make_ctx
from char2forms.mat import FormMatrix, identity, matrix, rank, standard_form
from char2forms.sampling import random_invertible, random_matrix, random_nondegenerate_symmetric, random_symmetric

from conftest import F2, F4

RESULTS = {}


def report(num, title, ok, detail=""):
    line = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    RESULTS[num] = line
    print(line)
    return ok


B_REPS = [
    [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]],
    [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]],
    [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 1, 0, 0]],
    [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 1, 0], [1, 0, 1, 1]],
    [[0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0], [1, 1, 0, 1]],
    [[0, 0, 0, 1], [0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 0, 0]],
]


def test_criterion_01_symmetric_labels():
    rng = np.random.default_rng(1)
    samples = {}
    for m in (1, 2, 4):
        ctx = make_ctx(m)
        for n in range(2, 9):
            # alternating forms are a vanishing fraction of large fields; draw half of them explicitly
            samples[m, n] = [
                random_nondegenerate_symmetric(ctx, n, rng, zero_diagonal=(n % 2 == 0 and i % 2 == 0))
                for i in range(1000)
            ]
    bad = []
    t0 = time.perf_counter()
    for (m, n), mats in samples.items():
        labels = set()
        for b in mats:
            res = C.reduce_symmetric(b)
            if not res.verify():
                bad.append((m, n, "certificate"))
            labels.add(res.label)
        if len(labels) != (2 if n % 2 == 0 else 1):
            bad.append((m, n, len(labels)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    report(1, "symmetric classification labels and certificates", ok, f"{elapsed:.1f} s, problems {bad[:3]}")
    assert ok


def test_criterion_02_oracle_counts():
    t0 = time.perf_counter()
    got = {
        ("nondeg-nonsym", n): O.enumerate_classes(n, "nondeg-nonsym", "congruence") for n in (2, 3, 4)
    }
    got.update({("nondeg-sym", n): O.enumerate_classes(n, "nondeg-sym", "congruence") for n in (2, 3, 4)})
    elapsed = time.perf_counter() - t0
    counts = {k: v.count for k, v in got.items()}
    want = {
        ("nondeg-nonsym", 2): 1,
        ("nondeg-nonsym", 3): 3,
        ("nondeg-nonsym", 4): 8,
        ("nondeg-sym", 2): 2,
        ("nondeg-sym", 3): 1,
        ("nondeg-sym", 4): 2,
    }
    ok = counts == want and got["nondeg-nonsym", 2].orbit_sizes == (2,) and elapsed < 600
    report(2, "exhaustive class counts over GF(2)", ok, f"{elapsed:.1f} s")
    assert ok


def test_criterion_03_lie_clusters():
    reps = [matrix(b, F2) for b in B_REPS]
    lab = O.orbit_labels(4, "congruence")
    census = O.enumerate_classes(4)
    covers = {int(lab[int(O.encode(b.a))]) for b in reps} == {int(O.encode(r.a)) for r in census.representatives}
    rep = O.lie_equiv_cluster(reps)
    sets = [set(c) for c in rep.clusters]
    pairs_ok = all(any({a, b} <= s for s in sets) for a, b in ((0, 3), (2, 6), (4, 5)))
    small = list(O.enumerate_classes(3).representatives)
    small_ok = all(
        L.preserver(b).dim == 2
        and L.structure_constants(L.preserver(b)).is_abelian()
        and L.preserver(b).contains(identity(3, F2))
        for b in small
    )
    ok = covers and rep.count == 5 and pairs_ok and small_ok
    report(3, "Lie-equivalence clusters", ok, f"{rep.count} clusters {[list(c) for c in rep.clusters]}")
    assert ok


def test_criterion_04_sociological():
    rng = np.random.default_rng(4)
    bad = []
    for ctx in (F2, F4):
        for n in range(2, 9):
            labels = set()
            for r in range(0, n // 2 + 1):
                for _ in range(5):
                    m = random_invertible(ctx, n, rng)
                    b = m @ standard_form("Stilde", n, ctx, r) @ m.T + random_symmetric(ctx, n, rng)
                    res = C.sociological_canon(b)
                    if not res.verify() or res.label["rank"] != 2 * r:
                        bad.append((ctx.name, n, r))
                    labels.add(res.label["rank"])
            for _ in range(50):
                b = random_matrix(ctx, n, rng)
                res = C.sociological_canon(b)
                if not res.verify():
                    bad.append((ctx.name, n, "random"))
                labels.add(res.label["rank"])
            if len(labels) != n // 2 + 1:
                bad.append((ctx.name, n, sorted(labels)))
            for _ in range(30):
                b, c = random_matrix(ctx, n, rng), random_matrix(ctx, n, rng)
                if rng.integers(2):
                    m = random_invertible(ctx, n, rng)
                    c = m @ b @ m.T + random_symmetric(ctx, n, rng)
                w = C.offset_equivalence(C.sociological_canon(b), C.sociological_canon(c))
                same = C.sociological_rank(b) == C.sociological_rank(c)
                if (w is not None) != same or (w is not None and not w.verify()):
                    bad.append((ctx.name, n, "pair"))
    for n in (2, 3, 4):
        if O.enumerate_classes(n, "all", "sociological").count != n // 2 + 1:
            bad.append(("oracle", n))
    ok = not bad
    report(4, "sociological classes and offset certificates", ok, f"problems {bad[:3]}")
    assert ok


def _pi_shape_span(k, ctx, level):
    """[[A, B], [C, A^T]] with B, C symmetric; zero-diagonal from level 1, tr A = 0 from level 2."""
    n = 2 * k
    mats = []

    def unit(i, j):
        e = np.zeros((k, k), dtype=np.int64)
        e[i, j] = 1
        return e

    def put(a=None, b=None, c=None):
        x = np.zeros((n, n), dtype=np.int64)
        if a is not None:
            x[:k, :k] = a
            x[k:, k:] = a.T
        if b is not None:
            x[:k, k:] = b
        if c is not None:
            x[k:, :k] = c
        return x

    for i in range(k):
        for j in range(k):
            if level >= 2 and i == j:
                continue
            mats.append(put(a=unit(i, j)))
    if level >= 2:
        mats += [put(a=unit(0, 0) + unit(i, i)) for i in range(1, k)]
    for i in range(k):
        for j in range(i, k):
            if level >= 1 and i == j:
                continue
            s = unit(i, j) + (unit(j, i) if i != j else 0)
            mats.append(put(b=s))
            mats.append(put(c=s))
    return L.AlgebraBasis.span(mats, n, ctx, check=False)


def test_criterion_05_derived_tables():
    got, want = {}, {}
    for n in range(3, 7):
        g = L.o_I(n, F2)
        got[f"oI({n})"] = [g.dim, *L.derived_series(g, 2).dims]
        want[f"oI({n})"] = [n * (n + 1) // 2, n * (n - 1) // 2, n * (n - 1) // 2]
    g = L.o_Pi(4, F2)
    got["oPi(4)"] = [g.dim, *L.derived_series(g, 4).dims]
    want["oPi(4)"] = [10, 6, 5, 1, 0]
    for k in (3, 4):
        ds = L.derived_series(L.o_Pi(2 * k, F2), 3)
        got[f"oPi({2 * k}) shapes"] = [
            L.o_Pi(2 * k, F2) == _pi_shape_span(k, F2, 0),
            ds.terms[0] == _pi_shape_span(k, F2, 1),
            ds.terms[1] == _pi_shape_span(k, F2, 2),
            ds.terms[2] == ds.terms[1],
        ]
        want[f"oPi({2 * k}) shapes"] = [True] * 4
    for name, g in (("ooII(1|1)", S.oo("II", 1, 1, F2)), ("pe(2)", S.pe(2, F2)), ("ooPiPi(2|2)", S.oo("PiPi", 2, 2, F2))):
        got[name] = [g.dim, *S.super_derived_series(g, 4).dims]
    want["ooII(1|1)"] = [3, 2, 1, 0, 0]
    want["pe(2)"] = [10, 6, 5, 1, 0]
    want["ooPiPi(2|2)"] = [10, 6, 5, 1, 0]
    diff = {k: got[k] for k in want if got[k] != want[k]}
    ok = not diff
    report(5, "derived-series tables", ok, f"mismatches {diff}" if diff else "")
    assert ok


def test_criterion_06_noniso_invariant():
    bad = []
    for ctx in (F2, F4):
        for k in (1, 2, 3):
            gi, gs = L.o_I(2 * k, ctx), L.o_S(2 * k, ctx)
            fi, fs = L.fingerprint(gi), L.fingerprint(gs)
            if fi.dim_center_d1 != 0 or fs.dim_center_d1 < 1:
                bad.append((ctx.name, k, "center"))
            ti = [gi, *L.derived_series(gi, 2).terms]
            ts = [gs, *L.derived_series(gs, 2).terms]
            for level, (a, b) in enumerate(zip(ti, ts)):
                if L.fingerprint(a).abstract() == L.fingerprint(b).abstract():
                    bad.append((ctx.name, k, f"level {level} fingerprints agree"))
    ok = not bad
    report(6, "center-meets-derived invariant and per-level fingerprints", ok, f"problems {bad}" if bad else "")
    assert ok


def test_criterion_07_simplicity():
    timings = {}
    verdicts = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        verdicts[name] = fn()
        timings[name] = time.perf_counter() - t0

    timed("oI1(3)", lambda: L.is_simple(L.derived_series(L.o_I(3, F2), 1).terms[0], method="exhaustive").simple)
    timed("oI1(5)", lambda: L.is_simple(L.derived_series(L.o_I(5, F2), 1).terms[0], method="exhaustive").simple)
    timed("oPi2(6)", lambda: L.is_simple(L.derived_series(L.o_Pi(6, F2), 2).terms[1], method="exhaustive").simple)
    timed("ooII1(2|1)", lambda: S.super_is_simple(S.super_derived_series(S.oo("II", 2, 1, F2), 1).terms[0]).simple)
    timed("ooPiPi2(4|2)", lambda: S.super_is_simple(S.super_derived_series(S.oo("PiPi", 4, 2, F2), 2).terms[1]).simple)

    def opi8():
        g = L.derived_series(L.o_Pi(8, F2), 2).terms[1]
        rep = L.center_only_ideal(g)
        return rep.unique_nontrivial_ideal and rep.quotient_simple and L.center(g).contains(identity(8, F2))

    def ooii31():
        g = S.super_derived_series(S.oo("II", 3, 1, F2), 1).terms[0]
        rep = S.super_center_only_ideal(g)
        z = S.super_center(g)
        one = S.identity_coords(g)
        return rep.unique_nontrivial_ideal and rep.quotient_simple and one is not None and np.array_equal(z[0], one)

    timed("oPi2(8) center only", opi8)
    timed("ooII1(3|1) center only", ooii31)
    ok = all(verdicts.values()) and all(t < 60 for t in timings.values())
    detail = ", ".join(f"{k} {'ok' if verdicts[k] else 'NO'} {timings[k]:.1f}s" for k in verdicts)
    report(7, "simplicity certificates", ok, detail)
    assert ok


def test_criterion_08_squaring_axioms():
    rng = np.random.default_rng(8)
    fails = []
    for m in (1, 2, 4):
        ctx = make_ctx(m)
        algebras = {
            "ooII(2|2)": S.oo("II", 2, 2, ctx),
            "ooII(3|1)": S.oo("II", 3, 1, ctx),
            "ooIPi(2|2)": S.oo("IPi", 2, 2, ctx),
            "ooPiPi(2|2)": S.oo("PiPi", 2, 2, ctx),
            "pe(2)": S.pe(2, ctx),
        }
        for name, g in list(algebras.items()):
            for i, t in enumerate(S.super_derived_series(g, 2).terms):
                algebras[f"{name}^({i + 1})"] = t
        for name, g in algebras.items():
            f = S.squaring_axiom_failures(g, rng, trials=100)
            if f:
                fails.append((ctx.name, name, f[:2]))
    ok = not fails
    report(8, "squaring axioms", ok, f"failures {fails[:3]}" if fails else "")
    assert ok


def _reference_odd_contact(b):
    """Rank of B + B^T and a brute-force search for x in its radical with x^T B x = 1."""
    n = b.n
    s = (b.a + b.a.T) & 1
    r2 = rank(FormMatrix._wrap(s, F2))
    tilde = False
    for x in itertools.product((0, 1), repeat=n):
        v = np.array(x, dtype=np.int64)
        if not ((s @ v) & 1).any() and int(v @ b.a @ v) & 1:
            tilde = True
            break
    return n == r2 or (n == r2 + 1 and tilde)


def test_criterion_09_contact():
    bad = []
    for n in range(1, 5):
        for code in range(1 << (n * n)):
            b = O.decode(code, n)
            even = is_contact(OneFormSpec.uniform(b, 0)).contact
            if even != (C.sociological_canon(b).label["rank"] == n):
                bad.append(("even", n, code))
            odd = is_contact(OneFormSpec.uniform(b, 1)).contact
            if odd != _reference_odd_contact(b):
                bad.append(("odd", n, code))
    for n in range(2, 9):
        if is_contact(OneFormSpec.uniform(identity(n, F2), 1)).contact:
            bad.append(("sum of squares", n))
    ok = not bad
    report(9, "contact verdicts against canon labels", ok, f"problems {bad[:3]}" if bad else "")
    assert ok


def test_criterion_10_albert():
    reasons = {}
    for n in range(1, 5):
        lab = O.orbit_labels(n, "albert")
        models = {}
        for r in range(0, n // 2 + 1):
            models[("Y", r)] = int(O.encode(standard_form("Y", n, F2, r).a))
            if 2 * r + 1 <= n:
                models[("Ytilde", r)] = int(O.encode(standard_form("Ytilde", n, F2, r).a))
        for code in range(1 << (n * n)):
            b = O.decode(code, n)
            hits = [key for key, mc in models.items() if lab[mc] == lab[code]]
            try:
                res = C.albert_canon(b)
            except C.ArfObstruction:
                res = None
            if len(hits) != 1:
                why = "no model, Arf invariant 1" if res is None and C.arf_invariant(b) == 1 else "no unique model"
            elif res is None:
                why = "canon refused a form with a model"
            elif not res.verify():
                why = "certificate"
            elif hits[0] != ("Ytilde" if res.label.tilde else "Y", res.label.r):
                why = "label disagrees with brute force"
            else:
                continue
            reasons[why] = reasons.get(why, 0) + 1
    ok = not reasons
    report(10, "Albert canonical forms over GF(2)", ok, f"failing matrices by reason {reasons}" if reasons else "")
    assert ok
