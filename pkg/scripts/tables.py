"""Reproduce the derived-series dimensions, fingerprints and simplicity verdicts."""

import argparse
import time

from char2forms import liealg as L
from char2forms import oracle
from char2forms import superalg as S
from char2forms.ff import make_ctx
from char2forms.mat import matrix


def derived_rows(ctx, depth):
    rows = []
    for n in range(2, 7):
        g = L.o_I(n, ctx)
        rows.append((f"o_I({n})", [g.dim, *L.derived_series(g, depth).dims]))
    for n in (2, 4, 6, 8):
        g = L.o_S(n, ctx)
        rows.append((f"o_S({n})", [g.dim, *L.derived_series(g, depth).dims]))
        g = L.o_Pi(n, ctx)
        rows.append((f"o_Pi({n})", [g.dim, *L.derived_series(g, depth).dims]))
    for kind, n0, n1 in (("II", 1, 1), ("II", 2, 1), ("II", 3, 1), ("IPi", 1, 2), ("IPi", 2, 2), ("PiPi", 2, 2), ("PiPi", 4, 2)):
        g = S.oo(kind, n0, n1, ctx)
        ds = S.super_derived_series(g, depth)
        rows.append((f"oo_{kind}({n0}|{n1})", [g.dims, *ds.sdims]))
    for k in (1, 2, 3):
        g = S.pe(k, ctx)
        rows.append((f"pe({k})", [g.dims, *S.super_derived_series(g, depth).sdims]))
    return rows


def simplicity_rows():
    f2 = make_ctx(1)
    out = []
    for name, g in (
        ("o_I^(1)(3)", L.derived_series(L.o_I(3, f2), 1).terms[0]),
        ("o_I^(1)(5)", L.derived_series(L.o_I(5, f2), 1).terms[0]),
        ("o_Pi^(2)(6)", L.derived_series(L.o_Pi(6, f2), 2).terms[1]),
    ):
        t0 = time.perf_counter()
        out.append((name, g.dim, L.is_simple(g).simple, time.perf_counter() - t0))
    g = L.derived_series(L.o_Pi(8, f2), 2).terms[1]
    t0 = time.perf_counter()
    out.append(("o_Pi^(2)(8) center only ideal", g.dim, L.center_only_ideal(g).unique_nontrivial_ideal, time.perf_counter() - t0))
    for name, g in (
        ("oo_II^(1)(2|1)", S.super_derived_series(S.oo("II", 2, 1, f2), 1).terms[0]),
        ("oo_PiPi^(2)(4|2)", S.super_derived_series(S.oo("PiPi", 4, 2, f2), 2).terms[1]),
    ):
        t0 = time.perf_counter()
        out.append((name, g.dim, S.super_is_simple(g).simple, time.perf_counter() - t0))
    g = S.super_derived_series(S.oo("II", 3, 1, f2), 1).terms[0]
    t0 = time.perf_counter()
    out.append(("oo_II^(1)(3|1) center only ideal", g.dim, S.super_center_only_ideal(g).unique_nontrivial_ideal, time.perf_counter() - t0))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", type=int, default=1, help="m for GF(2^m)")
    ap.add_argument("--depth", type=int, default=4)
    args = ap.parse_args()
    ctx = make_ctx(args.field)
    print(f"derived series over {ctx.name}")
    for name, dims in derived_rows(ctx, args.depth):
        print(f"  {name:<16} {dims}")
    print("\nfingerprints of the n = 4 census representatives (GF(2))")
    reps = list(oracle.enumerate_classes(4).representatives)
    rep = oracle.lie_equiv_cluster(reps)
    for i, (b, fp) in enumerate(zip(reps, rep.fingerprints)):
        print(f"  {i}: {b.tolist()}  {tuple(fp)}")
    print(f"  clusters: {[list(c) for c in rep.clusters]}")
    print("\nsimplicity over GF(2)")
    for name, dim, verdict, dt in simplicity_rows():
        print(f"  {name:<34} dim {dim:<3} {verdict}  [{dt:.2f}s]")


if __name__ == "__main__":
    main()
