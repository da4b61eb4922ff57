"""Canonical forms of bilinear forms with explicit witnesses.

Congruence results satisfy ``M · B · M^T = canonical``.  Offset results
(the sociological and quadratic-form relations) satisfy
``B = M · canonical · M^T + A`` with A symmetric, and additionally
zero-diagonal for the quadratic-form relation.

All reductions act by elementary congruences on a working copy W while
accumulating the row operations in M, so ``W = M B M^T`` at every step.
Pivot choices always take the smallest admissible index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from . import linalg
from .ff import FieldCtx, FieldError
from .mat import (
    FormMatrix,
    MatrixError,
    block,
    block_diag,
    identity,
    inverse,
    is_symmetric,
    is_zero_diagonal,
    rank,
    standard_form,
    zhat_witness,
)


class CanonError(ValueError):
    """Input outside the domain of a canonicalization."""


class ArfObstruction(CanonError):
    """A non-defective quadratic form with Arf invariant 1 has no Y(n, r) model over this field."""


class JordanError(CanonError):
    """Characteristic polynomial does not split over the field."""

    def __init__(self, msg: str, cofactor: list[int], factors: list[tuple[int, list[int]]]):
        super().__init__(msg)
        self.cofactor = cofactor
        self.factors = factors


class SymClass(NamedTuple):
    n: int
    r: int
    fully_isotropic: bool


class AlbertLabel(NamedTuple):
    n: int
    r: int
    tilde: bool


@dataclass(frozen=True)
class CanonResult:
    relation: str  # congruence | sociological | albert
    label: Any
    input: FormMatrix
    canonical: FormMatrix
    witness_M: FormMatrix
    witness_A: FormMatrix | None = None
    extra: dict = field(default_factory=dict)

    def verify(self) -> bool:
        """Re-check the certificate by direct matrix arithmetic."""
        m = self.witness_M
        if self.relation == "congruence":
            if m @ self.input @ m.T != self.canonical:
                return False
            # a non-degenerate canonical form already forces M to be invertible
            if getattr(self.label, "r", None) == m.rows:
                return True
            return rank(m) == m.rows
        if rank(m) != m.rows:
            return False
        a = self.witness_A
        if a is None or not is_symmetric(a):
            return False
        if self.relation == "albert" and not is_zero_diagonal(a):
            return False
        return self.input == m @ self.canonical @ m.T + a

    def label_dict(self) -> dict:
        lab = self.label
        if hasattr(lab, "_asdict"):
            return {k: (list(v) if isinstance(v, tuple) else v) for k, v in lab._asdict().items()}
        return dict(lab) if isinstance(lab, dict) else {"value": lab}


# elementary congruences on (W, M) ----------------------------------------


class _Work:
    """W = M B M^T maintained under elementary congruences."""

    def __init__(self, b: FormMatrix):
        self.ctx = b.ctx
        self.n = b.n
        self.w = np.array(b.a, dtype=np.int64)
        self.m = np.eye(self.n, dtype=np.int64)

    def swap(self, i: int, j: int) -> None:
        if i == j:
            return
        w = self.w
        w[[i, j]] = w[[j, i]]
        w[:, [i, j]] = w[:, [j, i]]
        self.m[[i, j]] = self.m[[j, i]]

    def scale(self, i: int, c: int) -> None:
        if c == 1:
            return
        ctx = self.ctx
        self.w[i] = ctx.vscale(c, self.w[i])
        self.w[:, i] = ctx.vscale(c, self.w[:, i])
        self.m[i] = ctx.vscale(c, self.m[i])

    def add_rows(self, coef: np.ndarray, p: int) -> None:
        """row_k += coef[k] * row_p (and the matching columns); coef[p] must be 0."""
        if not coef.any():
            return
        ctx = self.ctx
        self.w ^= ctx.vmul(coef[:, None], self.w[p][None, :])
        self.w ^= ctx.vmul(self.w[:, p][:, None], coef[None, :])
        self.m ^= ctx.vmul(coef[:, None], self.m[p][None, :])

    def apply(self, e: np.ndarray, lo: int) -> None:
        """Congruence by a block matrix e acting on indices lo..lo+len(e)-1."""
        ctx = self.ctx
        k = e.shape[0]
        full = np.eye(self.n, dtype=np.int64)
        full[lo : lo + k, lo : lo + k] = e
        self.w = ctx.matmul(ctx.matmul(full, self.w), full.T)
        self.m = ctx.matmul(full, self.m)

    def result(self) -> tuple[FormMatrix, FormMatrix]:
        return FormMatrix._wrap(self.w, self.ctx), FormMatrix._wrap(self.m, self.ctx)


def _reduce_zd_inplace(wk: _Work, p: int) -> int:
    """Reduce the zero-diagonal symmetric block W[p:, p:] to Z-blocks; returns its rank."""
    ctx = wk.ctx
    n = wk.n
    r = 0
    while p < n:
        nz = np.argwhere(wk.w[p:, p:])
        if nz.size == 0:
            break
        i, j = int(nz[0, 0]) + p, int(nz[0, 1]) + p
        wk.swap(p, i)
        if j == p:
            j = i
        wk.swap(p + 1, j)
        wk.scale(p, ctx.inv(int(wk.w[p, p + 1])))
        a = wk.w[:, p].copy()
        b = wk.w[:, p + 1].copy()
        a[: p + 2] = 0
        b[: p + 2] = 0
        # row_k += a_k row_{p+1} + b_k row_p; both pivot rows are untouched
        if a.any() or b.any():
            wk.w ^= ctx.vmul(a[:, None], wk.w[p + 1][None, :]) ^ ctx.vmul(b[:, None], wk.w[p][None, :])
            wk.w ^= ctx.vmul(wk.w[:, p + 1][:, None], a[None, :]) ^ ctx.vmul(wk.w[:, p][:, None], b[None, :])
            wk.m ^= ctx.vmul(a[:, None], wk.m[p + 1][None, :]) ^ ctx.vmul(b[:, None], wk.m[p][None, :])
        p += 2
        r += 2
    return r


def reduce_zero_diagonal(b: FormMatrix) -> CanonResult:
    """Congruence to Z~(n, r) for a symmetric zero-diagonal B."""
    if not is_symmetric(b):
        raise CanonError("input is not symmetric")
    if not is_zero_diagonal(b):
        raise CanonError("input is not zero-diagonal")
    wk = _Work(b)
    r = _reduce_zd_inplace(wk, 0)
    canon, m = wk.result()
    return CanonResult("congruence", SymClass(b.n, r, True), b, canon, m)


def _reduce_nondegenerate(b: FormMatrix) -> tuple[FormMatrix, FormMatrix] | None:
    """Congruence of a symmetric B with a nonzero diagonal entry to 1_n.

    Returns None if B turns out to be degenerate.
    """
    ctx = b.ctx
    n = b.n
    wk = _Work(b)
    p = 0
    while p < n:
        diag = np.flatnonzero(np.diagonal(wk.w)[p:])
        if diag.size == 0:
            # remaining block is alternating: bring it to Z, then fold Zhat into 1
            if _reduce_zd_inplace(wk, p) < n - p:
                return None
            size = n - p + 1
            wk.apply(linalg.inverse(ctx, zhat_witness(size, ctx).a), p - 1)
            break
        i = int(diag[0]) + p
        wk.swap(p, i)
        wk.scale(p, ctx.inv(ctx.sqrt(int(wk.w[p, p]))))
        coef = wk.w[:, p].copy()
        coef[: p + 1] = 0
        wk.add_rows(coef, p)
        p += 1
    w, m = wk.result()
    if w != identity(n, ctx):  # pragma: no cover - internal consistency
        raise CanonError("symmetric reduction did not reach the identity")
    return w, m


def reduce_symmetric(b: FormMatrix) -> CanonResult:
    """Congruence canonical form of a symmetric matrix.

    Zero-diagonal input goes to Z~(n, r); otherwise the result is
    diag(1_r, 0).  The radical is split off first: its RREF basis goes
    last and unit vectors at the non-pivot positions span a complement.
    """
    if not is_symmetric(b):
        raise CanonError("input is not symmetric")
    if is_zero_diagonal(b):
        return reduce_zero_diagonal(b)
    ctx = b.ctx
    n = b.n
    full = _reduce_nondegenerate(b)
    if full is not None:
        canon, m = full
        return CanonResult("congruence", SymClass(n, n, False), b, canon, m)
    ker = linalg.nullspace(ctx, b.a)
    r = n - ker.shape[0]
    comp = linalg.complement(ctx, ker, n)
    p = FormMatrix._wrap(np.concatenate([comp, ker]), ctx)
    split = p @ b @ p.T
    inner = split.block(0, r, 0, r)
    _, m_inner = _reduce_nondegenerate(inner)  # type: ignore[misc]
    m = block_diag(m_inner, identity(n - r, ctx)) @ p
    canon = block_diag(identity(r, ctx), FormMatrix._wrap(np.zeros((n - r, n - r), dtype=np.int64), ctx))
    return CanonResult("congruence", SymClass(n, r, False), b, canon, m)


def sym_class(b: FormMatrix) -> SymClass:
    if not is_symmetric(b):
        raise CanonError("input is not symmetric")
    return SymClass(b.n, rank(b), is_zero_diagonal(b))


def equiv_symmetric(b: FormMatrix, c: FormMatrix) -> tuple[bool, FormMatrix | None]:
    """Decide congruence of symmetric B and C; the witness X gives X B X^T = C."""
    if b.shape != c.shape:
        raise CanonError("dimension mismatch")
    if b.ctx != c.ctx:
        raise FieldError("context mismatch")
    rb, rc = reduce_symmetric(b), reduce_symmetric(c)
    if rb.label != rc.label:
        return False, None
    x = inverse(rc.witness_M) @ rb.witness_M
    return True, x


# sociological classes -----------------------------------------------------


def sociological_rank(b: FormMatrix) -> int:
    return rank(b + b.T)


def sociological_canon(b: FormMatrix) -> CanonResult:
    """B = M · S~^{n, r/2} · M^T + A with A symmetric and r = rank(B + B^T)."""
    if b.rows != b.cols:
        raise CanonError("input is not square")
    ctx = b.ctx
    n = b.n
    s = b + b.T
    zres = reduce_zero_diagonal(s)
    r = zres.label.r
    half = r // 2
    # move pair k from positions (2k, 2k+1) to (k, n-1-k); the rest keeps its order
    perm = np.zeros((n, n), dtype=np.int64)
    for k in range(half):
        perm[k, 2 * k] = 1
        perm[n - 1 - k, 2 * k + 1] = 1
    for t, src in enumerate(range(r, n)):
        perm[half + t, src] = 1
    nmat = FormMatrix._wrap(perm, ctx) @ zres.witness_M
    stilde = standard_form("Stilde", n, ctx, half)
    w = inverse(nmat)
    a = b + w @ stilde @ w.T
    return CanonResult("sociological", {"rank": r}, b, stilde, w, a)


def sociological_equivalent(b: FormMatrix, c: FormMatrix) -> bool:
    return b.shape == c.shape and sociological_rank(b) == sociological_rank(c)


# quadratic forms (Albert) --------------------------------------------------


class _Quad:
    def __init__(self, b: FormMatrix):
        self.ctx = b.ctx
        self.b = b.a
        self.s = (b + b.T).a

    def q(self, x: np.ndarray) -> int:
        ctx = self.ctx
        return int(ctx.matmul(ctx.matmul(x[None, :], self.b), x[:, None])[0, 0])

    def pol(self, x: np.ndarray, y: np.ndarray) -> int:
        ctx = self.ctx
        return int(ctx.matmul(ctx.matmul(x[None, :], self.s), y[:, None])[0, 0])


def _radical(qd: _Quad) -> np.ndarray:
    return linalg.nullspace(qd.ctx, qd.s)


def albert_label(b: FormMatrix) -> AlbertLabel:
    """(n, r, tilde) with 2r = rank(B + B^T) and tilde iff x^T B x is nonzero on the radical.

    x -> x^T B x is additive on the radical of B + B^T, so it suffices to
    test a basis.  This is the complete invariant over an algebraically
    closed field.
    """
    if b.rows != b.cols:
        raise CanonError("input is not square")
    qd = _Quad(b)
    rad = _radical(qd)
    tilde = any(qd.q(v) for v in rad)
    return AlbertLabel(b.n, (b.n - rad.shape[0]) // 2, tilde)


def _solve_artin_schreier(ctx: FieldCtx, c: int) -> int | None:
    """Some t with t^2 + t = c, or None."""
    vals = ctx.sq_table ^ np.arange(ctx.q, dtype=np.int64)
    hit = np.flatnonzero(vals == c)
    return int(hit[0]) if hit.size else None


def _complement_basis(qd: _Quad, rad: np.ndarray) -> np.ndarray:
    """RREF basis of the unit vectors reduced modulo the radical."""
    ctx = qd.ctx
    n = qd.s.shape[0]
    return linalg.row_basis(ctx, np.array([linalg.reduce_mod(ctx, rad, v) for v in np.eye(n, dtype=np.int64)]), n)


def arf_invariant(b: FormMatrix) -> int | None:
    """Arf invariant (0 or 1) of x^T B x, or None when the form is defective.

    Computed as the absolute trace of sum Q(e_i) Q(f_i) over a symplectic
    basis with S(e_i, f_i) = 1.
    """
    qd = _Quad(b)
    ctx = qd.ctx
    rad = _radical(qd)
    if any(qd.q(v) for v in rad):
        return None
    work = _complement_basis(qd, rad)
    total = 0
    while work.shape[0]:
        e = work[0]
        partners = [k for k in range(1, work.shape[0]) if qd.pol(e, work[k])]
        if not partners:  # pragma: no cover - work spans a complement of the radical
            raise CanonError("degenerate symplectic step")
        f = ctx.vscale(ctx.inv(qd.pol(e, work[partners[0]])), work[partners[0]])
        total ^= ctx.mul(qd.q(e), qd.q(f))
        work = _project_out(qd, rad, work, e, f)
    return ctx.trace(total)


def _project_out(qd: _Quad, rad: np.ndarray, work: np.ndarray, e: np.ndarray, f: np.ndarray) -> np.ndarray:
    """x -> x + S(x, f) e + S(x, e) f (S(e, f) = 1), reduced mod the radical."""
    ctx = qd.ctx
    out = []
    for x in work:
        y = x ^ ctx.vscale(qd.pol(x, f), e) ^ ctx.vscale(qd.pol(x, e), f)
        out.append(linalg.reduce_mod(ctx, rad, y))
    n = work.shape[1]
    return linalg.row_basis(ctx, np.array(out).reshape(-1, n), n)


def _isotropic_vector(qd: _Quad, rad: np.ndarray, work: np.ndarray, w1: np.ndarray | None):
    """A non-radical vector e with Q(e) = 0 in span(work) + rad, or None."""
    ctx = qd.ctx
    k = work.shape[0]
    for a in range(k):
        if qd.q(work[a]) == 0:
            return work[a]
    x = work[0]
    if w1 is not None:
        return x ^ ctx.vscale(ctx.sqrt(qd.q(x)), w1)
    y = next(work[t] for t in range(1, k) if qd.pol(x, work[t]))
    qa, bb, qc = qd.q(y), qd.pol(x, y), qd.q(x)
    # Q(x + s y) = qc + bb s + qa s^2; put s = (bb / qa) t
    t = _solve_artin_schreier(ctx, ctx.div(ctx.mul(qc, qa), ctx.mul(bb, bb)))
    if t is not None:
        s = ctx.mul(ctx.div(bb, qa), t)
        return x ^ ctx.vscale(s, y)
    inv = ctx.inv(bb)
    f = ctx.vscale(inv, y)
    rest = _project_out(qd, rad, work, x, f) if qd.pol(x, f) == 1 else work[:0]
    for z in rest:
        qz = qd.q(z)
        if qz == 0:
            return z
        return x ^ ctx.vscale(ctx.sqrt(ctx.div(qc, qz)), z)
    return None


def albert_canon(b: FormMatrix) -> CanonResult:
    """B = M · Y · M^T + A with Y = Y(n, r) or Y~(n, r) and A symmetric zero-diagonal.

    The construction builds hyperbolic pairs (e_i, f_i) with
    Q(e_i) = Q(f_i) = 0 and S(e_i, f_j) = delta_ij, then a radical basis
    whose first vector has Q = 1 in the tilde case and all others Q = 0.
    Raises :class:`ArfObstruction` when the form is non-defective with Arf
    invariant 1, which has no such model over a finite field.
    """
    if b.rows != b.cols:
        raise CanonError("input is not square")
    ctx = b.ctx
    n = b.n
    qd = _Quad(b)
    rad = _radical(qd)
    w1 = None
    rad_rows = []
    for idx, u in enumerate(rad):
        if qd.q(u):
            w1 = ctx.vscale(ctx.inv(ctx.sqrt(qd.q(u))), u)
            rad_rows = [w1] + [v ^ ctx.vscale(ctx.sqrt(qd.q(v)), w1) for t, v in enumerate(rad) if t != idx]
            break
    else:
        rad_rows = list(rad)
    label = AlbertLabel(n, (n - rad.shape[0]) // 2, w1 is not None)
    if not label.tilde and arf_invariant(b) == 1:
        raise ArfObstruction(
            f"quadratic form has Arf invariant 1 over {ctx.name}; it is equivalent to Y({n},{label.r}) only over an extension"
        )
    work = _complement_basis(qd, rad)
    es, fs = [], []
    while work.shape[0]:
        e = _isotropic_vector(qd, rad, work, w1)
        if e is None:  # pragma: no cover - excluded by the Arf check
            raise ArfObstruction("anisotropic plane left over")
        j = next(t for t in range(work.shape[0]) if qd.pol(e, work[t]))
        f = ctx.vscale(ctx.inv(qd.pol(e, work[j])), work[j])
        f = f ^ ctx.vscale(qd.q(f), e)
        es.append(e)
        fs.append(f)
        work = _project_out(qd, rad, work, e, f)
    rows = es + fs + rad_rows
    nmat = FormMatrix._wrap(np.array(rows, dtype=np.int64).reshape(n, n), ctx)
    kind = "Ytilde" if label.tilde else "Y"
    canon = standard_form(kind, n, ctx, label.r)
    w = inverse(nmat)
    a = b + w @ canon @ w.T
    return CanonResult("albert", label, b, canon, w, a)


def albert_equivalent(b: FormMatrix, c: FormMatrix) -> bool:
    """Equal labels and, for non-defective forms, equal Arf invariants."""
    if b.shape != c.shape:
        return False
    lb, lc = albert_label(b), albert_label(c)
    if lb != lc:
        return False
    return lb.tilde or arf_invariant(b) == arf_invariant(c)


def offset_equivalence(rb: CanonResult, rc: CanonResult) -> CanonResult | None:
    """Witness B = N C N^T + A' from canonical reductions of B and C.

    Returns None when the canonical forms differ.  The result uses the
    offset convention of :class:`CanonResult` with ``canonical`` set to C.
    """
    if rb.relation != rc.relation or rb.relation == "congruence":
        raise CanonError("offset equivalence needs two sociological or two Albert reductions")
    if rb.canonical != rc.canonical:
        return None
    nmat = rb.witness_M @ inverse(rc.witness_M)
    a = rb.witness_A + nmat @ rc.witness_A @ nmat.T
    return CanonResult(rb.relation, rb.label, rb.input, rc.input, nmat, a)


def congruence_equivalence(b: FormMatrix, c: FormMatrix) -> CanonResult | None:
    """Symmetric congruence as a certificate X B X^T = C, or None."""
    ok, x = equiv_symmetric(b, c)
    if not ok:
        return None
    return CanonResult("congruence", sym_class(b), b, c, x)


# supermatrices ----------------------------------------------------------


def _blocks(b: FormMatrix, n0: int, n1: int):
    if b.rows != b.cols or b.n != n0 + n1:
        raise CanonError(f"matrix size {b.shape} does not match superdimension ({n0}|{n1})")
    n = n0 + n1
    return b.block(0, n0, 0, n0), b.block(0, n0, n0, n), b.block(n0, n, 0, n0), b.block(n0, n, n0, n)


def super_even_canon(b: FormMatrix, sdim: tuple[int, int]) -> CanonResult:
    """Blockwise symmetric reduction of an even symmetric super form."""
    n0, n1 = sdim
    b00, b01, b10, b11 = _blocks(b, n0, n1)
    if not (b01.is_zero() and b10.is_zero()):
        raise CanonError("an even form must be block-diagonal in standard format")
    res0 = reduce_symmetric(b00) if n0 else None
    res1 = reduce_symmetric(b11) if n1 else None
    blocks_m = [r.witness_M for r in (res0, res1) if r is not None]
    blocks_c = [r.canonical for r in (res0, res1) if r is not None]
    m = block_diag(*blocks_m)
    canon = block_diag(*blocks_c)
    label = {"even": res0.label_dict() if res0 else None, "odd": res1.label_dict() if res1 else None}
    return CanonResult("congruence", label, b, canon, m)


def super_odd_sym_canon(b: FormMatrix, k: int) -> CanonResult:
    """Odd symmetric form [[0, X], [X^T, 0]] on (k|k) to Pi_{2k}; witness diag(1_k, X^{-T})."""
    b00, b01, b10, b11 = _blocks(b, k, k)
    if not (b00.is_zero() and b11.is_zero()):
        raise CanonError("an odd form must have zero diagonal blocks")
    if b10 != b01.T:
        raise CanonError("odd form is not symmetric")
    try:
        xinv = inverse(b01)
    except MatrixError as exc:
        raise CanonError("odd form is degenerate") from exc
    m = block_diag(identity(k, b.ctx), xinv.T)
    canon = standard_form("Pi", 2 * k, b.ctx)
    return CanonResult("congruence", {"k": k}, b, canon, m)


# Jordan form -------------------------------------------------------------


def _poly_trim(p: list[int]) -> list[int]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] ^= ctx.mul(x, y)
    return _poly_trim(out)


def _poly_divmod(ctx: FieldCtx, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    a = _poly_trim(a)
    b = _poly_trim(b)
    if not b:
        raise FieldError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = ctx.inv(b[-1])
    while len(a) >= len(b) and a:
        c = ctx.mul(a[-1], inv)
        sh = len(a) - len(b)
        q[sh] = c
        for i, y in enumerate(b):
            a[sh + i] ^= ctx.mul(c, y)
        a = _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_divmod(ctx, a, b)[1]
    if a:
        inv = ctx.inv(a[-1])
        a = [ctx.mul(inv, c) for c in a]
    return a


def _poly_eval(ctx: FieldCtx, p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = ctx.mul(acc, x) ^ c
    return acc


def char_poly(ctx: FieldCtx, t: np.ndarray) -> list[int]:
    """Coefficients (low to high) of det(x I - T) by Berkowitz's algorithm."""
    n = t.shape[0]
    if n == 0:
        return [1]
    # vector of coefficients, high degree first
    c = [1, int(t[0, 0])]  # x - a (signs vanish)
    for r in range(1, n):
        a = t[r, r]
        row = t[r, :r]
        col = t[:r, r]
        sub = t[:r, :r]
        # Toeplitz column: 1, a, R C, R S C, R S^2 C, ...
        col_vals = [1, int(a)]
        v = col.copy()
        for _ in range(r):
            col_vals.append(int(ctx.matmul(row[None, :], v[:, None])[0, 0]))
            v = ctx.matmul(sub, v[:, None])[:, 0]
        new = [0] * (r + 2)
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, len(c) - 1) + 1):
                if i - j < len(col_vals):
                    acc ^= ctx.mul(col_vals[i - j], c[j])
            new[i] = acc
        c = new
    return list(reversed(c))


def _ddf(ctx: FieldCtx, f: list[int]) -> list[tuple[int, list[int]]]:
    """Distinct-degree factorization of a squarefree-or-not monic f."""
    out = []
    rem = _poly_trim(f)
    xq = [0, 1]
    d = 0
    while len(rem) > 1:
        d += 1
        if 2 * d > len(rem) - 1:
            out.append((len(rem) - 1, rem))
            break
        for _ in range(ctx.m):
            xq = _poly_divmod(ctx, _poly_mul(ctx, xq, xq), rem)[1]
        g = _poly_gcd(ctx, rem, _poly_trim([c ^ (1 if i == 1 else 0) for i, c in enumerate(xq + [0, 0])]))
        if len(g) > 1:
            out.append((d, g))
            while True:
                quo, r = _poly_divmod(ctx, rem, g)
                if r:
                    break
                rem = quo
                gg = _poly_gcd(ctx, rem, g)
                if len(gg) <= 1:
                    break
            xq = _poly_divmod(ctx, xq, rem)[1] if len(rem) > 1 else xq
    return out


class JordanBlock(NamedTuple):
    eigenvalue: int
    size: int


def jordan_form(ctx: FieldCtx, t: np.ndarray) -> tuple[np.ndarray, np.ndarray, list[JordanBlock]]:
    """(J, P, blocks) with P T P^{-1} = J, upper Jordan blocks sorted by (eigenvalue, -size)."""
    t = np.asarray(t, dtype=np.int64)
    k = t.shape[0]
    cp = char_poly(ctx, t)
    roots: list[tuple[int, int]] = []
    rem = cp
    for lam in range(ctx.q):
        mult = 0
        while len(rem) > 1 and _poly_eval(ctx, rem, lam) == 0:
            rem = _poly_divmod(ctx, rem, [lam, 1])[0]
            mult += 1
        if mult:
            roots.append((lam, mult))
    if len(rem) > 1:
        factors = _ddf(ctx, rem)
        raise JordanError(
            f"characteristic polynomial does not split over {ctx.name}; cofactor {rem} (low to high)",
            rem,
            factors,
        )
    cols: list[np.ndarray] = []
    blocks: list[JordanBlock] = []
    eye = np.eye(k, dtype=np.int64)
    for lam, mult in roots:
        nmat = t ^ ctx.vscale(lam, eye)
        powers = [eye]
        kers = [np.zeros((0, k), dtype=np.int64)]
        while kers[-1].shape[0] < mult:
            powers.append(ctx.matmul(powers[-1], nmat))
            kers.append(linalg.nullspace(ctx, powers[-1]))
        top = len(kers) - 1
        count = [kers[s].shape[0] - kers[s - 1].shape[0] for s in range(1, top + 1)] + [0]
        chosen: list[tuple[np.ndarray, int]] = []
        for s in range(top, 0, -1):
            need = count[s - 1] - count[s]
            span = kers[s - 1]
            for v, size in chosen:
                span = linalg.span_sum(ctx, span, ctx.matmul(powers[size - s], v[:, None])[:, 0][None, :])
            got = 0
            for v in kers[s]:
                if got == need:
                    break
                if not linalg.in_span(ctx, span, v):
                    chosen.append((v, s))
                    span = linalg.span_sum(ctx, span, v[None, :])
                    got += 1
        for v, s in chosen:
            for j in range(s - 1, -1, -1):
                cols.append(ctx.matmul(powers[j], v[:, None])[:, 0])
            blocks.append(JordanBlock(lam, s))
    # chosen order is already size-descending per eigenvalue; eigenvalues ascend
    v = np.array(cols, dtype=np.int64).T.reshape(k, k)
    p = linalg.inverse(ctx, v)
    j = ctx.matmul(ctx.matmul(p, t), v)
    return j, p, blocks


def super_odd_nonsym_canon(b: FormMatrix, k: int) -> CanonResult:
    """Odd form [[0, A], [C, 0]] on (k|k) to [[0, 1], [L, 0]], L the Jordan form of C A^{-T}."""
    ctx = b.ctx
    b00, a, c, b11 = _blocks(b, k, k)
    if not (b00.is_zero() and b11.is_zero()):
        raise CanonError("an odd form must have zero diagonal blocks")
    try:
        ainv = inverse(a)
        inverse(c)
    except MatrixError as exc:
        raise CanonError("odd form blocks must be invertible") from exc
    t = c @ ainv.T
    jmat, p, blocks = jordan_form(ctx, t.a)
    pm = FormMatrix._wrap(p, ctx)
    m = block_diag(inverse(pm).T @ ainv, pm)
    jf = FormMatrix._wrap(jmat, ctx)
    z = FormMatrix._wrap(np.zeros((k, k), dtype=np.int64), ctx)
    canon = block([[z, identity(k, ctx)], [jf, z]])
    label = {"blocks": [[bl.eigenvalue, bl.size] for bl in blocks]}
    return CanonResult("congruence", label, b, canon, m)
