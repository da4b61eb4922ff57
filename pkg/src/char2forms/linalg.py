"""Row reduction over GF(2^m) on 2-D int64 numpy arrays.

Pivot rule: columns left to right, first nonzero row at or below the
current row.  Every basis returned here is in reduced row echelon form,
which makes it a canonical description of its span.
"""

from __future__ import annotations

import numpy as np

from .ff import FieldCtx, FieldError


def as_array(a) -> np.ndarray:
    return np.array(a, dtype=np.int64, copy=True)


def rref(ctx: FieldCtx, a) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.  Zero rows are kept."""
    r_mat = as_array(a)
    if r_mat.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    rows, cols = r_mat.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(r_mat[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            r_mat[[r, p]] = r_mat[[p, r]]
        lead = int(r_mat[r, c])
        if lead != 1:
            r_mat[r] = ctx.vscale(ctx.inv(lead), r_mat[r])
        col = r_mat[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            r_mat[mask] ^= ctx.vmul(col[mask][:, None], r_mat[r][None, :])
        pivots.append(c)
        r += 1
    return r_mat, pivots


def xor_rank(rows) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in basis:
                r ^= basis[h]
            else:
                basis[h] = r
                break
    return len(basis)


def pack_rows(a: np.ndarray) -> list[int]:
    """0/1 rows as int bitsets, bit j = column j (width must be < 63)."""
    w = 1 << np.arange(a.shape[1], dtype=np.int64)
    return [int(x) for x in (a @ w)]


def rank(ctx: FieldCtx, a) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    if ctx.m == 1 and a.shape[1] < 63:
        return xor_rank(pack_rows(a))
    return len(rref(ctx, a)[1])


def row_basis(ctx: FieldCtx, vectors, width: int | None = None) -> np.ndarray:
    """RREF basis (nonzero rows only) of the span of ``vectors``."""
    v = np.asarray(vectors, dtype=np.int64)
    if v.size == 0:
        w = width if width is not None else (v.shape[1] if v.ndim == 2 else 0)
        return np.zeros((0, w), dtype=np.int64)
    r_mat, piv = rref(ctx, v)
    return r_mat[: len(piv)]


def pivots_of(basis: np.ndarray) -> list[int]:
    """Pivot columns of an RREF basis with no zero rows."""
    return [int(np.flatnonzero(row)[0]) for row in basis]


def nullspace(ctx: FieldCtx, a) -> np.ndarray:
    """RREF basis of {x : a x = 0}, one vector per row."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r_mat, piv = rref(ctx, a)
    free = [c for c in range(cols) if c not in set(piv)]
    if not free:
        return np.zeros((0, cols), dtype=np.int64)
    k = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        k[t, f] = 1
        for i, p in enumerate(piv):
            k[t, p] = r_mat[i, f]
    return row_basis(ctx, k, cols)


def left_nullspace(ctx: FieldCtx, a) -> np.ndarray:
    return nullspace(ctx, np.asarray(a).T)


def inverse(ctx: FieldCtx, a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    r_mat, piv = rref(ctx, aug)
    if piv[:n] != list(range(n)):
        raise FieldError("matrix is singular")
    return r_mat[:, n:]


def solve_left(ctx: FieldCtx, basis: np.ndarray, v) -> np.ndarray | None:
    """Coefficients c with c @ basis = v for an RREF ``basis``, else None."""
    v = np.asarray(v, dtype=np.int64)
    if basis.shape[0] == 0:
        return np.zeros(0, dtype=np.int64) if not v.any() else None
    piv = pivots_of(basis)
    c = v[piv].copy()
    recon = np.bitwise_xor.reduce(ctx.vmul(c[:, None], basis), axis=0)
    if np.array_equal(recon, v):
        return c
    return None


def coords_matrix(ctx: FieldCtx, basis: np.ndarray, vectors) -> np.ndarray:
    """Coordinates (rows) of each row of ``vectors`` in an RREF basis.

    Raises ValueError if some vector is outside the span.
    """
    vectors = np.asarray(vectors, dtype=np.int64)
    if basis.shape[0] == 0:
        if vectors.any():
            raise ValueError("vector outside span")
        return np.zeros((vectors.shape[0], 0), dtype=np.int64)
    piv = pivots_of(basis)
    c = vectors[:, piv]
    recon = ctx.matmul(c, basis)
    if not np.array_equal(recon, vectors):
        raise ValueError("vector outside span")
    return c


def in_span(ctx: FieldCtx, basis: np.ndarray, v) -> bool:
    return solve_left(ctx, basis, v) is not None


def span_sum(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[0] == 0:
        return b.copy()
    if b.shape[0] == 0:
        return a.copy()
    return row_basis(ctx, np.concatenate([a, b]))


def span_contains(ctx: FieldCtx, big: np.ndarray, small: np.ndarray) -> bool:
    if small.shape[0] == 0:
        return True
    return span_sum(ctx, big, small).shape[0] == big.shape[0]


def span_equal(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> bool:
    ra = row_basis(ctx, a, a.shape[1] if a.ndim == 2 else None)
    rb = row_basis(ctx, b, b.shape[1] if b.ndim == 2 else None)
    return ra.shape == rb.shape and np.array_equal(ra, rb)


def intersect(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """RREF basis of span(a) ∩ span(b)."""
    width = a.shape[1]
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, width), dtype=np.int64)
    # x a = y b  <=>  [x y] [a; b] = 0
    stacked = np.concatenate([a, b])
    rel = left_nullspace(ctx, stacked)
    if rel.shape[0] == 0:
        return np.zeros((0, width), dtype=np.int64)
    vecs = ctx.matmul(rel[:, : a.shape[0]], a)
    return row_basis(ctx, vecs, width)


def reduce_mod(ctx: FieldCtx, basis: np.ndarray, v) -> np.ndarray:
    """Reduce v modulo an RREF basis (clear its pivot coordinates)."""
    v = np.array(v, dtype=np.int64, copy=True)
    for row, p in zip(basis, pivots_of(basis)):
        c = int(v[p])
        if c:
            v ^= ctx.vscale(c, row)
    return v


def complement(ctx: FieldCtx, basis: np.ndarray, n: int) -> np.ndarray:
    """Unit vectors at the non-pivot positions of an RREF basis."""
    piv = set(pivots_of(basis))
    idx = [j for j in range(n) if j not in piv]
    out = np.zeros((len(idx), n), dtype=np.int64)
    for t, j in enumerate(idx):
        out[t, j] = 1
    return out
