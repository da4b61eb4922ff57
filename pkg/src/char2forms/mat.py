"""Dense matrices over GF(2^m) and the standard Gram matrices.

A :class:`FormMatrix` wraps a read-only int64 numpy array together with its
field context.  Entries are raw field ints (see :mod:`char2forms.ff`).
Indices in the named constructors are 1-based, matching the usual
E^{ij} notation; everything else is 0-based numpy indexing.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .ff import FieldCtx, FieldError, make_ctx, parse_field

MAX_N = 64


class MatrixError(ValueError):
    """Dimension mismatch, bad parameters or a singular matrix."""


class ParseError(ValueError):
    """Malformed matrix text."""


def _ctx(ctx_or_m) -> FieldCtx:
    if isinstance(ctx_or_m, FieldCtx):
        return ctx_or_m
    if isinstance(ctx_or_m, str):
        return parse_field(ctx_or_m)
    return make_ctx(int(ctx_or_m))


class FormMatrix:
    """Immutable matrix over a field context."""

    __slots__ = ("a", "ctx")

    def __init__(self, entries, ctx: FieldCtx):
        a = np.array(entries, dtype=np.int64, copy=True)
        if a.ndim != 2:
            raise MatrixError("matrix entries must be 2-D")
        if a.size and (a.min() < 0 or a.max() >= ctx.q):
            raise MatrixError(f"entry out of range for {ctx.name}")
        a.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "ctx", ctx)

    @classmethod
    def _wrap(cls, a: np.ndarray, ctx: FieldCtx) -> "FormMatrix":
        """Trusted constructor: no range check."""
        obj = cls.__new__(cls)
        a = np.array(a, dtype=np.int64, copy=True)
        a.flags.writeable = False
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "ctx", ctx)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FormMatrix is immutable")

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def n(self) -> int:
        if self.rows != self.cols:
            raise MatrixError("matrix is not square")
        return self.rows

    @property
    def T(self) -> "FormMatrix":
        return FormMatrix._wrap(self.a.T, self.ctx)

    def _same(self, other: "FormMatrix") -> None:
        if not isinstance(other, FormMatrix):
            raise TypeError(f"expected FormMatrix, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise FieldError(f"context mismatch: {self.ctx.name} vs {other.ctx.name}")

    def __add__(self, other: "FormMatrix") -> "FormMatrix":
        self._same(other)
        if self.shape != other.shape:
            raise MatrixError(f"cannot add {self.shape} and {other.shape}")
        return FormMatrix._wrap(self.a ^ other.a, self.ctx)

    __sub__ = __add__

    def __matmul__(self, other: "FormMatrix") -> "FormMatrix":
        self._same(other)
        if self.cols != other.rows:
            raise MatrixError(f"cannot multiply {self.shape} by {other.shape}")
        return FormMatrix._wrap(self.ctx.matmul(self.a, other.a), self.ctx)

    def scale(self, c: int) -> "FormMatrix":
        return FormMatrix._wrap(self.ctx.vscale(c, self.a), self.ctx)

    def congruent_by(self, m: "FormMatrix") -> "FormMatrix":
        """M · self · M^T."""
        return m @ self @ m.T

    def is_zero(self) -> bool:
        return not self.a.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormMatrix)
            and self.ctx == other.ctx
            and self.shape == other.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.shape, self.a.tobytes()))

    def __getitem__(self, idx):
        return self.a[idx]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "FormMatrix":
        return FormMatrix._wrap(self.a[r0:r1, c0:c1], self.ctx)

    def flat(self) -> np.ndarray:
        return self.a.reshape(-1).copy()

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()

    def __repr__(self) -> str:
        return f"FormMatrix({self.a.tolist()}, {self.ctx.name})"


# constructors ------------------------------------------------------------


def matrix(rows, ctx_or_m=1) -> FormMatrix:
    return FormMatrix(rows, _ctx(ctx_or_m))


def zeros(r: int, c: int | None, ctx: FieldCtx) -> FormMatrix:
    return FormMatrix._wrap(np.zeros((r, r if c is None else c), dtype=np.int64), ctx)


def identity(n: int, ctx: FieldCtx) -> FormMatrix:
    return FormMatrix._wrap(np.eye(n, dtype=np.int64), ctx)


def from_flat(v, n: int, ctx: FieldCtx) -> FormMatrix:
    return FormMatrix._wrap(np.asarray(v, dtype=np.int64).reshape(n, n), ctx)


def block_diag(*blocks: FormMatrix) -> FormMatrix:
    if not blocks:
        raise MatrixError("block_diag needs at least one block")
    ctx = blocks[0].ctx
    r = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    out = np.zeros((r, c), dtype=np.int64)
    i = j = 0
    for b in blocks:
        if b.ctx != ctx:
            raise FieldError("context mismatch in block_diag")
        out[i : i + b.rows, j : j + b.cols] = b.a
        i += b.rows
        j += b.cols
    return FormMatrix._wrap(out, ctx)


def block(grid: list[list[FormMatrix]]) -> FormMatrix:
    ctx = grid[0][0].ctx
    try:
        arr = np.block([[m.a for m in row] for row in grid])
    except ValueError as exc:
        raise MatrixError(f"incompatible block shapes: {exc}") from exc
    return FormMatrix._wrap(arr, ctx)


def _antidiag(n: int) -> np.ndarray:
    return np.fliplr(np.eye(n, dtype=np.int64)) if n else np.zeros((0, 0), dtype=np.int64)


def _z(n: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(0, n - 1, 2):
        a[i, i + 1] = a[i + 1, i] = 1
    return a


def standard_form(kind: str, n: int, ctx: FieldCtx, *params: int) -> FormMatrix:
    """Named Gram matrices.

    ``identity``, ``S`` (antidiagonal), ``Pi`` and ``J`` (off-diagonal identity
    blocks; J equals Pi in characteristic 2), ``Z`` (diagonal Pi_2 blocks),
    ``Zhat`` (1 followed by Z(n-1)), ``Ztilde`` r, ``Stilde`` m, ``Y`` r,
    ``Ytilde`` r, ``E`` i j and ``T`` i j.
    """
    if n < 0 or n > MAX_N:
        raise MatrixError(f"n must be in 0..{MAX_N}")
    a = np.zeros((n, n), dtype=np.int64)

    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise MatrixError(f"{kind}: {msg}")

    nparams = {"Ztilde": 1, "Stilde": 1, "Y": 1, "Ytilde": 1, "E": 2, "T": 2}.get(kind, 0)
    need(len(params) == nparams, f"expects {nparams} parameter(s), got {len(params)}")

    if kind == "identity":
        a = np.eye(n, dtype=np.int64)
    elif kind == "S":
        a = _antidiag(n)
    elif kind in ("Pi", "J"):
        need(n % 2 == 0, "n must be even")
        k = n // 2
        a[:k, k:] = np.eye(k, dtype=np.int64)
        a[k:, :k] = np.eye(k, dtype=np.int64)
    elif kind == "Z":
        need(n % 2 == 0, "n must be even")
        a = _z(n)
    elif kind == "Zhat":
        need(n % 2 == 1, "n must be odd")
        a[0, 0] = 1
        a[1:, 1:] = _z(n - 1)
    elif kind == "Ztilde":
        (r,) = params
        need(0 <= r <= n and r % 2 == 0, "need 0 <= r <= n with r even")
        a[:r, :r] = _z(r)
    elif kind == "Stilde":
        (m,) = params
        need(0 <= 2 * m <= n, "need 0 <= 2m <= n")
        for i in range(m):
            a[i, n - 1 - i] = 1
    elif kind == "Y":
        (r,) = params
        need(0 <= 2 * r <= n, "need 2r <= n")
        a[:r, r : 2 * r] = np.eye(r, dtype=np.int64)
    elif kind == "Ytilde":
        (r,) = params
        need(0 <= r and 2 * r + 1 <= n, "need 2r + 1 <= n")
        a[:r, r : 2 * r] = np.eye(r, dtype=np.int64)
        a[2 * r, 2 * r] = 1
    elif kind in ("E", "T"):
        i, j = params
        need(1 <= i <= n and 1 <= j <= n, "indices out of range")
        if kind == "E":
            a[i - 1, j - 1] = 1
        else:
            need(i != j, "indices must differ")
            a = np.eye(n, dtype=np.int64)
            a[i - 1, i - 1] = a[j - 1, j - 1] = 0
            a[i - 1, j - 1] = a[j - 1, i - 1] = 1
    else:
        raise MatrixError(f"unknown standard form {kind!r}")
    return FormMatrix._wrap(a, ctx)


def zhat_witness(n: int, ctx: FieldCtx) -> FormMatrix:
    """The 0/1 matrix M with M M^T = Zhat(n), n odd."""
    if n % 2 != 1:
        raise MatrixError("zhat_witness needs odd n")
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == 1 or j == 1 or j == i or j > i + 1 or (j == i + 1 and i % 2 == 1):
                a[i - 1, j - 1] = 1
    return FormMatrix._wrap(a, ctx)


# arithmetic and predicates -----------------------------------------------


def mat_arith(op: str, a: FormMatrix, b: FormMatrix | None = None) -> FormMatrix:
    if op == "mul":
        return a @ b
    if op == "add":
        return a + b
    if op == "transpose":
        return a.T
    raise MatrixError(f"unknown matrix operation {op!r}")


def rank(a: FormMatrix) -> int:
    return linalg.rank(a.ctx, a.a)


def kernel(a: FormMatrix) -> np.ndarray:
    """Echelonized basis (rows) of {x : A x = 0}."""
    return linalg.nullspace(a.ctx, a.a)


def rank_and_kernel(a: FormMatrix) -> tuple[int, np.ndarray]:
    return rank(a), kernel(a)


def inverse(a: FormMatrix) -> FormMatrix:
    try:
        return FormMatrix._wrap(linalg.inverse(a.ctx, a.a), a.ctx)
    except (FieldError, ValueError) as exc:
        raise MatrixError("matrix is not invertible") from exc


def is_symmetric(a: FormMatrix) -> bool:
    return a.rows == a.cols and bool(np.array_equal(a.a, a.a.T))


def is_zero_diagonal(a: FormMatrix) -> bool:
    return not np.diagonal(a.a).any()


def is_invertible(a: FormMatrix) -> bool:
    return a.rows == a.cols and rank(a) == a.rows


def predicates(a: FormMatrix) -> dict[str, bool]:
    if a.rows != a.cols:
        raise MatrixError("predicates need a square matrix")
    return {
        "is_symmetric": is_symmetric(a),
        "is_zero_diagonal": is_zero_diagonal(a),
        "is_invertible": is_invertible(a),
    }


def bilinear(a: FormMatrix, x, y) -> int:
    """x^T A y."""
    x = np.asarray(x, dtype=np.int64)[None, :]
    y = np.asarray(y, dtype=np.int64)[:, None]
    return int(a.ctx.matmul(a.ctx.matmul(x, a.a), y)[0, 0])


def quad_value(a: FormMatrix, x) -> int:
    """Q(x) = x^T A x."""
    return bilinear(a, x, x)


# text format -------------------------------------------------------------


def format_matrix(a: FormMatrix) -> str:
    if a.rows != a.cols:
        raise MatrixError("text format holds square matrices only")
    lines = [f"{a.rows} {a.ctx.m}"]
    for row in a.a:
        lines.append(" ".join(a.ctx.format_elem(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> FormMatrix:
    """Parse "n m" followed by n rows of n hex entries."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ParseError("header must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise ParseError("header must be two integers") from exc
    try:
        ctx = make_ctx(m)
    except FieldError as exc:
        raise ParseError(str(exc)) from exc
    if not 0 <= n <= MAX_N:
        raise ParseError(f"n must be in 0..{MAX_N}")
    body = lines[1:]
    if len(body) != n or any(len(r) != n for r in body):
        raise ParseError(f"expected {n} rows of {n} entries")
    try:
        vals = [[ctx.parse_elem(t) for t in r] for r in body]
    except FieldError as exc:
        raise ParseError(str(exc)) from exc
    return FormMatrix._wrap(np.array(vals, dtype=np.int64).reshape(n, n), ctx)
