"""Matrix Lie algebras over GF(2^m) preserving bilinear forms.

An :class:`AlgebraBasis` is a subspace of gl(n) stored as an RREF basis of
flattened n x n matrices.  Abstract computations (quotients, simplicity)
go through :class:`StructureConstants`, which works in coordinates.

The preserver of B is {X : X^T B + B X = 0}; over characteristic 2 the
bracket is XY + YX.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import linalg
from .ff import FieldCtx
from .mat import FormMatrix, MatrixError, identity, standard_form


class AlgebraError(ValueError):
    """Invalid algebra construction or an operation outside its envelope."""


# matrix realisation -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    n: int
    ctx: FieldCtx
    basis: np.ndarray  # (dim, n*n), RREF

    @classmethod
    def span(cls, mats, n: int, ctx: FieldCtx, check: bool = True) -> "AlgebraBasis":
        """Echelonized span of the given matrices (FormMatrix or arrays)."""
        rows = [np.asarray(m.a if isinstance(m, FormMatrix) else m, dtype=np.int64).reshape(-1) for m in mats]
        vecs = np.array(rows, dtype=np.int64).reshape(len(rows), n * n)
        g = cls(n, ctx, linalg.row_basis(ctx, vecs, n * n))
        if check and not g.is_closed():
            raise AlgebraError("span is not closed under the bracket")
        return g

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def matrices(self) -> list[FormMatrix]:
        return [FormMatrix._wrap(v.reshape(self.n, self.n), self.ctx) for v in self.basis]

    def stack(self) -> np.ndarray:
        return self.basis.reshape(self.dim, self.n, self.n)

    def contains(self, x) -> bool:
        v = np.asarray(x.a if isinstance(x, FormMatrix) else x, dtype=np.int64).reshape(-1)
        return linalg.in_span(self.ctx, self.basis, v)

    def coords(self, x) -> np.ndarray:
        v = np.asarray(x.a if isinstance(x, FormMatrix) else x, dtype=np.int64).reshape(-1)
        c = linalg.solve_left(self.ctx, self.basis, v)
        if c is None:
            raise AlgebraError("element not in algebra")
        return c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraBasis)
            and self.n == other.n
            and self.ctx == other.ctx
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.ctx, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"AlgebraBasis(n={self.n}, {self.ctx.name}, dim={self.dim})"

    def is_subalgebra_of(self, other: "AlgebraBasis") -> bool:
        return linalg.span_contains(self.ctx, other.basis, self.basis)

    def is_closed(self) -> bool:
        if self.dim < 2:
            return True
        br = pair_brackets(self.ctx, self.stack())
        return linalg.span_contains(self.ctx, self.basis, br)

    def structure(self) -> "StructureConstants":
        return structure_constants(self)


def zero_algebra(n: int, ctx: FieldCtx) -> AlgebraBasis:
    return AlgebraBasis(n, ctx, np.zeros((0, n * n), dtype=np.int64))


def bracket(x: FormMatrix, y: FormMatrix) -> FormMatrix:
    if x.shape != y.shape or x.rows != x.cols:
        raise MatrixError("bracket needs square matrices of equal size")
    return x @ y + y @ x


def _stack_products(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """All products a[i] @ b[j] as an (len(a), len(b), n, n) array."""
    if ctx.m == 1:
        return np.einsum("iab,jbc->ijac", a, b) & 1
    out = np.zeros((a.shape[0], b.shape[0], a.shape[1], b.shape[2]), dtype=np.int64)
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            out[i, j] = ctx.matmul(a[i], b[j])
    return out


def cross_brackets(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Flattened brackets [a_i, b_j] for all i, j; shape (len(a)*len(b), n*n)."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        n = a.shape[1] if a.ndim == 3 else b.shape[1]
        return np.zeros((0, n * n), dtype=np.int64)
    ab = _stack_products(ctx, a, b)
    ba = _stack_products(ctx, b, a).transpose(1, 0, 2, 3)
    br = ab ^ ba
    n = a.shape[1]
    return br.reshape(-1, n * n)


def pair_brackets(ctx: FieldCtx, mats: np.ndarray) -> np.ndarray:
    """Flattened [m_i, m_j] for i < j."""
    k = mats.shape[0]
    n = mats.shape[1]
    if k < 2:
        return np.zeros((0, n * n), dtype=np.int64)
    full = cross_brackets(ctx, mats, mats).reshape(k, k, n * n)
    iu = np.triu_indices(k, 1)
    return full[iu]


# preservers --------------------------------------------------------------


def preserver_map(b: FormMatrix) -> np.ndarray:
    """Matrix (n^2 x n^2) of X -> X^T B + B X acting on flattened X."""
    n = b.n
    t = np.zeros((n, n, n, n), dtype=np.int64)
    ba = b.a
    for a_ in range(n):
        for b_ in range(n):
            # E_{b a} B contributes row b_: B[a_, :]
            t[b_, :, a_, b_] ^= ba[a_, :]
            # B E_{a b} contributes column b_: B[:, a_]
            t[:, b_, a_, b_] ^= ba[:, a_]
    return t.reshape(n * n, n * n)


def preserver(b: FormMatrix) -> AlgebraBasis:
    """Basis of {X : X^T B + B X = 0}."""
    n = b.n
    ker = linalg.nullspace(b.ctx, preserver_map(b))
    g = AlgebraBasis(n, b.ctx, ker)
    if not verify_preserver(g, b):  # pragma: no cover - internal consistency
        raise AlgebraError("preserver solve produced a non-preserving element")
    return g


def verify_preserver(g: AlgebraBasis, b: FormMatrix) -> bool:
    for x in g.matrices():
        if not (x.T @ b + b @ x).is_zero():
            return False
    return True


def sociological_preserver(b: FormMatrix) -> AlgebraBasis:
    """Transformations preserving the class {B} modulo symmetric forms.

    X preserves {B} iff it preserves B + B^T, so this is the preserver of
    the alternating form B + B^T.
    """
    return preserver(b + b.T)


def gl(n: int, ctx: FieldCtx) -> AlgebraBasis:
    return AlgebraBasis(n, ctx, np.eye(n * n, dtype=np.int64))


def o_I(n: int, ctx: FieldCtx) -> AlgebraBasis:
    return preserver(identity(n, ctx))


def o_S(n: int, ctx: FieldCtx) -> AlgebraBasis:
    return preserver(standard_form("S", n, ctx))


def o_Pi(n: int, ctx: FieldCtx) -> AlgebraBasis:
    return preserver(standard_form("Pi", n, ctx))


def zd(n: int, ctx: FieldCtx) -> AlgebraBasis:
    """Symmetric zero-diagonal matrices."""
    return AlgebraBasis.span([F(n, i, j, ctx) for i in range(1, n + 1) for j in range(i + 1, n + 1)], n, ctx, check=False)


# derived series, center, ideals ------------------------------------------


def derived(g: AlgebraBasis) -> AlgebraBasis:
    br = pair_brackets(g.ctx, g.stack())
    return AlgebraBasis(g.n, g.ctx, linalg.row_basis(g.ctx, br, g.n * g.n))


class DerivedSeries(NamedTuple):
    terms: list  # g^(1), ..., g^(depth)
    stable_at: int | None  # first i with g^(i) = g^(i-1) (g^(0) = g), if reached

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]


def derived_series(g: AlgebraBasis, depth: int) -> DerivedSeries:
    terms = []
    prev = g
    stable = None
    for i in range(1, depth + 1):
        cur = derived(prev)
        if not cur.is_subalgebra_of(prev):  # pragma: no cover - sanity
            raise AlgebraError("derived algebra escaped its parent")
        terms.append(cur)
        if stable is None and cur == prev:
            stable = i
        prev = cur
    return DerivedSeries(terms, stable)


def center(g: AlgebraBasis) -> AlgebraBasis:
    return g.structure().center_in(g)


def ideal_closure(g: AlgebraBasis, seed) -> AlgebraBasis:
    """Smallest ideal of g containing ``seed`` (a matrix in g)."""
    s = g.structure()
    c = g.coords(seed)
    ideal = s.ideal_closure(c)
    return AlgebraBasis(g.n, g.ctx, linalg.row_basis(g.ctx, g.ctx.matmul(ideal, g.basis), g.n * g.n))


def diagonal_subalgebra(g: AlgebraBasis) -> AlgebraBasis:
    n = g.n
    diag = np.zeros((n, n * n), dtype=np.int64)
    for i in range(n):
        diag[i, i * n + i] = 1
    return AlgebraBasis(n, g.ctx, linalg.intersect(g.ctx, g.basis, diag))


# abstract algebras -------------------------------------------------------


@dataclass(eq=False)
class StructureConstants:
    """Lie algebra on coordinates: table[i, j] = coords of [e_i, e_j].

    ``marked`` is an optional subspace (rows, coordinates) carried along for
    the diagonal entry of the fingerprint; for quotients it is the image of
    the parent's marked subspace.
    """

    ctx: FieldCtx
    table: np.ndarray  # (d, d, d)
    marked: np.ndarray | None = None
    _ad: list | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def ad(self, i: int) -> np.ndarray:
        """Matrix acting on row vectors: x @ ad(i) = coords of [e_i, x]."""
        return self.table[i]

    def bracket_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        d = self.dim
        t = self.ctx.matmul(x[None, :], self.table.reshape(d, d * d)).reshape(d, d)
        return self.ctx.matmul(y[None, :], t)[0]

    def bracket_span(self, u: np.ndarray, w: np.ndarray) -> np.ndarray:
        d = self.dim
        if u.shape[0] == 0 or w.shape[0] == 0 or d == 0:
            return np.zeros((0, d), dtype=np.int64)
        t = self.ctx.matmul(u, self.table.reshape(d, d * d)).reshape(u.shape[0], d, d)
        rows = [self.ctx.matmul(w, t[a]) for a in range(u.shape[0])]
        return linalg.row_basis(self.ctx, np.concatenate(rows), d)

    def full(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    def derived_dims(self, depth: int) -> list[int]:
        cur = self.full()
        dims = []
        for _ in range(depth):
            cur = self.bracket_span(cur, cur)
            dims.append(cur.shape[0])
        return dims

    def derived_subspace(self, depth: int = 1) -> np.ndarray:
        cur = self.full()
        for _ in range(depth):
            cur = self.bracket_span(cur, cur)
        return cur

    def center(self) -> np.ndarray:
        d = self.dim
        if d == 0:
            return np.zeros((0, 0), dtype=np.int64)
        # sum_i c_i table[i, j, :] = 0 for all j
        return linalg.left_nullspace(self.ctx, self.table.reshape(d, d * d))

    def center_in(self, g: AlgebraBasis) -> AlgebraBasis:
        c = self.center()
        if c.shape[0] == 0:
            return zero_algebra(g.n, g.ctx)
        return AlgebraBasis(g.n, g.ctx, linalg.row_basis(g.ctx, g.ctx.matmul(c, g.basis), g.n * g.n))

    def is_abelian(self) -> bool:
        return not self.table.any()

    def ideal_closure(self, seed) -> np.ndarray:
        """RREF basis (coordinates) of the ideal generated by ``seed`` rows."""
        seed = np.atleast_2d(np.asarray(seed, dtype=np.int64))
        d = self.dim
        basis = linalg.row_basis(self.ctx, seed, d)
        frontier = basis
        while frontier.shape[0]:
            # [e_i, x] = sum_j x_j table[i, j]
            imgs = np.concatenate([self.ctx.matmul(frontier, self.table[i]) for i in range(d)])
            red = np.array([linalg.reduce_mod(self.ctx, basis, v) for v in imgs]).reshape(-1, d)
            frontier = linalg.row_basis(self.ctx, red, d)
            if frontier.shape[0]:
                basis = linalg.span_sum(self.ctx, basis, frontier)
        return basis

    def is_ideal(self, sub: np.ndarray) -> bool:
        if sub.shape[0] == 0:
            return True
        imgs = np.concatenate([self.ctx.matmul(sub, self.table[i]) for i in range(self.dim)])
        return linalg.span_contains(self.ctx, sub, imgs)

    def quotient(self, ideal: np.ndarray) -> "StructureConstants":
        """Structure constants of the quotient by an ideal (RREF coordinate rows)."""
        if not self.is_ideal(ideal):
            raise AlgebraError("quotient by a non-ideal")
        d = self.dim
        piv = set(linalg.pivots_of(ideal))
        keep = [j for j in range(d) if j not in piv]
        k = len(keep)
        table = np.zeros((k, k, k), dtype=np.int64)
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                v = linalg.reduce_mod(self.ctx, ideal, self.table[i, j])
                table[a, b] = v[keep]
        marked = None
        if self.marked is not None:
            m = linalg.span_sum(self.ctx, self.marked, ideal)
            red = np.array([linalg.reduce_mod(self.ctx, ideal, v)[keep] for v in m]).reshape(-1, k)
            marked = linalg.row_basis(self.ctx, red, k)
        q = StructureConstants(self.ctx, table, marked)
        if not q.satisfies_jacobi():  # pragma: no cover - sanity
            raise AlgebraError("quotient structure constants fail the Jacobi identity")
        return q

    def satisfies_jacobi(self) -> bool:
        d = self.dim
        ctx = self.ctx
        t = self.table
        # [e_i, e_i] = 0 and Jacobi on basis triples
        for i in range(d):
            if t[i, i].any():
                return False
        for i in range(d):
            for j in range(i + 1, d):
                if not np.array_equal(t[i, j], t[j, i]):
                    return False
        flat = t.reshape(d, d * d)
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    a = ctx.matmul(t[j, k][None, :], flat).reshape(d, d)[i]
                    b = ctx.matmul(t[k, i][None, :], flat).reshape(d, d)[j]
                    c = ctx.matmul(t[i, j][None, :], flat).reshape(d, d)[k]
                    if (a ^ b ^ c).any():
                        return False
        return True


def structure_constants(g: AlgebraBasis) -> StructureConstants:
    d = g.dim
    ctx = g.ctx
    mats = g.stack()
    if d == 0:
        return StructureConstants(ctx, np.zeros((0, 0, 0), dtype=np.int64), np.zeros((0, 0), dtype=np.int64))
    br = cross_brackets(ctx, mats, mats)  # (d*d, n*n)
    coords = linalg.coords_matrix(ctx, g.basis, br)
    table = coords.reshape(d, d, d)
    diag = diagonal_subalgebra(g)
    marked = linalg.coords_matrix(ctx, g.basis, diag.basis) if diag.dim else np.zeros((0, d), dtype=np.int64)
    return StructureConstants(ctx, table, linalg.row_basis(ctx, marked, d))


def quotient_by_center(g) -> StructureConstants:
    s = g.structure() if isinstance(g, AlgebraBasis) else g
    return s.quotient(s.center())


# fingerprints ------------------------------------------------------------


class Fingerprint(NamedTuple):
    dim: int
    dim_d1: int
    dim_d2: int
    dim_d3: int
    dim_center: int
    dim_center_d1: int
    dim_diagonal: int

    def abstract(self) -> tuple[int, ...]:
        """The entries that are isomorphism invariants.

        The diagonal count depends on the matrix realisation, so two
        isomorphic algebras may disagree there; clustering ignores it.
        """
        return tuple(self[:6])


def fingerprint(g) -> Fingerprint:
    s = g.structure() if isinstance(g, AlgebraBasis) else g
    ctx = s.ctx
    d = s.dim
    if d == 0:
        return Fingerprint(0, 0, 0, 0, 0, 0, 0)
    d1 = s.derived_subspace(1)
    d2 = s.bracket_span(d1, d1)
    d3 = s.bracket_span(d2, d2)
    z = s.center()
    zd1 = linalg.intersect(ctx, z, d1) if z.shape[0] and d1.shape[0] else np.zeros((0, d))
    diag = s.marked.shape[0] if s.marked is not None else 0
    return Fingerprint(d, d1.shape[0], d2.shape[0], d3.shape[0], z.shape[0], zd1.shape[0], diag)


# named generators (1-based indices) --------------------------------------


def _mat(n: int, ctx: FieldCtx, entries) -> FormMatrix:
    a = np.zeros((n, n), dtype=np.int64)
    for i, j in entries:
        a[i - 1, j - 1] ^= 1
    return FormMatrix._wrap(a, ctx)


def F(n: int, i: int, j: int, ctx: FieldCtx) -> FormMatrix:
    """E^{ij} + E^{ji}."""
    return _mat(n, ctx, [(i, j), (j, i)])


def H(n: int, i: int, j: int, ctx: FieldCtx) -> FormMatrix:
    """E^{ii} + E^{jj}."""
    return _mat(n, ctx, [(i, i), (j, j)])


def _pi_block(k: int, ctx: FieldCtx, a=None, b=None, c=None) -> FormMatrix:
    """[[A, B], [C, A^T]] of size 2k from k x k 0/1 entry lists."""
    m = np.zeros((2 * k, 2 * k), dtype=np.int64)
    for (i, j) in a or []:
        m[i - 1, j - 1] ^= 1
        m[k + j - 1, k + i - 1] ^= 1
    for (i, j) in b or []:
        m[i - 1, k + j - 1] ^= 1
    for (i, j) in c or []:
        m[k + i - 1, j - 1] ^= 1
    return FormMatrix._wrap(m, ctx)


def F1(k: int, i: int, j: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, b=[(i, j), (j, i)])


def F2(k: int, i: int, j: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, c=[(i, j), (j, i)])


def G(k: int, i: int, j: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, a=[(i, j)])


def Hpi(k: int, i: int, j: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, a=[(i, i), (j, j)])


def K0(k: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, a=[(1, 1)])


def K1(k: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, b=[(1, 1)])


def K2(k: int, ctx: FieldCtx) -> FormMatrix:
    return _pi_block(k, ctx, c=[(1, 1)])


# simplicity over GF(2) ---------------------------------------------------

EXHAUSTIVE_MAX_DIM = 22


def _bits_table(s: StructureConstants) -> list[list[int]]:
    """ad matrices as row bitmasks: gens[i][j] = bits of [e_i, e_j]."""
    d = s.dim
    return [[int(sum(int(b) << k for k, b in enumerate(s.table[i, j]))) for j in range(d)] for i in range(d)]


def _apply(rows: list[int], x: int) -> int:
    acc = 0
    j = 0
    while x:
        if x & 1:
            acc ^= rows[j]
        x >>= 1
        j += 1
    return acc


def _xor_insert(basis: dict[int, int], v: int) -> int:
    """Insert v into a highest-bit xor basis; returns the reduced vector (0 if dependent)."""
    while v:
        h = v.bit_length() - 1
        if h in basis:
            v ^= basis[h]
        else:
            basis[h] = v
            return v
    return 0


def spin_bits(seeds, gens: list[list[int]], limit: int | None = None) -> list[int]:
    """Smallest subspace containing ``seeds`` and stable under every generator."""
    basis: dict[int, int] = {}
    queue = []
    for s in seeds:
        r = _xor_insert(basis, s)
        if r:
            queue.append(r)
    while queue:
        v = queue.pop()
        for g in gens:
            r = _xor_insert(basis, _apply(g, v))
            if r:
                queue.append(r)
                if limit is not None and len(basis) >= limit:
                    return list(basis.values())
    return list(basis.values())


def _bits_to_rows(vecs: list[int], d: int) -> np.ndarray:
    out = np.zeros((len(vecs), d), dtype=np.int64)
    for t, v in enumerate(vecs):
        for j in range(d):
            out[t, j] = (v >> j) & 1
    return out


def _rows_to_bits(a: np.ndarray) -> list[int]:
    return [int(sum(int(b) << k for k, b in enumerate(row))) for row in a]


class SimplicityResult(NamedTuple):
    simple: bool
    witness: np.ndarray | None  # proper nonzero ideal (coordinate rows), if one was found
    method: str


def _as_structure(g) -> StructureConstants:
    s = g.structure() if isinstance(g, AlgebraBasis) else g
    if s.ctx.m != 1:
        raise AlgebraError("simplicity certificates are implemented over GF(2) only")
    return s


def simple_exhaustive(g, max_dim: int = EXHAUSTIVE_MAX_DIM) -> SimplicityResult:
    """Close every nonzero element under ad; simple iff each closure is everything."""
    s = _as_structure(g)
    d = s.dim
    if d > max_dim:
        raise AlgebraError(f"dimension {d} exceeds the exhaustive envelope {max_dim}")
    if d == 0 or s.is_abelian():
        wit = None if d <= 1 else np.eye(d, dtype=np.int64)[:1]
        return SimplicityResult(False, wit, "exhaustive")
    gens = _bits_table(s)
    for v in range(1, 1 << d):
        span = spin_bits([v], gens, limit=d)
        if len(span) < d:
            return SimplicityResult(False, linalg.row_basis(s.ctx, _bits_to_rows(span, d), d), "exhaustive")
    return SimplicityResult(True, None, "exhaustive")


def _random_algebra_element(mats: list[np.ndarray], rng: np.random.Generator) -> np.ndarray:
    d = mats[0].shape[0]
    def lin():
        acc = np.zeros((d, d), dtype=np.int64)
        for m in mats:
            if rng.integers(2):
                acc ^= m
        return acc
    theta = lin()
    for _ in range(2):
        theta = ((theta @ lin()) & 1) ^ lin()
    if rng.integers(2):
        theta ^= np.eye(d, dtype=np.int64)
    return theta


def irreducibility_certificate(gens_mats: list[np.ndarray], seed: int = 0, tries: int = 400):
    """Norton's test for a module over GF(2) given by row-action matrices.

    Returns (True, None) when a random algebra element with one-dimensional
    kernel certifies irreducibility, (False, W) with W a proper nonzero
    invariant subspace (rows) when one is found, and (None, None) if no
    decisive element turned up.
    """
    d = gens_mats[0].shape[0]
    ctx = _gf2()
    rows = [_rows_to_bits(m) for m in gens_mats]
    cols = [_rows_to_bits(m.T) for m in gens_mats]
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        theta = _random_algebra_element(gens_mats, rng)
        left = linalg.left_nullspace(ctx, theta)  # v theta = 0
        if left.shape[0] == 0:
            continue
        v = _rows_to_bits(left[:1])[0]
        span = spin_bits([v], rows)
        if len(span) < d:
            return False, linalg.row_basis(ctx, _bits_to_rows(span, d), d)
        right = linalg.nullspace(ctx, theta)  # theta w^T = 0
        w = _rows_to_bits(right[:1])[0]
        dual = spin_bits([w], cols)
        if len(dual) < d:
            ann = linalg.nullspace(ctx, _bits_to_rows(dual, d))
            return False, ann
        if left.shape[0] == 1:
            return True, None
    return None, None


def _gf2() -> FieldCtx:
    from .ff import make_ctx

    return make_ctx(1)


def simple_certified(g, seed: int = 0) -> SimplicityResult:
    """Irreducibility of the adjoint module via Norton's test."""
    s = _as_structure(g)
    d = s.dim
    if d == 0 or s.is_abelian():
        return SimplicityResult(False, None if d <= 1 else np.eye(d, dtype=np.int64)[:1], "norton")
    verdict, wit = irreducibility_certificate([s.table[i] for i in range(d)], seed=seed)
    if verdict is None:
        raise AlgebraError("no decisive algebra element found")
    return SimplicityResult(verdict, wit, "norton")


def is_simple(g, method: str = "auto", max_dim: int = EXHAUSTIVE_MAX_DIM) -> SimplicityResult:
    """Decide simplicity over GF(2).

    ``exhaustive`` closes every nonzero element (feasible up to about 2^16
    elements); ``norton`` certifies irreducibility of the adjoint module;
    ``auto`` enumerates for dim <= 12 and uses the certificate above that,
    falling back to enumeration if the certificate is inconclusive.
    """
    s = _as_structure(g)
    if method == "exhaustive":
        return simple_exhaustive(s, max_dim)
    if method == "norton":
        return simple_certified(s)
    if method != "auto":
        raise AlgebraError(f"unknown method {method!r}")
    if s.dim <= 12:
        return simple_exhaustive(s, max_dim)
    try:
        return simple_certified(s)
    except AlgebraError:
        return simple_exhaustive(s, max_dim)


class IdealReport(NamedTuple):
    center_dim: int
    perfect: bool
    quotient_simple: bool
    unique_nontrivial_ideal: bool


def center_only_ideal(g) -> IdealReport:
    """Check that the center is the only proper nonzero ideal.

    If g is perfect, its center Z is one-dimensional and g/Z is simple, then
    any ideal I satisfies I + Z in {Z, g}; the first forces I = Z (or 0),
    the second gives I >= [g, g] = g.
    """
    s = _as_structure(g)
    z = s.center()
    perfect = s.derived_subspace(1).shape[0] == s.dim
    q = s.quotient(z)
    qs = is_simple(q).simple
    return IdealReport(z.shape[0], perfect, qs, z.shape[0] == 1 and perfect and qs)
