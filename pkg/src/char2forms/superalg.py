"""Lie superalgebras of supermatrices in characteristic 2.

Supermatrices use the standard format: even coordinates first.  An even
supermatrix is block-diagonal, an odd one block-off-diagonal.  In
characteristic 2 the super bracket of homogeneous matrices is the plain
commutator XY + YX, and the squaring of an odd X is the matrix square.
The derived superalgebra is spanned by all brackets together with the
squares of odd elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .ff import FieldCtx
from .liealg import (
    AlgebraBasis,
    AlgebraError,
    cross_brackets,
    pair_brackets,
    preserver_map,
    spin_bits,
    _bits_to_rows,
    _rows_to_bits,
)
from .mat import FormMatrix, MatrixError, block_diag, identity, standard_form


class SuperError(ValueError):
    """Malformed supermatrix or super form."""


def parity_mask(n0: int, n1: int, parity: str) -> np.ndarray:
    """Boolean (n, n) mask of the entries allowed for the given parity."""
    n = n0 + n1
    even = np.zeros((n, n), dtype=bool)
    even[:n0, :n0] = True
    even[n0:, n0:] = True
    if parity == "even":
        return even
    if parity == "odd":
        return ~even
    raise SuperError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class SuperMatrix:
    sdim: tuple[int, int]
    mat: FormMatrix
    parity: str

    def __post_init__(self):
        n0, n1 = self.sdim
        if self.mat.shape != (n0 + n1, n0 + n1):
            raise SuperError(f"matrix shape {self.mat.shape} does not match ({n0}|{n1})")
        if (self.mat.a[~parity_mask(n0, n1, self.parity)] != 0).any():
            raise SuperError(f"entries outside the {self.parity} blocks")

    @property
    def ctx(self) -> FieldCtx:
        return self.mat.ctx


def homogeneous_parity(x: FormMatrix, sdim: tuple[int, int]) -> str | None:
    """'even', 'odd', or None for a non-homogeneous matrix (zero counts as even)."""
    n0, n1 = sdim
    ev = parity_mask(n0, n1, "even")
    if not x.a[~ev].any():
        return "even"
    if not x.a[ev].any():
        return "odd"
    return None


def squaring(x: SuperMatrix) -> SuperMatrix:
    if x.parity != "odd":
        raise SuperError("squaring is defined on odd elements")
    return SuperMatrix(x.sdim, x.mat @ x.mat, "even")


def _flat_idx(n0: int, n1: int, parity: str) -> np.ndarray:
    return np.flatnonzero(parity_mask(n0, n1, parity).reshape(-1))


@dataclass(frozen=True, eq=False)
class SuperAlgebraBasis:
    sdim: tuple[int, int]
    ctx: FieldCtx
    even: np.ndarray  # (de, n*n) RREF
    odd: np.ndarray  # (do, n*n) RREF

    @classmethod
    def build(cls, sdim, ctx: FieldCtx, even, odd, check: bool = True) -> "SuperAlgebraBasis":
        n = sdim[0] + sdim[1]
        ev = linalg.row_basis(ctx, np.asarray(even, dtype=np.int64).reshape(-1, n * n), n * n)
        od = linalg.row_basis(ctx, np.asarray(odd, dtype=np.int64).reshape(-1, n * n), n * n)
        for rows, par in ((ev, "even"), (od, "odd")):
            bad = np.ones(n * n, dtype=bool)
            bad[_flat_idx(*sdim, par)] = False
            if rows.size and rows[:, bad].any():
                raise SuperError(f"{par} basis element has entries of the other parity")
        g = cls(tuple(sdim), ctx, ev, od)
        if check:
            problems = g.closure_defects()
            if problems:
                raise AlgebraError("not closed: " + ", ".join(problems))
        return g

    @property
    def n(self) -> int:
        return self.sdim[0] + self.sdim[1]

    @property
    def dims(self) -> tuple[int, int]:
        return self.even.shape[0], self.odd.shape[0]

    @property
    def dim(self) -> int:
        return self.even.shape[0] + self.odd.shape[0]

    def stack(self, part: str) -> np.ndarray:
        rows = self.even if part == "even" else self.odd
        return rows.reshape(-1, self.n, self.n)

    def elements(self, part: str) -> list[SuperMatrix]:
        return [SuperMatrix(self.sdim, FormMatrix._wrap(m, self.ctx), part) for m in self.stack(part)]

    def all_rows(self) -> np.ndarray:
        return np.concatenate([self.even, self.odd])

    def squares(self) -> np.ndarray:
        """Flattened squares of the odd basis elements."""
        ctx = self.ctx
        n = self.n
        if not self.odd.shape[0]:
            return np.zeros((0, n * n), dtype=np.int64)
        return np.array([ctx.matmul(m, m).reshape(-1) for m in self.stack("odd")])

    def closure_defects(self) -> list[str]:
        ctx = self.ctx
        ev, od = self.stack("even"), self.stack("odd")
        out = []
        checks = [
            ("[even, even]", pair_brackets(ctx, ev), self.even),
            ("[even, odd]", cross_brackets(ctx, ev, od), self.odd),
            ("[odd, odd]", pair_brackets(ctx, od), self.even),
            ("odd squares", self.squares(), self.even),
        ]
        for name, vecs, target in checks:
            if vecs.size and not linalg.span_contains(ctx, target, vecs):
                out.append(name)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperAlgebraBasis)
            and self.sdim == other.sdim
            and self.ctx == other.ctx
            and self.even.shape == other.even.shape
            and self.odd.shape == other.odd.shape
            and bool(np.array_equal(self.even, other.even))
            and bool(np.array_equal(self.odd, other.odd))
        )

    def __hash__(self) -> int:
        return hash((self.sdim, self.ctx, self.even.tobytes(), self.odd.tobytes()))

    def __repr__(self) -> str:
        return f"SuperAlgebraBasis(({self.sdim[0]}|{self.sdim[1]}), {self.ctx.name}, dim=({self.dims[0]}|{self.dims[1]}))"


def zero_superalgebra(sdim, ctx: FieldCtx) -> SuperAlgebraBasis:
    n = sdim[0] + sdim[1]
    z = np.zeros((0, n * n), dtype=np.int64)
    return SuperAlgebraBasis(tuple(sdim), ctx, z, z)


# preservers --------------------------------------------------------------


def form_parity(b: FormMatrix, sdim: tuple[int, int]) -> str:
    par = homogeneous_parity(b, sdim)
    if par is None:
        raise SuperError("form is neither even nor odd in standard format")
    return par


def super_preserver(b: FormMatrix, sdim: tuple[int, int]) -> SuperAlgebraBasis:
    """Homogeneous solutions of X^T B + B X = 0 for a homogeneous form B."""
    n0, n1 = sdim
    if b.shape != (n0 + n1, n0 + n1):
        raise SuperError(f"form shape {b.shape} does not match ({n0}|{n1})")
    form_parity(b, sdim)
    ctx = b.ctx
    n = n0 + n1
    full = preserver_map(b)
    parts = []
    for par in ("even", "odd"):
        idx = _flat_idx(n0, n1, par)
        ker = linalg.nullspace(ctx, full[:, idx]) if idx.size else np.zeros((0, 0), dtype=np.int64)
        rows = np.zeros((ker.shape[0], n * n), dtype=np.int64)
        if ker.shape[0]:
            rows[:, idx] = ker
        parts.append(rows)
    return SuperAlgebraBasis.build(sdim, ctx, parts[0], parts[1])


def oo_form(kind: str, n0: int, n1: int, ctx: FieldCtx) -> FormMatrix:
    """Even forms diag(B0, B1) with B_i in {1, Pi}: kind is II, IPi, PiI or PiPi."""
    kinds = {"II": ("identity", "identity"), "IPi": ("identity", "Pi"), "PiI": ("Pi", "identity"), "PiPi": ("Pi", "Pi")}
    if kind not in kinds:
        raise SuperError(f"unknown even form {kind!r}")
    k0, k1 = kinds[kind]
    blocks = [standard_form(k, m, ctx) for k, m in ((k0, n0), (k1, n1)) if m]
    return block_diag(*blocks)


def oo(kind: str, n0: int, n1: int, ctx: FieldCtx) -> SuperAlgebraBasis:
    return super_preserver(oo_form(kind, n0, n1, ctx), (n0, n1))


def pe(k: int, ctx: FieldCtx) -> SuperAlgebraBasis:
    """Preserver of the odd symmetric form Pi_{2k} on (k|k)."""
    return super_preserver(standard_form("Pi", 2 * k, ctx), (k, k))


# derived series ----------------------------------------------------------


def super_derived(g: SuperAlgebraBasis) -> SuperAlgebraBasis:
    ctx = g.ctx
    ev, od = g.stack("even"), g.stack("odd")
    even = np.concatenate([pair_brackets(ctx, ev), pair_brackets(ctx, od), g.squares()])
    odd = cross_brackets(ctx, ev, od)
    return SuperAlgebraBasis.build(g.sdim, ctx, even, odd, check=False)


class SuperDerivedSeries(NamedTuple):
    terms: list
    stable_at: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def sdims(self) -> list[tuple[int, int]]:
        return [t.dims for t in self.terms]


def super_derived_series(g: SuperAlgebraBasis, depth: int) -> SuperDerivedSeries:
    terms = []
    prev = g
    stable = None
    for i in range(1, depth + 1):
        cur = super_derived(prev)
        terms.append(cur)
        if stable is None and cur == prev:
            stable = i
        prev = cur
    return SuperDerivedSeries(terms, stable)


def forgetful(g: SuperAlgebraBasis) -> AlgebraBasis:
    """The same matrices viewed as an ordinary Lie algebra."""
    rows = g.all_rows()
    return AlgebraBasis(g.n, g.ctx, linalg.row_basis(g.ctx, rows, g.n * g.n))


def pi_merge_permutation(n0: int, n1: int, ctx: FieldCtx) -> FormMatrix:
    """Permutation P with P diag(Pi(n0), Pi(n1)) P^T = Pi(n0 + n1).

    Coordinates (a0, b0 | a1, b1), paired a_i with b_i, are reordered to
    (a0, a1, b0, b1).  Conjugation X -> P X P^T then carries preservers of
    the first form onto preservers of the second.
    """
    if n0 % 2 or n1 % 2:
        raise SuperError("both blocks must have even size")
    k0, k1 = n0 // 2, n1 // 2
    order = list(range(k0)) + list(range(n0, n0 + k1)) + list(range(k0, n0)) + list(range(n0 + k1, n0 + n1))
    n = n0 + n1
    p = np.zeros((n, n), dtype=np.int64)
    for new, old in enumerate(order):
        p[new, old] = 1
    return FormMatrix._wrap(p, ctx)


def conjugate(g: AlgebraBasis, p: FormMatrix) -> AlgebraBasis:
    """{P X P^-1 : X in g}."""
    pinv = linalg.inverse(g.ctx, p.a)
    mats = [g.ctx.matmul(g.ctx.matmul(p.a, x), pinv) for x in g.stack()]
    return AlgebraBasis.span(mats, g.n, g.ctx, check=False)


# structure checks --------------------------------------------------------


def half_supertrace(x: FormMatrix, sdim: tuple[int, int]) -> int:
    """Sum of the first n0/2 even and first n1/2 odd diagonal entries.

    For an element of the Pi Pi-preserver written as diag(Pi A0, Pi A1) on
    the diagonal blocks, these are the diagonal entries of A0 and A1 over
    the first halves.
    """
    n0, n1 = sdim
    if x.shape != (n0 + n1, n0 + n1):
        raise SuperError("shape mismatch")
    if n0 % 2 or n1 % 2:
        raise SuperError("half-supertrace needs even block sizes")
    d = np.diagonal(x.a)
    acc = 0
    for i in range(n0 // 2):
        acc ^= int(d[i])
    for i in range(n1 // 2):
        acc ^= int(d[n0 + i])
    return acc


def _pi_blocks_zero_diagonal(x: np.ndarray, n0: int, n1: int) -> bool:
    """Pi(n_i) X_ii is zero-diagonal for both diagonal blocks."""
    ok = True
    for lo, m in ((0, n0), (n0, n1)):
        if m == 0:
            continue
        k = m // 2
        blk = x[lo : lo + m, lo : lo + m]
        # (Pi X)_{ii} = X_{i+k, i} for i < k and X_{i-k, i} otherwise
        vals = [blk[(i + k) % m, i] for i in range(m)]
        ok = ok and not any(vals)
    return ok


def super_structure_checks(g: SuperAlgebraBasis, kind: str, level: int) -> dict[str, bool]:
    """Span-level checks of the structural descriptions of the derived terms.

    ``kind`` is one of II, IPi, PiPi, pe and ``level`` the derived index.
    Every check holds when each basis element satisfies the condition.
    """
    n0, n1 = g.sdim
    mats = [m for m in g.stack("even")] + [m for m in g.stack("odd")]
    report: dict[str, bool] = {}
    if kind == "II" and level >= 1:
        report["symmetric"] = all(np.array_equal(m, m.T) for m in mats)
        report["trace zero"] = all(np.bitwise_xor.reduce(np.diagonal(m)) == 0 for m in mats)
    elif kind == "IPi" and level >= 1:
        report["even block zero-diagonal"] = all(not np.diagonal(m[:n0, :n0]).any() for m in mats)
    elif kind == "PiPi" and level >= 1:
        report["Pi-twisted blocks zero-diagonal"] = all(_pi_blocks_zero_diagonal(m, n0, n1) for m in mats)
        if level >= 2:
            report["half-supertrace vanishes"] = all(
                half_supertrace(FormMatrix._wrap(m, g.ctx), g.sdim) == 0 for m in mats
            )
    elif kind == "pe":
        k = n0
        if level >= 1:
            # odd part [[0, C], [D, 0]] with C, D symmetric zero-diagonal
            report["odd blocks zero-diagonal"] = all(
                not np.diagonal(m[:k, k:]).any() and not np.diagonal(m[k:, :k]).any() for m in g.stack("odd")
            )
        if level >= 2:
            report["trace A zero"] = all(np.bitwise_xor.reduce(np.diagonal(m[:k, :k])) == 0 for m in g.stack("even"))
    else:
        raise SuperError(f"no structural description for {kind!r} at level {level}")
    return report


# squaring axioms ---------------------------------------------------------


def squaring_axiom_failures(g: SuperAlgebraBasis, rng: np.random.Generator, trials: int = 100) -> list[str]:
    """Check (ax)^2 = a^2 x^2, [x, x^2] = 0 and [x^2, y] = [x, [x, y]].

    x runs over the odd basis, y over the whole basis, a over ``trials``
    random field elements.  Also checks that (x + y)^2 - x^2 - y^2 = [x, y]
    for odd basis pairs.  Returns a list of failure descriptions.
    """
    ctx = g.ctx
    odd = g.stack("odd")
    allm = [*g.stack("even"), *odd]
    fails = []

    def mm(a, b):
        return ctx.matmul(a, b)

    def br(a, b):
        return mm(a, b) ^ mm(b, a)

    scalars = rng.integers(0, ctx.q, trials)
    for i, x in enumerate(odd):
        x2 = mm(x, x)
        for a in scalars:
            ax = ctx.vscale(int(a), x)
            if not np.array_equal(mm(ax, ax), ctx.vscale(ctx.mul(int(a), int(a)), x2)):
                fails.append(f"(ax)^2 at odd {i}, a={int(a)}")
                break
        if br(x, x2).any():
            fails.append(f"[x, x^2] at odd {i}")
        for j, y in enumerate(allm):
            if not np.array_equal(br(x2, y), br(x, br(x, y))):
                fails.append(f"[x^2, y] at odd {i}, basis {j}")
        for j, y in enumerate(odd):
            s = x ^ y
            if not np.array_equal(mm(s, s) ^ x2 ^ mm(y, y), br(x, y)):
                fails.append(f"polarisation at odd {i}, {j}")
    return fails


# simplicity over GF(2) ---------------------------------------------------


class SuperIdeals(NamedTuple):
    simple: bool
    proper_principal: list  # distinct proper nonzero ideals generated by one element (coordinate rows)
    method: str


def _super_tables(g: SuperAlgebraBasis):
    """Bracket action and odd-square data in coordinates over the even-then-odd basis."""
    ctx = g.ctx
    rows = g.all_rows()
    basis = linalg.row_basis(ctx, rows, g.n * g.n)
    # coordinates relative to the concatenated homogeneous basis
    mats = rows.reshape(-1, g.n, g.n)
    d = rows.shape[0]
    br = cross_brackets(ctx, mats, mats)
    full_coords = _coords_in(ctx, rows, br).reshape(d, d, d)
    del basis
    return full_coords


def _coords_in(ctx: FieldCtx, rows: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    """Coordinates of vecs in the (not necessarily echelon) independent rows."""
    red, piv = linalg.rref(ctx, np.concatenate([rows.T, vecs.T], axis=1))
    d = rows.shape[0]
    if piv[:d] != list(range(d)) or any(p >= d for p in piv):
        raise AlgebraError("vector outside the algebra")
    return red[:d, d:].T


def super_ideal_closure(g: SuperAlgebraBasis, seed) -> np.ndarray:
    """Smallest ideal containing ``seed`` (coordinates over even-then-odd basis).

    Ideals are graded, stable under brackets with every basis element and
    contain the squares of their odd elements.
    """
    ctx = g.ctx
    if ctx.m != 1:
        raise AlgebraError("super ideal enumeration is implemented over GF(2) only")
    table = _super_tables(g)
    return _super_closure_bits(g, table, _rows_to_bits(np.atleast_2d(seed)))


def _super_closure_bits(g: SuperAlgebraBasis, table: np.ndarray, seeds: list[int], gens=None, sq=None) -> np.ndarray:
    d = g.dim
    de = g.dims[0]
    if gens is None:
        gens = [_rows_to_bits(table[i]) for i in range(d)]
    if sq is None:
        sq = _odd_square_map(g)
    span = spin_bits(seeds, gens)
    while True:
        rows = _bits_to_rows(span, d)
        # ideals are graded: split every element into its homogeneous parts
        ev = rows.copy()
        ev[:, de:] = 0
        od = rows.copy()
        od[:, :de] = 0
        extra = [v for v in ev if v.any()] + [v for v in od if v.any()]
        extra += [sq(v) for v in od if v.any()]
        extra = [e for e in extra if e.any()]
        if not extra:
            return linalg.row_basis(g.ctx, rows, d)
        cur = linalg.row_basis(g.ctx, rows, d)
        if linalg.span_contains(g.ctx, cur, np.array(extra)):
            return cur
        span = spin_bits(span + _rows_to_bits(np.array(extra)), gens)


def _odd_square_map(g: SuperAlgebraBasis):
    ctx = g.ctx
    rows = g.all_rows()

    def sq(v: np.ndarray) -> np.ndarray:
        x = ctx.matmul(v[None, :], rows).reshape(g.n, g.n)
        x2 = ctx.matmul(x, x).reshape(1, -1)
        return _coords_in(ctx, rows, x2)[0]

    return sq


def super_is_simple(g: SuperAlgebraBasis, max_dim: int = 22) -> SuperIdeals:
    """Enumerate the ideals generated by every nonzero element (GF(2) only)."""
    if g.ctx.m != 1:
        raise AlgebraError("super simplicity is implemented over GF(2) only")
    d = g.dim
    if d > max_dim:
        raise AlgebraError(f"dimension {d} exceeds the exhaustive envelope {max_dim}")
    table = _super_tables(g)
    gens = [_rows_to_bits(table[i]) for i in range(d)]
    sq = _odd_square_map(g)
    found: dict[bytes, np.ndarray] = {}
    for v in range(1, 1 << d):
        span = spin_bits([v], gens, limit=d)
        if len(span) == d:
            continue
        ideal = _super_closure_bits(g, table, span, gens, sq)
        if ideal.shape[0] < d:
            found.setdefault(ideal.tobytes(), ideal)
    abelian = not table.any()
    simple = not found and not abelian and d > 0
    return SuperIdeals(simple, list(found.values()), "exhaustive")


def super_irreducible(g: SuperAlgebraBasis, seed: int = 0) -> bool | None:
    """True if the adjoint action is irreducible (which already forces simplicity)."""
    from .liealg import irreducibility_certificate

    if g.ctx.m != 1:
        raise AlgebraError("over GF(2) only")
    table = _super_tables(g)
    verdict, _ = irreducibility_certificate([table[i] for i in range(g.dim)], seed=seed)
    return verdict


def identity_coords(g: SuperAlgebraBasis) -> np.ndarray | None:
    """Coordinates of the identity matrix, if it lies in g."""
    one = identity(g.n, g.ctx).a.reshape(1, -1)
    try:
        return _coords_in(g.ctx, g.all_rows(), one)[0]
    except AlgebraError:
        return None


def check_sdim(sdim) -> tuple[int, int]:
    try:
        n0, n1 = (int(x) for x in sdim)
    except (TypeError, ValueError) as exc:
        raise SuperError(f"bad superdimension {sdim!r}") from exc
    if n0 < 0 or n1 < 0:
        raise MatrixError("superdimension must be non-negative")
    return n0, n1


def super_center(g: SuperAlgebraBasis) -> np.ndarray:
    """Coordinates (RREF rows) of the elements bracketing to zero with everything."""
    d = g.dim
    if d == 0:
        return np.zeros((0, 0), dtype=np.int64)
    table = _super_tables(g)
    return linalg.left_nullspace(g.ctx, table.reshape(d, d * d))


class SuperIdealReport(NamedTuple):
    center_dim: int
    proper_ideal_dims: list
    unique_nontrivial_ideal: bool
    quotient_simple: bool


def super_center_only_ideal(g: SuperAlgebraBasis) -> SuperIdealReport:
    """Whether the center is the unique proper nonzero ideal (GF(2), exhaustive).

    Every ideal is a sum of ideals generated by single elements, so when
    the only proper principal ideal is the center, every proper nonzero
    ideal equals it and the quotient by it is simple.
    """
    z = super_center(g)
    res = super_is_simple(g)
    dims = sorted(int(i.shape[0]) for i in res.proper_principal)
    unique = (
        len(res.proper_principal) == 1
        and z.shape[0] > 0
        and linalg.span_equal(g.ctx, res.proper_principal[0], z)
    )
    return SuperIdealReport(int(z.shape[0]), dims, unique, unique)
