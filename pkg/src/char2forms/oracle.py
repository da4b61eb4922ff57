"""Exhaustive ground truth over GF(2) for n <= 4.

Every n x n matrix is encoded as an integer whose most significant bit is
entry (0, 0) and whose least significant bit is entry (n-1, n-1), so the
numerically smallest code is the lexicographically smallest matrix.

Orbits are connected components of the graph whose edges are the
generators of the acting group.  All generators used here are
involutions: congruence by 1 + E_ij (i != j) generates GL(n, 2), and the
sociological and Albert equivalences add translations by symmetric (resp.
symmetric zero-diagonal) matrices.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod

import numpy as np

from . import linalg
from .ff import make_ctx
from .liealg import AlgebraBasis, Fingerprint, fingerprint, preserver
from .mat import FormMatrix

MAX_N = 4
F2 = make_ctx(1)

PREDICATES = {
    "nondeg-nonsym": "nondegenerate-nonsymmetric",
    "nondeg-sym": "nondegenerate-symmetric",
    "all-sym": "all-symmetric",
    "all": "all",
}
EQUIVALENCES = ("congruence", "sociological", "albert")


class OracleError(ValueError):
    """Request outside the exhaustive envelope."""


def canonical_predicate(name: str) -> str:
    for short, long in PREDICATES.items():
        if name in (short, long):
            return short
    raise OracleError(f"unknown predicate {name!r}; choose from {sorted(PREDICATES)}")


def gl_order(n: int, q: int = 2) -> int:
    return prod(q**n - q**k for k in range(n))


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("CHAR2FORMS_THREADS", "1")))
    except ValueError:
        return 1


# encoding -----------------------------------------------------------------


def _weights(n: int) -> np.ndarray:
    return (1 << np.arange(n * n - 1, -1, -1, dtype=np.int64)).reshape(n, n)


def all_matrices(n: int) -> np.ndarray:
    """(2^(n^2), n, n) array; row k is the matrix with code k."""
    codes = np.arange(1 << (n * n), dtype=np.int64)
    bits = (codes[:, None] >> np.arange(n * n - 1, -1, -1)) & 1
    return bits.reshape(-1, n, n)


def encode(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    return np.tensordot(a.astype(np.int64), _weights(n), axes=([-2, -1], [0, 1]))


def decode(code: int, n: int) -> FormMatrix:
    bits = [(int(code) >> (n * n - 1 - k)) & 1 for k in range(n * n)]
    return FormMatrix._wrap(np.array(bits, dtype=np.int64).reshape(n, n), F2)


# predicates ----------------------------------------------------------------


def _ranks(mats: np.ndarray) -> np.ndarray:
    n = mats.shape[-1]
    rows = (mats.astype(np.int64) << np.arange(n)).sum(axis=2)
    return np.array([linalg.xor_rank(list(map(int, r))) for r in rows])


def predicate_mask(mats: np.ndarray, predicate: str) -> np.ndarray:
    pred = canonical_predicate(predicate)
    sym = (mats == mats.transpose(0, 2, 1)).all(axis=(1, 2))
    if pred == "all":
        return np.ones(len(mats), dtype=bool)
    if pred == "all-sym":
        return sym
    nondeg = _ranks(mats) == mats.shape[-1]
    return nondeg & (sym if pred == "nondeg-sym" else ~sym)


# group action ----------------------------------------------------------------


def _congruence_image(mats: np.ndarray, i: int, j: int) -> np.ndarray:
    y = mats.copy()
    y[:, i, :] ^= y[:, j, :]
    y[:, :, i] ^= y[:, :, j]
    return encode(y)


def _translation_image(codes: np.ndarray, n: int, i: int, j: int) -> np.ndarray:
    w = _weights(n)
    t = int(w[i, j]) | int(w[j, i])
    return codes ^ t


def generator_images(n: int, equivalence: str) -> list[np.ndarray]:
    if equivalence not in EQUIVALENCES:
        raise OracleError(f"unknown equivalence {equivalence!r}")
    mats = all_matrices(n)
    codes = np.arange(len(mats), dtype=np.int64)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    with ThreadPoolExecutor(thread_count()) as pool:
        imgs = list(pool.map(lambda p: _congruence_image(mats, *p), pairs))
    if equivalence == "sociological":
        imgs += [_translation_image(codes, n, i, j) for i in range(n) for j in range(i, n)]
    elif equivalence == "albert":
        imgs += [_translation_image(codes, n, i, j) for i in range(n) for j in range(i + 1, n)]
    return imgs


def orbit_labels(n: int, equivalence: str) -> np.ndarray:
    """Smallest code in the orbit of every code."""
    imgs = generator_images(n, equivalence)
    lab = np.arange(1 << (n * n), dtype=np.int64)
    while True:
        new = lab
        for img in imgs:
            new = np.minimum(new, lab[img])
        new = new[new]
        if np.array_equal(new, lab):
            return lab
        lab = new


# census --------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCensus:
    n: int
    predicate: str
    equivalence: str
    representatives: tuple[FormMatrix, ...]
    orbit_sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "predicate": self.predicate,
            "equivalence": self.equivalence,
            "count": self.count,
            "orbit_sizes": list(self.orbit_sizes),
            "representatives": [r.tolist() for r in self.representatives],
        }


def enumerate_classes(n: int, predicate: str = "nondeg-nonsym", equivalence: str = "congruence") -> OrbitCensus:
    """Orbits of the predicate set under the chosen equivalence.

    For the sociological and Albert equivalences the predicates need not be
    invariant; a class is then an orbit meeting the predicate set, its size
    counts only the members satisfying the predicate, and its
    representative is the smallest such member.
    """
    if not 1 <= n <= MAX_N:
        raise OracleError(f"exhaustive enumeration needs 1 <= n <= {MAX_N}")
    pred = canonical_predicate(predicate)
    lab = orbit_labels(n, equivalence)
    mask = predicate_mask(all_matrices(n), pred)
    codes = np.flatnonzero(mask)
    roots, sizes = np.unique(lab[codes], return_counts=True)
    reps = []
    for r in roots:
        members = codes[lab[codes] == r]
        reps.append(decode(int(members.min()), n))
    if equivalence == "congruence":
        g = gl_order(n)
        bad = [int(s) for s in sizes if g % int(s)]
        if bad:
            raise AssertionError(f"orbit sizes {bad} do not divide |GL({n}, 2)| = {g}")
    return OrbitCensus(n, pred, equivalence, tuple(reps), tuple(int(s) for s in sizes))


def same_orbit(b: FormMatrix, c: FormMatrix, equivalence: str = "congruence") -> bool:
    n = b.n
    if c.n != n or b.ctx.m != 1 or c.ctx.m != 1:
        raise OracleError("GF(2) matrices of equal size required")
    lab = orbit_labels(n, equivalence)
    return bool(lab[int(encode(b.a))] == lab[int(encode(c.a))])


# Lie equivalence -------------------------------------------------------------


@dataclass(frozen=True)
class ClusterReport:
    clusters: tuple[tuple[int, ...], ...]
    fingerprints: tuple[Fingerprint, ...]

    @property
    def count(self) -> int:
        return len(self.clusters)

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "clusters": [list(c) for c in self.clusters],
            "fingerprints": [fp._asdict() for fp in self.fingerprints],
        }


def lie_equiv_cluster(reps: list[FormMatrix]) -> ClusterReport:
    """Group matrices whose preservers share the abstract fingerprint.

    Only the isomorphism invariants of the fingerprint are compared; the
    dimension of the diagonal part depends on the basis of the form.
    """
    fps = tuple(fingerprint(preserver(b)) for b in reps)
    groups: dict[tuple, list[int]] = {}
    for i, fp in enumerate(fps):
        groups.setdefault(fp.abstract(), []).append(i)
    return ClusterReport(tuple(tuple(g) for g in groups.values()), fps)


def brute_preserver(b: FormMatrix) -> AlgebraBasis:
    """Scan every X with X^T B + B X = 0 and echelonize the solutions."""
    n = b.n
    if b.ctx.m != 1 or not 1 <= n <= MAX_N:
        raise OracleError(f"brute-force preserver needs GF(2) and n <= {MAX_N}")
    xs = all_matrices(n)
    bm = b.a.astype(np.int64)
    lhs = (np.einsum("kji,jl->kil", xs, bm) + np.einsum("ij,kjl->kil", bm, xs)) & 1
    sols = xs[~lhs.any(axis=(1, 2))]
    rows = linalg.row_basis(F2, sols.reshape(-1, n * n), n * n)
    return AlgebraBasis(n, F2, rows)
