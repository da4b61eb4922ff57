"""Bit-packed matrices over GF(2): one Python int per row, bit j = column j."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ff import make_ctx
from .linalg import xor_rank
from .mat import FormMatrix, MatrixError


def rref_rows(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced echelon form of int bitset rows; returns (nonzero rows, pivots)."""
    work = list(rows)
    out: list[int] = []
    pivots: list[int] = []
    for c in range(ncols):
        bit = 1 << c
        for idx, r in enumerate(work):
            if r & bit:
                break
        else:
            continue
        prow = work.pop(idx)
        work = [r ^ prow if r & bit else r for r in work]
        out = [r ^ prow if r & bit else r for r in out]
        out.append(prow)
        pivots.append(c)
    return out, pivots


def rank_rows(rows: list[int]) -> int:
    """Rank of int bitset rows (xor basis)."""
    return xor_rank(rows)


@dataclass(frozen=True)
class PackedMatrixF2:
    rows: int
    cols: int
    words: tuple[int, ...]

    def __post_init__(self):
        if len(self.words) != self.rows:
            raise MatrixError("word count must equal row count")
        mask = (1 << self.cols) - 1
        if any(w & ~mask for w in self.words):
            raise MatrixError("bits set beyond column count")

    @classmethod
    def from_form(cls, a: FormMatrix) -> "PackedMatrixF2":
        if a.ctx.m != 1:
            raise MatrixError("packed matrices are GF(2) only")
        words = tuple(sum(int(x) << j for j, x in enumerate(row)) for row in a.a)
        return cls(a.rows, a.cols, words)

    def to_form(self) -> FormMatrix:
        arr = np.zeros((self.rows, self.cols), dtype=np.int64)
        for i, w in enumerate(self.words):
            for j in range(self.cols):
                arr[i, j] = (w >> j) & 1
        return FormMatrix(arr, make_ctx(1))

    def transpose(self) -> "PackedMatrixF2":
        words = []
        for j in range(self.cols):
            w = 0
            for i, r in enumerate(self.words):
                if (r >> j) & 1:
                    w |= 1 << i
            words.append(w)
        return PackedMatrixF2(self.cols, self.rows, tuple(words))

    def __matmul__(self, other: "PackedMatrixF2") -> "PackedMatrixF2":
        if self.cols != other.rows:
            raise MatrixError("dimension mismatch")
        out = []
        for r in self.words:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.words[j]
                r >>= 1
                j += 1
            out.append(acc)
        return PackedMatrixF2(self.rows, other.cols, tuple(out))

    def __add__(self, other: "PackedMatrixF2") -> "PackedMatrixF2":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise MatrixError("dimension mismatch")
        return PackedMatrixF2(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.words, other.words)))

    def rank(self) -> int:
        return rank_rows(list(self.words))

    def kernel(self) -> list[int]:
        """RREF basis of {x : A x = 0}; vectors as int bitsets over columns."""
        red, piv = rref_rows(list(self.words), self.cols)
        pivset = set(piv)
        vecs = []
        for f in range(self.cols):
            if f in pivset:
                continue
            v = 1 << f
            for r, p in zip(red, piv):
                if (r >> f) & 1:
                    v |= 1 << p
            vecs.append(v)
        basis, _ = rref_rows(vecs, self.cols)
        return sorted(basis, key=lambda w: (w & -w).bit_length())

    def kernel_array(self) -> np.ndarray:
        k = self.kernel()
        arr = np.zeros((len(k), self.cols), dtype=np.int64)
        for i, w in enumerate(k):
            for j in range(self.cols):
                arr[i, j] = (w >> j) & 1
        return arr
