"""Random matrices for property tests and reproduction scripts."""

from __future__ import annotations

import numpy as np

from . import linalg
from .ff import FieldCtx
from .mat import FormMatrix


def random_matrix(ctx: FieldCtx, n: int, rng: np.random.Generator, cols: int | None = None) -> FormMatrix:
    return FormMatrix._wrap(rng.integers(0, ctx.q, (n, n if cols is None else cols)), ctx)


def random_invertible(ctx: FieldCtx, n: int, rng: np.random.Generator) -> FormMatrix:
    while True:
        a = rng.integers(0, ctx.q, (n, n))
        if linalg.rank(ctx, a) == n:
            return FormMatrix._wrap(a, ctx)


def random_symmetric(ctx: FieldCtx, n: int, rng: np.random.Generator, zero_diagonal: bool = False) -> FormMatrix:
    a = np.triu(rng.integers(0, ctx.q, (n, n)), 1 if zero_diagonal else 0)
    return FormMatrix._wrap(a ^ np.triu(a, 1).T, ctx)


def random_nondegenerate_symmetric(
    ctx: FieldCtx, n: int, rng: np.random.Generator, zero_diagonal: bool = False
) -> FormMatrix:
    if zero_diagonal and n % 2:
        raise ValueError("an alternating form of odd size is degenerate")
    while True:
        b = random_symmetric(ctx, n, rng, zero_diagonal)
        if linalg.rank(ctx, b.a) == n:
            return b


def random_zero_diagonal_symmetric(ctx: FieldCtx, n: int, rng: np.random.Generator) -> FormMatrix:
    return random_symmetric(ctx, n, rng, zero_diagonal=True)
