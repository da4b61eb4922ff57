"""Arithmetic in GF(2^m), 1 <= m <= 16.

Elements are plain ints holding the polynomial residue in m bits; a
:class:`FieldCtx` interprets them.  Addition is xor.  Multiplication,
inversion and square roots go through exp/log tables built from a fixed
modulus per degree, so every witness computed on top of this module is
bit-reproducible.  :class:`FieldElem` is a thin value wrapper for callers
that want operator syntax; the matrix code works on raw ints and numpy
arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_DEGREE = 16

# Fixed modulus per degree, bit i = coefficient of x^i.  For m >= 2 these
# are primitive, so x generates the multiplicative group.  m = 1 uses the
# degree-1 representative x: every residue is reduced to a single bit.
MODULI = {
    1: 0b10,
    2: 0x7,  # x^2 + x + 1
    3: 0xB,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x83,  # x^7 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


class FieldError(ValueError):
    """Raised on invalid field arithmetic (division by zero, ctx mismatch)."""


def poly_mulmod(a: int, b: int, modulus: int) -> int:
    """Carry-less product of a and b reduced modulo ``modulus``."""
    deg = modulus.bit_length() - 1
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= modulus
    return r


def poly_mod(a: int, modulus: int) -> int:
    deg = modulus.bit_length() - 1
    while a and a.bit_length() - 1 >= deg:
        a ^= modulus << (a.bit_length() - 1 - deg)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division over F_2 by every polynomial of degree <= deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, q) == 0:
                return False
    return True


class FieldCtx:
    """GF(2^m) with exp/log tables.

    ``exp`` has length 2 * (q - 1) so that ``exp[log[a] + log[b]]`` needs
    no reduction.  ``log[0]`` is set to a sentinel and must be masked.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
        if modulus is None:
            modulus = MODULI[m]
        if modulus.bit_length() - 1 != m or not is_irreducible(modulus):
            raise FieldError(f"modulus {modulus:#x} is not irreducible of degree {m}")
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self.order = self.q - 1  # multiplicative group order
        self.name = f"gf2_{m}"

        q1 = self.order
        gen = self._find_generator()
        exp = np.zeros(2 * q1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for i in range(q1):
            exp[i] = x
            log[x] = i
            x = poly_mulmod(x, gen, modulus)
        exp[q1:] = exp[:q1]
        log[0] = 0
        self.generator = gen
        self.exp = exp
        self.log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        # square root is the inverse Frobenius: a -> a^(2^(m-1))
        sq = np.zeros(self.q, dtype=np.int64)
        sqrt = np.zeros(self.q, dtype=np.int64)
        half = self.q // 2
        for a in range(1, self.q):
            sq[a] = exp[(2 * log[a]) % q1]
            sqrt[a] = exp[(log[a] * half) % q1]
        self.sq_table = sq
        self.sqrt_table = sqrt
        self._sqrt_list = sqrt.tolist()
        # full product table for small fields: one gather per vectorised product
        self.mul_table = None
        if m <= 8:
            la = log[:, None] + log[None, :]
            tab = exp[la % q1] if q1 > 1 else np.ones((self.q, self.q), dtype=np.int64)
            tab[0, :] = 0
            tab[:, 0] = 0
            self.mul_table = tab
        for arr in (self.exp, self.log, self.sq_table, self.sqrt_table):
            arr.flags.writeable = False

    def _find_generator(self) -> int:
        q1 = self.order
        if q1 == 1:
            return 1
        for g in range(2, self.q):
            x, k = g, 1
            while x != 1:
                x = poly_mulmod(x, g, self.modulus)
                k += 1
            if k == q1:
                return g
        raise FieldError("no generator found")  # pragma: no cover

    def __repr__(self) -> str:
        return f"FieldCtx({self.name}, modulus={self.modulus:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    # scalar arithmetic on raw ints

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        lg = self._log_list
        return self._exp_list[lg[a] + lg[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("division by zero")
        return self._exp_list[(self.order - self._log_list[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        return self._sqrt_list[a]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp_list[(self._log_list[a] * e) % self.order]

    def elements(self) -> range:
        return range(self.q)

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2): a + a^2 + ... + a^(2^(m-1))."""
        t, x = 0, a
        for _ in range(self.m):
            t ^= x
            x = self.mul(x, x)
        return t

    # vectorised arithmetic on integer arrays

    def vmul(self, a, b):
        """Elementwise product of broadcastable int arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return a & b
        if self.mul_table is not None:
            return self.mul_table[a, b]
        r = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vscale(self, c: int, a):
        a = np.asarray(a, dtype=np.int64)
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        if self.mul_table is not None:
            return self.mul_table[c][a]
        r = self.exp[self.log[a] + self._log_list[c]]
        return np.where(a == 0, 0, r)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError("division by zero")
        return self.exp[(self.order - self.log[a]) % self.order]

    def vsqrt(self, a):
        return self.sqrt_table[np.asarray(a, dtype=np.int64)]

    def vsq(self, a):
        return self.sq_table[np.asarray(a, dtype=np.int64)]

    def matmul(self, a, b):
        """Matrix product over the field of 2-D int arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a @ b) & 1
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        prod = self.vmul(a[:, :, None], b[None, :, :])
        return np.bitwise_xor.reduce(prod, axis=1)

    # text format

    def format_elem(self, a: int) -> str:
        return format(a, "x")

    def parse_elem(self, s: str) -> int:
        try:
            v = int(s, 16)
        except ValueError as exc:
            raise FieldError(f"bad field element {s!r}") from exc
        if not 0 <= v < self.q:
            raise FieldError(f"element {s!r} out of range for {self.name}")
        return v


@lru_cache(maxsize=None)
def make_ctx(m: int) -> FieldCtx:
    """The context for GF(2^m) with the published modulus.  Cached."""
    if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
        raise FieldError(f"extension degree must be in 1..{MAX_DEGREE}, got {m!r}")
    return FieldCtx(m)


def parse_field(spec: str) -> FieldCtx:
    """Parse a context string ``gf2_m``."""
    if not spec.startswith("gf2_"):
        raise FieldError(f"field spec must look like gf2_m, got {spec!r}")
    try:
        m = int(spec[4:])
    except ValueError as exc:
        raise FieldError(f"field spec must look like gf2_m, got {spec!r}") from exc
    return make_ctx(m)


@dataclass(frozen=True)
class FieldElem:
    bits: int
    ctx: FieldCtx

    def __post_init__(self):
        if not 0 <= self.bits < self.ctx.q:
            raise FieldError(f"{self.bits} is not an element of {self.ctx.name}")

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")
        if other.ctx != self.ctx:
            raise FieldError(f"context mismatch: {self.ctx.name} vs {other.ctx.name}")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.bits ^ other.bits, self.ctx)

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.ctx.mul(self.bits, other.bits), self.ctx)

    def __truediv__(self, other):
        self._check(other)
        return FieldElem(self.ctx.div(self.bits, other.bits), self.ctx)

    def __pow__(self, e: int):
        return FieldElem(self.ctx.pow(self.bits, e), self.ctx)

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx.inv(self.bits), self.ctx)

    def sqrt(self) -> "FieldElem":
        return FieldElem(self.ctx.sqrt(self.bits), self.ctx)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return self.ctx.format_elem(self.bits)


def elem(ctx: FieldCtx, bits: int) -> FieldElem:
    return FieldElem(bits, ctx)


def arith(op: str, a: FieldElem, b: FieldElem | None = None) -> FieldElem:
    """Dispatch ``add``, ``mul``, ``inv`` or ``div`` on field elements."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def sqrt(a: FieldElem) -> FieldElem:
    return a.sqrt()
