"""Contactness of linear 1-forms dx_0 + sum B_ij x_i dx_j in characteristic 2.

Everything reduces to rank computations on B.  Variables x_1..x_n carry
parities (0 even, 1 odd) and must be listed even-first.  When x_0 is even
the form B must be even (no entries pairing variables of different
parity); when x_0 is odd it must be odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .canon import albert_label, sociological_rank
from .mat import FormMatrix, MatrixError, rank


class ContactError(ValueError):
    """Malformed 1-form description or a request that needs a contact form."""


@dataclass(frozen=True)
class OneFormSpec:
    b: FormMatrix
    x0_parity: int = 0
    var_parities: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.b.rows != self.b.cols:
            raise ContactError("B must be square")
        pars = tuple(int(p) for p in self.var_parities) or (0,) * self.b.n
        object.__setattr__(self, "var_parities", pars)
        if len(pars) != self.b.n:
            raise ContactError(f"{len(pars)} parities for {self.b.n} variables")
        if any(p not in (0, 1) for p in pars) or self.x0_parity not in (0, 1):
            raise ContactError("parities must be 0 or 1")
        if list(pars) != sorted(pars):
            raise ContactError("even variables must come first")
        n0 = self.n0
        a = self.b.a
        cross = a[:n0, n0:].any() or a[n0:, :n0].any()
        same = a[:n0, :n0].any() or a[n0:, n0:].any()
        if self.x0_parity == 0 and cross:
            raise ContactError("x_0 even needs B to pair variables of equal parity only")
        if self.x0_parity == 1 and same:
            raise ContactError("x_0 odd needs B to pair variables of opposite parity only")

    @property
    def n(self) -> int:
        return self.b.n

    @property
    def n0(self) -> int:
        return self.var_parities.count(0)

    @property
    def n1(self) -> int:
        return self.var_parities.count(1)

    @classmethod
    def uniform(cls, b: FormMatrix, parity: int) -> "OneFormSpec":
        return cls(b, 0, (parity,) * b.n)


class ContactVerdict(NamedTuple):
    contact: bool
    r: int
    variant: str
    expression: str | None

    def as_dict(self) -> dict:
        return {"contact": self.contact, "class": {"r": self.r, "variant": self.variant}, "expression": self.expression}


def _even_part(b: FormMatrix) -> tuple[bool, int]:
    rk = sociological_rank(b)
    return rk == b.n, rk // 2


def _odd_part(b: FormMatrix) -> tuple[bool, int, bool]:
    """(non-degenerate, r, tilde) from the Albert label of B."""
    if b.n == 0:
        return True, 0, False
    lab = albert_label(b)
    ok = b.n == 2 * lab.r or (b.n == 2 * lab.r + 1 and lab.tilde)
    return ok, lab.r, lab.tilde


def _terms(pairs: list[tuple[str, str]], k: int) -> list[str]:
    if k == 1:
        return [f"{a} d{c}" for a, c in pairs]
    return [f"{a}_{i} d{c}_{i}" for i in range(1, k + 1) for a, c in pairs]


def _sum(head: str, terms: list[str]) -> str:
    return " + ".join([head, *terms])


def is_contact(spec: OneFormSpec) -> ContactVerdict:
    b = spec.b
    n, n0, n1 = spec.n, spec.n0, spec.n1
    if spec.x0_parity == 1:
        c = b.block(0, n0, n0, n)
        d = b.block(n0, n, 0, n0)
        r = rank(d + c.T) if n0 and n1 else 0
        ok = r == n0 == n1
        expr = _sum("dτ", _terms([("ξ", "q")], r)) if ok and r else ("dτ" if ok else None)
        return ContactVerdict(ok, r, "pericontact", expr)
    b0 = b.block(0, n0, 0, n0)
    b1 = b.block(n0, n, n0, n)
    ok0, r0 = _even_part(b0) if n0 else (True, 0)
    ok1, r1, tilde = _odd_part(b1)
    ok = ok0 and ok1
    if n1 == 0:
        variant = "even"
    elif n0 == 0:
        variant = "Ytilde" if tilde else "Y"
    else:
        variant = "mixed-Ytilde" if tilde else "mixed-Y"
    expr = _expression(n0, n1, r0, r1) if ok else None
    return ContactVerdict(ok, r0 + r1, variant, expr)


def _expression(n0: int, n1: int, r0: int, r1: int) -> str:
    terms = []
    if n0 == 0:
        # all odd variables: same shape as the all-even display
        if r1:
            terms += _terms([("p", "q")], r1)
        if n1 % 2:
            terms.append(f"x_{n1} dx_{n1}")
        return _sum("dt", terms)
    if r0:
        terms += _terms([("p", "q")], r0)
    if r1:
        terms += _terms([("ξ", "η")], r1)
    if n1 % 2:
        terms.append("θ dθ")
    return _sum("dt", terms)


def canonical_contact_expression(spec: OneFormSpec) -> str:
    v = is_contact(spec)
    if not v.contact:
        raise ContactError("the 1-form is not contact")
    return v.expression


def one_form_text(spec: OneFormSpec) -> str:
    """The 1-form written out term by term, x_0 first."""
    terms = []
    for i in range(spec.n):
        for j in range(spec.n):
            c = int(spec.b.a[i, j])
            if c:
                coef = "" if c == 1 else f"{spec.b.ctx.format_elem(c)}*"
                terms.append(f"{coef}x_{i + 1} dx_{j + 1}")
    return _sum("dx_0", terms)


def parse_parities(text: str, n: int) -> tuple[int, int, tuple[int, ...]]:
    """'even'/'odd' (all variables) or 'n0,n1' into (n0, n1, parity tuple)."""
    t = text.strip().lower()
    if t in ("even", "0"):
        return n, 0, (0,) * n
    if t in ("odd", "1"):
        return 0, n, (1,) * n
    try:
        n0, n1 = (int(x) for x in t.split(","))
    except ValueError as exc:
        raise MatrixError(f"bad parity description {text!r}") from exc
    if n0 + n1 != n:
        raise ContactError(f"superdimension ({n0}|{n1}) does not match n = {n}")
    return n0, n1, (0,) * n0 + (1,) * n1
