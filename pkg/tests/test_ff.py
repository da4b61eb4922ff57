import numpy as np
import pytest
from hypothesis import given, strategies as st

from char2forms.ff import MAX_DEGREE, FieldCtx, FieldError, elem, make_ctx, parse_field

from conftest import SMALL_FIELDS

DEGREES = [1, 2, 3, 4, 8, 16]


def elems(m):
    return st.integers(0, (1 << m) - 1)


@pytest.mark.parametrize("m", DEGREES)
@given(data=st.data())
def test_field_axioms(m, data):
    ctx = make_ctx(m)
    a, b, c = (data.draw(elems(m)) for _ in range(3))
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
    assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
    assert ctx.mul(a, 1) == a
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1


@pytest.mark.parametrize("m", DEGREES)
@given(data=st.data())
def test_frobenius_is_additive_and_sqrt_inverts_it(m, data):
    ctx = make_ctx(m)
    a, b = data.draw(elems(m)), data.draw(elems(m))
    assert ctx.mul(a ^ b, a ^ b) == ctx.mul(a, a) ^ ctx.mul(b, b)
    assert ctx.mul(ctx.sqrt(a), ctx.sqrt(a)) == a


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_trace_is_onto_gf2(m):
    ctx = make_ctx(m)
    traces = [ctx.trace(a) for a in ctx.elements()]
    assert set(traces) == {0, 1}
    assert traces.count(1) == ctx.q // 2


def test_gf4_table():
    ctx = make_ctx(2)
    # g = x, g^2 = g + 1
    assert ctx.mul(2, 2) == 3
    assert ctx.mul(2, 3) == 1
    assert ctx.inv(3) == 2


def test_gf2_is_bits():
    ctx = make_ctx(1)
    assert [ctx.mul(a, b) for a in (0, 1) for b in (0, 1)] == [0, 0, 0, 1]
    assert ctx.inv(1) == 1


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
def test_vectorised_ops_match_scalar(ctx, rng):
    a = rng.integers(0, ctx.q, 50)
    b = rng.integers(0, ctx.q, 50)
    assert ctx.vmul(a, b).tolist() == [ctx.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert ctx.vscale(int(b[0]), a).tolist() == [ctx.mul(int(b[0]), int(x)) for x in a]


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
def test_matmul_against_naive(ctx, rng):
    a = rng.integers(0, ctx.q, (3, 4))
    b = rng.integers(0, ctx.q, (4, 2))
    out = ctx.matmul(a, b)
    for i in range(3):
        for j in range(2):
            acc = 0
            for k in range(4):
                acc ^= ctx.mul(int(a[i, k]), int(b[k, j]))
            assert out[i, j] == acc


def test_division_by_zero():
    with pytest.raises(FieldError):
        make_ctx(3).inv(0)


def test_bad_degree_and_modulus():
    with pytest.raises(FieldError):
        make_ctx(MAX_DEGREE + 1)
    with pytest.raises(FieldError):
        FieldCtx(2, 0b101)  # x^2 + 1 = (x + 1)^2


def test_parse_field():
    assert parse_field("gf2_4") == make_ctx(4)
    for bad in ("gf3_1", "gf2_x", "GF(4)"):
        with pytest.raises(FieldError):
            parse_field(bad)


def test_elem_wrapper():
    ctx = make_ctx(2)
    g = elem(ctx, 2)
    assert g * g == g + elem(ctx, 1)
    assert (g / g) == elem(ctx, 1)
    assert g ** 3 == elem(ctx, 1)
    with pytest.raises(FieldError):
        g + elem(make_ctx(3), 2)


def test_parse_elem_range():
    ctx = make_ctx(2)
    assert ctx.parse_elem("3") == 3
    with pytest.raises(FieldError):
        ctx.parse_elem("4")
