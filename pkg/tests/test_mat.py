import numpy as np
import pytest
from hypothesis import given, strategies as st

from char2forms import linalg
from char2forms.mat import (
    FormMatrix,
    MatrixError,
    ParseError,
    block,
    block_diag,
    format_matrix,
    identity,
    inverse,
    is_invertible,
    is_symmetric,
    is_zero_diagonal,
    kernel,
    matrix,
    parse_matrix,
    predicates,
    quad_value,
    rank,
    standard_form,
    zhat_witness,
)

from conftest import F2, F4, F16, SMALL_FIELDS, square_matrices


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
@given(data=st.data())
def test_text_round_trip(ctx, data):
    a = data.draw(square_matrices(ctx, 0, 6))
    assert parse_matrix(format_matrix(a)) == a


def test_parse_examples():
    assert parse_matrix("2 1\n0 1\n1 0\n") == standard_form("Pi", 2, F2)
    one = parse_matrix("1 2\n3\n")
    assert one.ctx == F4 and one.tolist() == [[3]]


@pytest.mark.parametrize("text", ["2 1\n0 1\n", "2\n0 1\n1 0\n", "1 2\n4\n", "x y\n", "", "1 1\n0 0\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_entry_range_checked():
    with pytest.raises(Exception):
        FormMatrix([[2]], F2)


def test_standard_forms_gf2():
    s3 = standard_form("S", 3, F2)
    assert s3.tolist() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert standard_form("Pi", 4, F2) == standard_form("J", 4, F2)
    assert standard_form("Z", 4, F2).tolist() == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    zh = standard_form("Zhat", 3, F2)
    assert zh.tolist() == [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert standard_form("Ytilde", 3, F2, 1).tolist() == [[0, 1, 0], [0, 0, 0], [0, 0, 1]]
    assert standard_form("Stilde", 4, F2, 1).tolist() == [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    assert standard_form("T", 3, F2, 1, 2).tolist() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]


def test_standard_form_errors():
    with pytest.raises(MatrixError):
        standard_form("Pi", 3, F2)
    with pytest.raises(MatrixError):
        standard_form("Y", 3, F2, 2)
    with pytest.raises(MatrixError):
        standard_form("nope", 2, F2)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_zhat_witness(n):
    m = zhat_witness(n, F2)
    assert m @ m.T == standard_form("Zhat", n, F2)


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
@given(data=st.data())
def test_rank_nullity_and_kernel(ctx, data):
    a = data.draw(square_matrices(ctx, 1, 6))
    ker = kernel(a)
    assert rank(a) + ker.shape[0] == a.n
    if ker.shape[0]:
        assert not ctx.matmul(a.a, ker.T).any()


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
@given(data=st.data())
def test_inverse(ctx, data):
    a = data.draw(square_matrices(ctx, 1, 5))
    if is_invertible(a):
        assert a @ inverse(a) == identity(a.n, ctx)
    else:
        with pytest.raises(MatrixError):
            inverse(a)


@given(data=st.data())
def test_transpose_reverses_products(data):
    a = data.draw(square_matrices(F16, 3, 3))
    b = data.draw(square_matrices(F16, 3, 3))
    assert (a @ b).T == b.T @ a.T


def test_predicates():
    p = predicates(standard_form("Pi", 4, F2))
    assert p == {"is_symmetric": True, "is_zero_diagonal": True, "is_invertible": True}
    e = standard_form("E", 2, F2, 1, 2)
    assert not is_symmetric(e) and is_zero_diagonal(e) and not is_invertible(e)


def test_quadratic_value_ignores_alternating_part():
    b = matrix([[1, 1], [0, 0]], F2)
    c = b + matrix([[0, 1], [1, 0]], F2)
    for x in ([1, 0], [0, 1], [1, 1]):
        assert quad_value(b, x) == quad_value(c, x)


def test_blocks():
    a = identity(2, F4)
    b = standard_form("Pi", 2, F4)
    d = block_diag(a, b)
    assert d.block(2, 4, 2, 4) == b
    z = FormMatrix._wrap(np.zeros((2, 2), dtype=np.int64), F4)
    assert block([[a, z], [z, b]]) == d


def test_mixed_fields_rejected():
    with pytest.raises(Exception):
        identity(2, F2) + identity(2, F4)


def test_xor_rank_matches_general_rank(rng):
    for _ in range(50):
        a = rng.integers(0, 2, (6, 9))
        rows = [int("".join(map(str, r)), 2) for r in a]
        assert linalg.xor_rank(rows) == linalg.rank(F2, a)
