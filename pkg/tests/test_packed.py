import numpy as np
from hypothesis import given, strategies as st

from char2forms.mat import FormMatrix, kernel, rank
from char2forms.packed import PackedMatrixF2, rank_rows, rref_rows

from conftest import F2, square_matrices


@given(data=st.data())
def test_round_trip(data):
    a = data.draw(square_matrices(F2, 1, 8))
    assert PackedMatrixF2.from_form(a).to_form() == a


@given(data=st.data())
def test_packed_rank_and_kernel_match_dense(data):
    a = data.draw(square_matrices(F2, 1, 8))
    p = PackedMatrixF2.from_form(a)
    assert p.rank() == rank(a)
    assert np.array_equal(p.kernel_array(), kernel(a))


@given(data=st.data())
def test_product_and_transpose(data):
    a = data.draw(square_matrices(F2, 4, 4))
    b = data.draw(square_matrices(F2, 4, 4))
    pa, pb = PackedMatrixF2.from_form(a), PackedMatrixF2.from_form(b)
    assert (pa @ pb).to_form() == a @ b
    assert (pa + pb).to_form() == a + b
    assert pa.transpose().to_form() == a.T


def test_rref_rows_small():
    rows, piv = rref_rows([0b011, 0b110, 0b101], 3)
    assert piv == [0, 1]
    assert rank_rows([0b011, 0b110, 0b101]) == 2
    assert sorted(rows) == [0b101, 0b110]
