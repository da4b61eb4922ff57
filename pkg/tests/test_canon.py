import numpy as np
import pytest
from hypothesis import given, strategies as st

from char2forms import canon as C
from char2forms.mat import FormMatrix, MatrixError, block_diag, identity, is_symmetric, is_zero_diagonal, matrix, rank, standard_form, zeros
from char2forms.sampling import random_invertible, random_matrix, random_symmetric

from conftest import F2, F4, F16, SMALL_FIELDS, square_matrices


def expected_symmetric_canonical(b):
    n, r = b.n, rank(b)
    core = standard_form("Z" if is_zero_diagonal(b) else "identity", r, b.ctx)
    if r == n:
        return core
    return block_diag(core, zeros(n - r, None, b.ctx)) if r else zeros(n, None, b.ctx)


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
@given(data=st.data())
def test_symmetric_reduction_certificate(ctx, data):
    b = data.draw(square_matrices(ctx, 1, 6, symmetric=True, zero_diagonal=data.draw(st.booleans())))
    res = C.reduce_symmetric(b)
    assert res.verify()
    assert res.canonical == expected_symmetric_canonical(b)
    assert res.label == C.SymClass(b.n, rank(b), is_zero_diagonal(b))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_named_forms_reduce(n):
    res = C.reduce_symmetric(identity(n, F2))
    assert res.verify() and res.canonical == identity(n, F2)
    if n % 2 == 1:
        for kind in ("S", "Zhat"):
            assert C.reduce_symmetric(standard_form(kind, n, F2)).canonical == identity(n, F2)
    else:
        # the antidiagonal has zero diagonal for even n
        for kind in ("S", "Pi", "Z"):
            res = C.reduce_symmetric(standard_form(kind, n, F2))
            assert res.verify() and res.canonical == standard_form("Z", n, F2)


def test_s4_congruent_to_z4():
    s4, z4 = standard_form("S", 4, F2), standard_form("Z", 4, F2)
    ok, x = C.equiv_symmetric(s4, z4)
    assert ok and x @ s4 @ x.T == z4
    ok, _ = C.equiv_symmetric(s4, identity(4, F2))
    assert not ok


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
def test_congruence_invariance(ctx, rng):
    for _ in range(20):
        n = int(rng.integers(1, 6))
        b = random_symmetric(ctx, n, rng, zero_diagonal=bool(rng.integers(2)))
        m = random_invertible(ctx, n, rng)
        c = m @ b @ m.T
        assert C.sym_class(b) == C.sym_class(c)
        ok, x = C.equiv_symmetric(b, c)
        assert ok and x @ b @ x.T == c
        res = C.congruence_equivalence(b, c)
        assert res.verify()


def test_sym_class_rejects_nonsymmetric():
    with pytest.raises(C.CanonError):
        C.sym_class(standard_form("E", 2, F2, 1, 2))


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
@given(data=st.data())
def test_sociological_certificate(ctx, data):
    b = data.draw(square_matrices(ctx, 1, 6))
    res = C.sociological_canon(b)
    assert res.verify()
    r = C.sociological_rank(b)
    assert res.canonical == standard_form("Stilde", b.n, ctx, r // 2)
    assert is_symmetric(res.witness_A)


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
def test_sociological_witness_between_matrices(ctx, rng):
    for _ in range(20):
        n = int(rng.integers(1, 6))
        b = random_matrix(ctx, n, rng)
        m = random_invertible(ctx, n, rng)
        c = m @ b @ m.T + random_symmetric(ctx, n, rng)
        assert C.sociological_equivalent(b, c)
        res = C.offset_equivalence(C.sociological_canon(b), C.sociological_canon(c))
        assert res is not None and res.verify()


def test_sociological_example():
    assert C.sociological_rank(standard_form("E", 2, F2, 1, 2)) == 2
    assert C.sociological_rank(identity(3, F2)) == 0


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
@given(data=st.data())
def test_albert_certificate_or_arf_obstruction(ctx, data):
    b = data.draw(square_matrices(ctx, 1, 6))
    lab = C.albert_label(b)
    try:
        res = C.albert_canon(b)
    except C.ArfObstruction:
        assert not lab.tilde and C.arf_invariant(b) == 1
        return
    assert res.verify()
    assert res.label == lab
    assert is_zero_diagonal(res.witness_A)
    kind = "Ytilde" if lab.tilde else "Y"
    assert res.canonical == standard_form(kind, b.n, ctx, lab.r)


@pytest.mark.parametrize("ctx", SMALL_FIELDS, ids=lambda c: c.name)
def test_albert_invariants_under_transformations(ctx, rng):
    for _ in range(30):
        n = int(rng.integers(1, 6))
        b = random_matrix(ctx, n, rng)
        m = random_invertible(ctx, n, rng)
        c = m @ b @ m.T + random_symmetric(ctx, n, rng, zero_diagonal=True)
        assert C.albert_label(b) == C.albert_label(c)
        assert C.arf_invariant(b) == C.arf_invariant(c)
        assert C.albert_equivalent(b, c)


def test_arf_obstruction_example():
    b = matrix([[1, 1], [0, 1]], F2)
    assert C.albert_label(b) == C.AlbertLabel(2, 1, False)
    assert C.arf_invariant(b) == 1
    with pytest.raises(C.ArfObstruction):
        C.albert_canon(b)
    # the same quadratic form splits over GF(4)
    b4 = matrix([[1, 1], [0, 1]], F4)
    assert C.arf_invariant(b4) == 0
    assert C.albert_canon(b4).verify()


def test_albert_identity_two():
    res = C.albert_canon(identity(2, F2))
    assert res.label == C.AlbertLabel(2, 0, True)
    assert res.verify()


@pytest.mark.parametrize("ctx", [F2, F4], ids=lambda c: c.name)
def test_super_even_canon(ctx, rng):
    for _ in range(10):
        b0 = random_symmetric(ctx, 3, rng)
        b1 = random_symmetric(ctx, 2, rng)
        res = C.super_even_canon(block_diag(b0, b1), (3, 2))
        assert res.verify()
        assert res.label["even"]["r"] == rank(b0)


def test_super_even_rejects_odd_entries():
    with pytest.raises(C.CanonError):
        C.super_even_canon(standard_form("Pi", 4, F2), (2, 2))


@pytest.mark.parametrize("ctx", [F2, F4, F16], ids=lambda c: c.name)
def test_super_odd_symmetric(ctx, rng):
    k = 3
    x = random_invertible(ctx, k, rng)
    z = zeros(k, None, ctx)
    from char2forms.mat import block

    b = block([[z, x], [x.T, z]])
    res = C.super_odd_sym_canon(b, k)
    assert res.verify() and res.canonical == standard_form("Pi", 2 * k, ctx)


def test_char_poly_against_brute_force(rng):
    for ctx in (F2, F4):
        for _ in range(10):
            t = random_matrix(ctx, 3, rng).a
            p = C.char_poly(ctx, t)
            for lam in range(ctx.q):
                shifted = t.copy()
                for i in range(3):
                    shifted[i, i] ^= lam
                singular = rank(FormMatrix._wrap(shifted, ctx)) < 3
                assert singular == (C._poly_eval(ctx, p, lam) == 0)


@pytest.mark.parametrize("ctx", [F2, F4, F16], ids=lambda c: c.name)
def test_jordan_form_conjugates(ctx, rng):
    done = 0
    for _ in range(60):
        t = random_matrix(ctx, 4, rng).a
        try:
            j, p, blocks = C.jordan_form(ctx, t)
        except C.JordanError:
            continue
        pinv = np.asarray(C.inverse(FormMatrix._wrap(p, ctx)).a)
        assert np.array_equal(ctx.matmul(ctx.matmul(p, t), pinv), j)
        assert sum(bl.size for bl in blocks) == 4
        done += 1
    assert done > 5


def test_jordan_examples():
    for t in ([[1, 1], [0, 1]], [[0, 1], [1, 0]]):
        _, _, blocks = C.jordan_form(F2, np.array(t))
        assert blocks == [C.JordanBlock(1, 2)]
    with pytest.raises(C.JordanError):
        C.jordan_form(F2, np.array([[1, 1], [1, 0]]))


def test_super_odd_nonsymmetric(rng):
    k = 2
    a = matrix([[1, 0], [0, 1]], F2)
    c = matrix([[1, 1], [0, 1]], F2)
    z = zeros(k, None, F2)
    from char2forms.mat import block

    res = C.super_odd_nonsym_canon(block([[z, a], [c, z]]), k)
    assert res.verify()
    assert res.label == {"blocks": [[1, 2]]}
