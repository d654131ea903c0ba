from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvlie.linalg import (
    Matrix,
    Q,
    char_poly,
    congruence_diagonalize,
    inconsistency_certificate,
    is_nilpotent,
    rat_kernel,
    solve_affine,
    sym_signature,
)

from conftest import MAIN_GRAM, gram_from, invertible, matrices, small_ints


def test_strict_rational_coercion():
    assert Q("7/12") == Fraction(7, 12)
    assert Q(3) == Fraction(3)
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(ValueError):
        Q("0.5")
    with pytest.raises(ZeroDivisionError):
        Q("1/0")


def test_rank_one_kernel():
    assert rat_kernel(Matrix([[1, 2], [2, 4]])) == [(Fraction(-2), Fraction(1))]


def test_identity_kernel_is_trivial():
    assert rat_kernel(Matrix.identity(3)) == []


def test_rotation_char_poly():
    assert char_poly(Matrix([[0, -1], [1, 0]])) == [1, 0, 1]


def test_strictly_upper_triangular_char_poly():
    m = Matrix([[0, 1, 5], [0, 0, 2], [0, 0, 0]])
    assert char_poly(m) == [0, 0, 0, 1]
    assert is_nilpotent(m)


def test_char_poly_of_ad_e5_on_nilradical():
    # (x + 1)^2 (x + 2) = x^3 + 4x^2 + 5x + 2
    assert char_poly(Matrix([[-1, 0, 0], [0, -1, 0], [1, 0, -2]])) == [2, 5, 4, 1]


@pytest.mark.parametrize("gram, expected", [
    (Matrix.identity(3), (3, 0, 0)),
    (Matrix([[0, 1], [1, 0]]), (1, 1, 0)),
    (gram_from(MAIN_GRAM, 5), (3, 2, 0)),
    (Matrix([[1, 1], [1, 1]]), (1, 0, 1)),
])
def test_signature(gram, expected):
    assert sym_signature(gram) == expected


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        sym_signature(Matrix([[1, 2], [0, 1]]))


def test_null_pivot_uses_sum_vector():
    c, d = congruence_diagonalize(Matrix([[0, 1], [1, 0]]))
    assert c.col(0) == (1, 1)
    assert (c.T @ Matrix([[0, 1], [1, 0]]) @ c) == Matrix.diag(*d)


def test_char_poly_rejects_non_square():
    with pytest.raises(ValueError):
        char_poly(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_inconsistency_certificate():
    a = Matrix([[1, 1], [2, 2]])
    b = (1, 3)
    assert solve_affine(a, b) is None
    y = inconsistency_certificate(a, b)
    assert tuple(sum(y[i] * a[i, j] for i in range(2)) for j in range(2)) == (0, 0)
    assert y[0] * b[0] + y[1] * b[1] == 1


def test_inverse_and_singular():
    m = Matrix([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


@st.composite
def rect(draw):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 5))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(rows, c)


@settings(max_examples=60, deadline=None)
@given(rect())
def test_kernel_vectors_are_annihilated_and_rank_nullity(m):
    ker = rat_kernel(m)
    for v in ker:
        assert all(x == 0 for x in m @ v)
    assert m.rank() + len(ker) == m.cols
    if ker:
        assert Matrix.from_columns(ker).rank() == len(ker)


@settings(max_examples=40, deadline=None)
@given(matrices(3), invertible(3))
def test_char_poly_similarity_invariant(m, p):
    assert char_poly(p.inverse() @ m @ p) == char_poly(m)


@settings(max_examples=40, deadline=None)
@given(matrices(3), invertible(3))
def test_signature_congruence_invariant(a, c):
    gram = a + a.T
    assert sym_signature(c.T @ gram @ c) == sym_signature(gram)


@settings(max_examples=40, deadline=None)
@given(matrices(3))
def test_determinant_matches_char_poly_constant(m):
    # constant term of det(xI - m) is det(-m)
    assert char_poly(m)[0] == (-1) ** m.rows * m.det()
