import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from elemop import (
    GaussianRational,
    Matrix,
    ShapeError,
    kron,
    matrix_poly,
    rank_one,
    unvec,
    vec,
)
from helpers import rand_matrix

J2 = Matrix([[0, 1], [0, 0]])
J2T = Matrix([[0, 0], [1, 0]])

# the parametric 3x3 family at (a, b, c, d, k) = (1, 2, 3, 0, 3)
FAMILY_A = Matrix([[1, 2, 1], [3, 0, 1], [0, 0, 3]])
FAMILY_B = Matrix([[1, 2, 0], [3, 0, 0], [0, 0, 3]])

entries2 = st.lists(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2),
    min_size=2,
    max_size=2,
)
matrices2 = st.builds(Matrix, entries2)


def test_shift_pair_product():
    assert J2 * J2T == Matrix([[1, 0], [0, 0]])
    assert J2T * J2 == Matrix([[0, 0], [0, 1]])


def test_identity_is_neutral():
    rng = random.Random(1)
    for _ in range(10):
        x = rand_matrix(rng, 3, gaussian=True)
        assert Matrix.identity(3) * x == x
        assert x * Matrix.identity(3) == x


def test_family_products_commute():
    # both orders computed independently give the same frozen product
    expected = Matrix([[7, 2, 3], [3, 6, 3], [0, 0, 9]])
    assert FAMILY_A * FAMILY_B == expected
    assert FAMILY_B * FAMILY_A == expected


def test_addition_and_scaling():
    m = Matrix([[1, 2], [3, 4]])
    assert m + m == 2 * m == m * 2
    assert m - m == Matrix.zero(2)
    assert -m + m == Matrix.zero(2)
    assert GaussianRational(0, 1) * m == Matrix([["i", "2i"], ["3i", "4i"]])
    assert Fraction(1, 2) * m == Matrix([["1/2", "1"], ["3/2", "2"]])


def test_shape_errors_name_both_shapes():
    with pytest.raises(ShapeError, match="2x2.*2x3"):
        Matrix.zero(2) + Matrix.zero(2, 3)
    with pytest.raises(ShapeError, match="2x3.*2x2"):
        Matrix.zero(2, 3) * Matrix.zero(2, 2)
    with pytest.raises(ShapeError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix([])


def test_kron_block_structure():
    # identity (x) J2 is block diagonal with two J2 blocks
    assert kron(Matrix.identity(2), J2) == Matrix(
        [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
    )
    # J2 (x) identity puts the identity in the upper-right block
    assert kron(J2, Matrix.identity(2)) == Matrix(
        [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]]
    )


def test_kron_mixed_product_law():
    rng = random.Random(2)
    for _ in range(20):
        a, b, c, d = (rand_matrix(rng, 2, gaussian=True) for _ in range(4))
        assert kron(a, b) * kron(c, d) == kron(a * c, b * d)


def test_vec_column_stacking():
    assert vec(Matrix([[1, 2], [3, 4]])) == Matrix([[1], [3], [2], [4]])


def test_unvec_round_trip():
    rng = random.Random(3)
    for rows, cols in [(1, 1), (2, 3), (3, 2), (3, 3)]:
        x = rand_matrix(rng, rows, cols)
        assert unvec(vec(x), rows, cols) == x
    with pytest.raises(ShapeError):
        unvec(Matrix([[1], [2], [3]]), 2, 2)


@given(matrices2, matrices2, matrices2)
def test_vec_of_sandwich_matches_kron(a, x, b):
    assert vec(a * x * b) == kron(b.T, a) * vec(x)


def test_powers():
    assert J2**2 == Matrix.zero(2)
    assert J2**0 == Matrix.identity(2)
    n = Matrix([[0, 0, 1], [0, 0, 1], [0, 0, 0]])
    assert n**2 == Matrix.zero(3)
    with pytest.raises(ShapeError):
        Matrix.zero(2, 3) ** 2
    with pytest.raises(ValueError):
        J2 ** -1


def test_trace():
    assert Matrix.identity(3).trace() == GaussianRational(3)
    assert J2.trace() == GaussianRational(0)
    assert FAMILY_A.trace() == GaussianRational(4)
    with pytest.raises(ShapeError):
        Matrix.zero(2, 3).trace()


def test_rank_one_outer_product():
    f = Matrix([[1, 0]])
    x = Matrix([[0], [1]])
    assert rank_one(f, x) == Matrix([[0, 0], [1, 0]])


def test_rank_one_action():
    rng = random.Random(4)
    for _ in range(10):
        f = rand_matrix(rng, 1, 3)
        x = rand_matrix(rng, 3, 1)
        z = rand_matrix(rng, 3, 1)
        fz = (f * z)[0, 0]
        assert rank_one(f, x) * z == fz * x


def test_rank_one_has_rank_one():
    rng = random.Random(5)
    f = rand_matrix(rng, 1, 3)
    x = rand_matrix(rng, 3, 1)
    while f.is_zero:
        f = rand_matrix(rng, 1, 3)
    while x.is_zero:
        x = rand_matrix(rng, 3, 1)
    m = rank_one(f, x)
    assert not m.is_zero
    for i1 in range(3):
        for i2 in range(i1 + 1, 3):
            for j1 in range(3):
                for j2 in range(j1 + 1, 3):
                    minor = m[i1, j1] * m[i2, j2] - m[i1, j2] * m[i2, j1]
                    assert minor.is_zero


def test_rank_one_shape_errors():
    with pytest.raises(ShapeError):
        rank_one(Matrix([[1, 0]]), Matrix([[1], [0], [0]]))
    with pytest.raises(ShapeError):
        rank_one(Matrix([[1], [0]]), Matrix([[1], [0]]))


def test_matrix_poly_evaluates_with_identity_constant():
    assert matrix_poly([1, 1], J2) == Matrix.identity(2) + J2
    assert matrix_poly([0], J2) == Matrix.zero(2)


def test_transpose_and_hash():
    m = Matrix([[1, 2], [3, 4]])
    assert m.T == Matrix([[1, 3], [2, 4]])
    assert m.T.T == m
    assert hash(m) == hash(Matrix([[1, 2], [3, 4]]))
    assert {m: "here"}[Matrix([[1, 2], [3, 4]])] == "here"
