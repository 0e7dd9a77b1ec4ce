import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kchalex.algebra import (Matrix, NotSquare, RatFunc, UniPoly, det_cofactor, matrix_det,
                             matrix_kernel, matrix_rank)
from kchalex.augment import BRANCH_M, linearized_matrix, solve_augmentation_family
from kchalex.parser import parse_unipoly

P = parse_unipoly


def test_det_examples():
    assert matrix_det(Matrix([[P("1 - 3*mu")]])) == P("1 - 3*mu")
    assert matrix_det(Matrix([[P("1 - mu"), P("-mu")], [P("1"), P("2")]])) == P("2 - mu")
    burau = Matrix([[RatFunc(P("-mu")) ** 3]])
    assert matrix_det(Matrix.identity(1, like=RatFunc(P("1"))) - burau) == RatFunc(P("1 + mu^3"))


def test_det_non_square():
    with pytest.raises(NotSquare):
        matrix_det(Matrix([[1, 2]]))


def test_empty_det_is_one():
    assert matrix_det(Matrix([], 0)) == 1


@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_det_matches_cofactor(n, rnd):
    m = Matrix([[Fraction(rnd.randint(-5, 5)) for _ in range(n)] for _ in range(n)])
    assert matrix_det(m) == det_cofactor(m)


@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_polynomial_det_matches_cofactor(n, rnd):
    m = Matrix([[UniPoly([rnd.randint(-3, 3) for _ in range(3)]) for _ in range(n)] for _ in range(n)])
    assert matrix_det(m) == det_cofactor(m)


def test_kernel_examples():
    zero = Matrix([[0, 0, 0], [0, 0, 0]])
    assert matrix_kernel(zero) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert matrix_kernel(Matrix([[1, 1]])) == [[-1, 1]]


def test_trefoil_kernel_is_four_dimensional(trefoil):
    fam = solve_augmentation_family(trefoil, BRANCH_M)[0]
    m = linearized_matrix(trefoil, fam, 1)
    ker = matrix_kernel(m)
    assert len(ker) == 4
    for v in ker:
        assert all(x.is_zero() for x in m.apply(v))


@given(st.integers(1, 4), st.integers(1, 5), st.randoms(use_true_random=False))
def test_kernel_dimension_and_vectors(r, c, rnd):
    m = Matrix([[Fraction(rnd.randint(-2, 2)) for _ in range(c)] for _ in range(r)])
    ker = matrix_kernel(m)
    assert len(ker) == c - matrix_rank(m)
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


def test_kernel_is_deterministic():
    rnd = random.Random(3)
    m = Matrix([[Fraction(rnd.randint(-2, 2)) for _ in range(5)] for _ in range(3)])
    assert matrix_kernel(m) == matrix_kernel(m)
