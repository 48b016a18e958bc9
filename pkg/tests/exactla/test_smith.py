import pytest
from hypothesis import given
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from app.core.errors import DimensionMismatchError
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix, determinant, snf
from tests.strategies import int_matrices, square_matrices


def _sympy_factors(a: IntMatrix):
    d = smith_normal_form(Matrix(a.to_lists()), domain=ZZ)
    return [abs(int(d[i, i])) for i in range(min(a.shape)) if d[i, i] != 0]


def test_smith_examples():
    assert snf(IntMatrix.diagonal([2, 3])).invariant_factors == (1, 6)
    assert snf(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])).invariant_factors == (2, 6, 12)
    m = IntMatrix.from_rows([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
    assert snf(m).invariant_factors == (1, 10, 30)


def test_smith_of_zero_and_empty_matrices():
    for a in (IntMatrix.zeros(2, 3), IntMatrix.zeros(0, 3), IntMatrix.zeros(4, 0), IntMatrix.zeros(0, 0)):
        decomposition = snf(a)
        assert decomposition.invariant_factors == ()
        assert decomposition.verify(a)


def test_smith_handles_large_entries():
    big = 10 ** 30
    a = IntMatrix.from_rows([[big, 0], [0, big * 6]])
    decomposition = snf(a)
    assert decomposition.invariant_factors == (big, 6 * big)
    assert decomposition.verify(a)


@given(int_matrices())
def test_decomposition_is_unimodular_and_diagonal(a):
    decomposition = snf(a)
    assert decomposition.verify(a)
    assert decomposition.u.shape == (a.rows, a.rows)
    assert decomposition.v.shape == (a.cols, a.cols)


@given(int_matrices(min_dim=1))
def test_invariant_factors_match_sympy(a):
    ours = snf(a).invariant_factors
    theirs = _sympy_factors(a)
    assert len(ours) == len(theirs)
    assert FgAbGroup.from_cyclic(0, ours) == FgAbGroup.from_cyclic(0, theirs)


@given(int_matrices())
def test_smith_is_deterministic(a):
    assert snf(a) == snf(a)


@given(square_matrices())
def test_determinant_matches_sympy(a):
    assert determinant(a) == int(Matrix(a.to_lists()).det())


def test_determinant_rejects_rectangular_input():
    with pytest.raises(DimensionMismatchError):
        determinant(IntMatrix.zeros(2, 3))
    assert determinant(IntMatrix.zeros(0, 0)) == 1
