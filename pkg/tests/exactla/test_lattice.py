from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix, cokernel_invariants, image_basis, kernel_basis, snf, solve, solve_matrix
from tests.strategies import int_matrices


@given(int_matrices())
def test_kernel_basis_is_killed_and_has_full_size(a):
    k = kernel_basis(a)
    assert k.rows == a.cols
    assert k.cols == a.cols - snf(a).rank
    assert (a @ k).is_zero()


def test_kernel_basis_is_saturated():
    k = kernel_basis(IntMatrix.from_rows([[2, 4]]))
    assert k.shape == (2, 1)
    x, y = k.column(0)
    assert (x, y) in ((2, -1), (-2, 1))
    assert gcd(x, y) == 1


@given(int_matrices())
def test_image_basis_spans_the_column_lattice(a):
    basis = image_basis(a)
    assert basis.cols == snf(a).rank
    assert solve_matrix(basis, a) is not None
    assert solve_matrix(a, basis) is not None


@given(int_matrices(min_dim=1), st.data())
def test_solve_matrix_recovers_a_solution(a, data):
    cols = data.draw(st.integers(1, 3))
    entries = data.draw(st.lists(st.integers(-5, 5), min_size=a.cols * cols, max_size=a.cols * cols))
    b = a @ IntMatrix.from_entries(a.cols, cols, entries)
    x = solve_matrix(a, b)
    assert x is not None
    assert a @ x == b


def test_solve_reports_no_solution():
    assert solve_matrix(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[1]])) is None
    assert solve(IntMatrix.from_rows([[2, 0], [0, 3]]), [4, 3]) == (2, 1)
    assert solve(IntMatrix.from_rows([[0], [1]]), [1, 0]) is None


def test_cokernel_invariants_examples():
    assert cokernel_invariants(IntMatrix.diagonal([2, 3])) == FgAbGroup.cyclic(6)
    assert cokernel_invariants(IntMatrix.from_rows([[2], [0]])) == FgAbGroup(rank=1, torsion=(2,))
    assert cokernel_invariants(IntMatrix.zeros(3, 0)) == FgAbGroup.free(3)
    assert cokernel_invariants(IntMatrix.identity(2)).is_trivial()
