from app.exactla.int_matrix import IntMatrix
from app.exactla.lattice import (cokernel_invariants, image_basis, kernel_basis, solve,
                                 solve_matrix)
from app.exactla.smith import SmithDecomposition, determinant, snf

__all__ = [
    "IntMatrix", "SmithDecomposition", "snf", "determinant",
    "kernel_basis", "image_basis", "solve", "solve_matrix", "cokernel_invariants",
]
