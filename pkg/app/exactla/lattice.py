from typing import Optional, Sequence, Tuple

import numpy as np

from app.core.errors import DimensionMismatchError
from app.dto.FgAbGroup import FgAbGroup
from app.exactla.int_matrix import IntMatrix, object_dot, object_zeros
from app.exactla.smith import diagonalize


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a basis of the saturated integer kernel of ``a`` (trailing columns of v)."""
    _, _, v, rank = diagonalize(a, track_u=False)
    return IntMatrix._wrap(v[:, rank:].copy())


def image_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the column lattice of ``a``: a · v restricted to the nonzero invariant factors."""
    _, _, v, rank = diagonalize(a, track_u=False)
    return IntMatrix._wrap(object_dot(a.array(), v[:, :rank]))


def solve_matrix(a: IntMatrix, b: IntMatrix) -> Optional[IntMatrix]:
    """Integer X with a · X = b, column by column, or None if some column has no solution."""
    if b.rows != a.rows:
        raise DimensionMismatchError(f"right-hand side has {b.rows} rows, matrix has {a.rows}")
    work, u, v, rank = diagonalize(a)
    ub = object_dot(u, b.array())
    if np.count_nonzero(ub[rank:, :]):
        return None
    y = object_zeros(rank, b.cols)
    for i in range(rank):
        d = work[i, i]
        if np.count_nonzero(ub[i, :] % d):
            return None
        y[i, :] = ub[i, :] // d
    return IntMatrix._wrap(object_dot(v[:, :rank], y))


def solve(a: IntMatrix, b: Sequence[int]) -> Optional[Tuple[int, ...]]:
    if len(b) != a.rows:
        raise DimensionMismatchError(f"right-hand side has length {len(b)}, matrix has {a.rows} rows")
    x = solve_matrix(a, IntMatrix.from_rows([[int(v)] for v in b], cols=1))
    return None if x is None else x.column(0)


def cokernel_invariants(a: IntMatrix) -> FgAbGroup:
    work, _, _, rank = diagonalize(a, track_u=False, track_v=False)
    return FgAbGroup(rank=a.rows - rank,
                     torsion=tuple(int(work[i, i]) for i in range(rank) if work[i, i] > 1))
