from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from app.core.errors import DimensionMismatchError
from app.exactla.int_matrix import IntMatrix, object_identity


@dataclass(frozen=True)
class SmithDecomposition:
    """u · a · v = d with u, v unimodular and d_1 | d_2 | ... on the diagonal of d."""
    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def verify(self, a: IntMatrix) -> bool:
        if self.u @ a @ self.v != self.d:
            return False
        if abs(determinant(self.u)) != 1 or abs(determinant(self.v)) != 1:
            return False
        k = self.rank
        for i in range(self.d.rows):
            for j in range(self.d.cols):
                expected = self.invariant_factors[i] if i == j and i < k else 0
                if self.d[i, j] != expected:
                    return False
        factors = self.invariant_factors
        return all(f > 0 for f in factors) and all(factors[i + 1] % factors[i] == 0
                                                   for i in range(len(factors) - 1))


###############################################################################
# DIAGONALIZATION
###############################################################################
def _pick_pivot(work: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    # smallest nonzero |entry| of the trailing block; nonzero() is row-major,
    # argmin returns the first hit, so ties go to the lowest (row, col)
    sub = work[t:, t:]
    rows_nz, cols_nz = np.nonzero(sub)
    if len(rows_nz) == 0:
        return None
    k = int(np.argmin(np.abs(sub[rows_nz, cols_nz])))
    return t + int(rows_nz[k]), t + int(cols_nz[k])


def _swap(work: np.ndarray, u: Optional[np.ndarray], v: Optional[np.ndarray],
          t: int, i: int, j: int) -> None:
    if i != t:
        work[[t, i], :] = work[[i, t], :]
        if u is not None:
            u[[t, i], :] = u[[i, t], :]
    if j != t:
        work[:, [t, j]] = work[:, [j, t]]
        if v is not None:
            v[:, [t, j]] = v[:, [j, t]]


def _clear_column(work: np.ndarray, u: Optional[np.ndarray], t: int) -> None:
    q = work[t + 1:, t] // work[t, t]
    hit = np.nonzero(q)[0]
    if len(hit) == 0:
        return
    rows = hit + t + 1
    work[rows, :] -= np.outer(q[hit], work[t, :])
    if u is not None:
        u[rows, :] -= np.outer(q[hit], u[t, :])


def _clear_row(work: np.ndarray, v: Optional[np.ndarray], t: int) -> None:
    q = work[t, t + 1:] // work[t, t]
    hit = np.nonzero(q)[0]
    if len(hit) == 0:
        return
    cols = hit + t + 1
    work[:, cols] -= np.outer(work[:, t], q[hit])
    if v is not None:
        v[:, cols] -= np.outer(v[:, t], q[hit])


def diagonalize(a: IntMatrix, track_u: bool = True, track_v: bool = True):
    """
    Run the Smith reduction on a copy of ``a``.

    Returns (work, u, v, rank) as object arrays; u / v are None when not tracked.
    Row operations are accumulated in u, column operations in v, so that
    u · a · v = work at every step.
    """
    work = a.array()
    r, c = work.shape
    u = object_identity(r) if track_u else None
    v = object_identity(c) if track_v else None
    t = 0
    while t < min(r, c):
        pivot = _pick_pivot(work, t)
        if pivot is None:
            break
        while True:
            _swap(work, u, v, t, pivot[0], pivot[1])
            _clear_column(work, u, t)
            _clear_row(work, v, t)
            if np.count_nonzero(work[t + 1:, t]) or np.count_nonzero(work[t, t + 1:]):
                pivot = _pick_pivot(work, t)
                continue
            p = work[t, t]
            if abs(p) != 1:
                bad_rows, _ = np.nonzero(work[t + 1:, t + 1:] % p)
                if len(bad_rows):
                    src = t + 1 + int(bad_rows[0])
                    work[t, :] += work[src, :]
                    if u is not None:
                        u[t, :] += u[src, :]
                    pivot = _pick_pivot(work, t)
                    continue
            break
        if work[t, t] < 0:
            work[t, :] = -work[t, :]
            if u is not None:
                u[t, :] = -u[t, :]
        t += 1
    return work, u, v, t


def snf(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with smallest-|entry| pivoting; deterministic for a fixed input."""
    work, u, v, rank = diagonalize(a)
    factors = tuple(int(work[i, i]) for i in range(rank))
    return SmithDecomposition(u=IntMatrix._wrap(u), d=IntMatrix._wrap(work),
                              v=IntMatrix._wrap(v), invariant_factors=factors)


def determinant(a: IntMatrix) -> int:
    # fraction-free Bareiss elimination
    if not a.is_square():
        raise DimensionMismatchError(f"determinant of a non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]

