from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app.core.errors import DimensionMismatchError


###############################################################################
# OBJECT ARRAY HELPERS
###############################################################################
def object_zeros(rows: int, cols: int) -> np.ndarray:
    # dtype=object keeps Python ints, so nothing ever overflows
    return np.zeros((rows, cols), dtype=object)


def object_identity(n: int) -> np.ndarray:
    arr = object_zeros(n, n)
    for i in range(n):
        arr[i, i] = 1
    return arr


def object_dot(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.shape[1] != y.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {x.shape} by {y.shape}")
    if x.shape[1] == 0 or x.shape[0] == 0 or y.shape[1] == 0:
        return object_zeros(x.shape[0], y.shape[1])
    return x.dot(y)


###############################################################################
# INTEGER MATRIX
###############################################################################
class IntMatrix:
    """
    Dense immutable matrix of arbitrary-precision integers.

    Shapes with zero rows or zero columns are legal; they are the maps to and
    from the zero group.
    """
    __slots__ = ("_a",)

    def __init__(self, array: np.ndarray):
        if array.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-d array, got {array.ndim} dims")
        owned = object_zeros(*array.shape)
        for index, value in np.ndenumerate(array):
            owned[index] = int(value)
        owned.flags.writeable = False
        self._a = owned

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "IntMatrix":
        # trusted path: array is object dtype, 2-d and owned by the caller
        obj = cls.__new__(cls)
        array.flags.writeable = False
        obj._a = array
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls._wrap(object_zeros(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls._wrap(object_identity(n))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else (cols or 0)
        if cols is not None and n_rows and n_cols != cols:
            raise DimensionMismatchError(f"rows have {n_cols} entries, expected {cols}")
        arr = object_zeros(n_rows, n_cols)
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatchError(f"row {i} has {len(row)} entries, expected {n_cols}")
            for j, value in enumerate(row):
                arr[i, j] = int(value)
        return cls._wrap(arr)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence[int]) -> "IntMatrix":
        if len(entries) != rows * cols:
            raise DimensionMismatchError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        arr = object_zeros(rows, cols)
        for k, value in enumerate(entries):
            arr[k // cols, k % cols] = int(value)
        return cls._wrap(arr)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls.from_rows(columns, cols=rows).T if columns else cls.zeros(rows, 0)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: Optional[int] = None,
                 cols: Optional[int] = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        arr = object_zeros(rows, cols)
        for i, value in enumerate(values):
            arr[i, i] = int(value)
        return cls._wrap(arr)

    @classmethod
    def column_vector(cls, values: Sequence[int]) -> "IntMatrix":
        return cls.from_rows([[int(v)] for v in values], cols=1)

    @classmethod
    def hstack(cls, blocks: Sequence["IntMatrix"], rows: Optional[int] = None) -> "IntMatrix":
        if not blocks:
            return cls.zeros(rows or 0, 0)
        height = blocks[0].rows
        for b in blocks:
            if b.rows != height:
                raise DimensionMismatchError(f"hstack of {b.rows}-row block onto {height} rows")
        return cls._wrap(np.hstack([b._a for b in blocks]).astype(object))

    @classmethod
    def vstack(cls, blocks: Sequence["IntMatrix"], cols: Optional[int] = None) -> "IntMatrix":
        if not blocks:
            return cls.zeros(0, cols or 0)
        width = blocks[0].cols
        for b in blocks:
            if b.cols != width:
                raise DimensionMismatchError(f"vstack of {b.cols}-column block onto {width} columns")
        return cls._wrap(np.vstack([b._a for b in blocks]).astype(object))

    @classmethod
    def block_diagonal(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        arr = object_zeros(sum(b.rows for b in blocks), sum(b.cols for b in blocks))
        r = c = 0
        for b in blocks:
            arr[r:r + b.rows, c:c + b.cols] = b._a
            r += b.rows
            c += b.cols
        return cls._wrap(arr)

    # -- accessors ----------------------------------------------------------
    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._a.shape

    @property
    def entries(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._a.flat)

    def array(self) -> np.ndarray:
        """Writable copy of the underlying object array."""
        return self._a.copy()

    def to_lists(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self._a]

    def row(self, i: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._a[i, :])

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._a[:, j])

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return int(self._a[key])

    def select_rows(self, start: int, stop: int) -> "IntMatrix":
        return IntMatrix._wrap(self._a[start:stop, :].copy())

    def select_columns(self, indices: Iterable[int]) -> "IntMatrix":
        idx = list(indices)
        if not idx:
            return IntMatrix.zeros(self.rows, 0)
        return IntMatrix._wrap(self._a[:, idx].copy())

    def row_blocks(self, height: int) -> List["IntMatrix"]:
        if height <= 0 or self.rows % height:
            raise DimensionMismatchError(f"{self.rows} rows do not split into blocks of {height}")
        return [self.select_rows(k, k + height) for k in range(0, self.rows, height)]

    # -- algebra ------------------------------------------------------------
    @property
    def T(self) -> "IntMatrix":
        return IntMatrix._wrap(self._a.T.copy())

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix._wrap(object_dot(self._a, other._a))

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} for {self.cols} columns")
        return (self @ IntMatrix.column_vector(vector)).column(0) if self.rows else ()

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix._wrap(self._a + other._a)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix._wrap(self._a - other._a)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix._wrap(-self._a)

    def __mul__(self, scalar: int) -> "IntMatrix":
        return IntMatrix._wrap(self._a * int(scalar))

    __rmul__ = __mul__

    def kron(self, other: "IntMatrix") -> "IntMatrix":
        p, q = other.shape
        arr = object_zeros(self.rows * p, self.cols * q)
        for i in range(self.rows):
            for j in range(self.cols):
                value = self._a[i, j]
                if value:
                    arr[i * p:(i + 1) * p, j * q:(j + 1) * q] = other._a * value
        return IntMatrix._wrap(arr)

    def is_zero(self) -> bool:
        return not any(self._a.flat)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square() and self == IntMatrix.identity(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_lists()})"
