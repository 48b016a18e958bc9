from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Mapping, Optional, Sequence, Tuple

from app.core.errors import InvalidShapeError
from app.dto.Violation import Violation


@dataclass(frozen=True)
class FinPresimplicialSet:
    """
    Finite presimplicial set truncated at dimension D = len(cells) - 1.

    faces[n][i][k] is the index in cells[n - 1] of ∂_i applied to cells[n][k],
    for n >= 1 and 0 <= i <= n; faces[0] is empty.
    """
    cells: Tuple[Tuple[str, ...], ...]
    faces: Tuple[Tuple[Tuple[int, ...], ...], ...]
    name: str = field(default="", compare=False)

    kind = "presimplicial"

    @property
    def truncation(self) -> int:
        return len(self.cells) - 1

    @cached_property
    def _index(self) -> Tuple[Dict[str, int], ...]:
        return tuple({c: k for k, c in enumerate(level)} for level in self.cells)

    def index_of(self, n: int, cell: str) -> int:
        return self._index[n][cell]

    def count(self, n: int) -> int:
        return len(self.cells[n])

    def face(self, n: int, i: int) -> Tuple[int, ...]:
        return self.faces[n][i]

    def face_name(self, n: int, i: int, cell: str) -> str:
        return self.cells[n - 1][self.faces[n][i][self.index_of(n, cell)]]

    def dimension(self) -> int:
        """Highest dimension carrying cells."""
        return max((n for n, level in enumerate(self.cells) if level), default=0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * len(level) for n, level in enumerate(self.cells))

    @classmethod
    def from_tables(cls, cells: Sequence[Sequence[str]], faces: Mapping[str, Sequence[str]],
                    name: str = "") -> "FinPresimplicialSet":
        """
        Build from name tables: faces[cell] lists ∂_0 cell, ..., ∂_n cell by name.

        Raises InvalidShapeError carrying a Violation when a table is partial or
        points at a cell that does not exist one dimension down.
        """
        cells = tuple(tuple(level) for level in cells)
        index = [{c: k for k, c in enumerate(level)} for level in cells]
        all_faces = [()]
        for n in range(1, len(cells)):
            per_i = []
            for i in range(n + 1):
                row = []
                for cell in cells[n]:
                    listed = faces.get(cell)
                    if listed is None or len(listed) != n + 1:
                        raise InvalidShapeError(f"faces of {cell} missing or of wrong length", Violation(
                            kind="partial-map", degree=n, cell=cell, indices=[i],
                            detail=f"expected {n + 1} faces"))
                    target = listed[i]
                    if target not in index[n - 1]:
                        raise InvalidShapeError(f"∂_{i} {cell} = {target} is not a cell of dimension {n - 1}",
                                                Violation(kind="dangling", degree=n, cell=cell, indices=[i],
                                                          detail=f"∂_{i} {cell} = {target} not in dimension {n - 1}"))
                    row.append(index[n - 1][target])
                per_i.append(tuple(row))
            all_faces.append(tuple(per_i))
        return cls(cells=cells, faces=tuple(all_faces), name=name)


def validate_presimplicial(s: FinPresimplicialSet) -> Optional[Violation]:
    """Exhaustive check of ∂_i ∂_j = ∂_{j-1} ∂_i for i < j."""
    for n in range(2, s.truncation + 1):
        for k, cell in enumerate(s.cells[n]):
            for j in range(1, n + 1):
                for i in range(j):
                    lhs = s.faces[n - 1][i][s.faces[n][j][k]]
                    rhs = s.faces[n - 1][j - 1][s.faces[n][i][k]]
                    if lhs != rhs:
                        return Violation(kind="face-face", degree=n, cell=cell, indices=[i, j],
                                         detail=f"∂_{i}∂_{j} = {s.cells[n - 2][lhs]} but "
                                                f"∂_{j - 1}∂_{i} = {s.cells[n - 2][rhs]}")
    return None
