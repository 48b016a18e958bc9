from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Mapping, Optional, Sequence, Tuple

from app.core.errors import InvalidShapeError, MissingDegeneraciesError
from app.dto.Violation import Violation

# faces[n][i - 1][eps][k]: index in cells[n - 1] of ∂_i^eps cells[n][k]
FaceTable = Tuple[Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...], ...]
# degeneracies[n][j - 1][k]: index in cells[n] of s_j cells[n - 1][k]
DegeneracyTable = Tuple[Tuple[Tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class FinPseudocubicalSet:
    """
    Finite pseudocubical set truncated at D = len(cells) - 1.

    Faces ∂_i^eps exist for n >= 1, 1 <= i <= n, eps in {0, 1}. Degeneracies
    s_j : X_{n-1} -> X_n for 1 <= j <= n are optional; without them the object
    is only precubical.
    """
    cells: Tuple[Tuple[str, ...], ...]
    faces: FaceTable
    degeneracies: Optional[DegeneracyTable] = None
    name: str = field(default="", compare=False)

    kind = "pseudocubical"

    @property
    def truncation(self) -> int:
        return len(self.cells) - 1

    @property
    def has_degeneracies(self) -> bool:
        return self.degeneracies is not None

    @cached_property
    def _index(self) -> Tuple[Dict[str, int], ...]:
        return tuple({c: k for k, c in enumerate(level)} for level in self.cells)

    def index_of(self, n: int, cell: str) -> int:
        return self._index[n][cell]

    def count(self, n: int) -> int:
        return len(self.cells[n])

    def face(self, n: int, i: int, eps: int) -> Tuple[int, ...]:
        return self.faces[n][i - 1][eps]

    def degeneracy(self, n: int, j: int) -> Tuple[int, ...]:
        """s_j : X_{n-1} -> X_n as an index table."""
        if self.degeneracies is None:
            raise MissingDegeneraciesError(f"{self.name or 'shape'} carries no degeneracies")
        return self.degeneracies[n][j - 1]

    def face_name(self, n: int, i: int, eps: int, cell: str) -> str:
        return self.cells[n - 1][self.faces[n][i - 1][eps][self.index_of(n, cell)]]

    def dimension(self) -> int:
        return max((n for n, level in enumerate(self.cells) if level), default=0)

    def without_degeneracies(self) -> "FinPseudocubicalSet":
        return FinPseudocubicalSet(self.cells, self.faces, None, self.name)

    @classmethod
    def from_tables(cls, cells: Sequence[Sequence[str]], faces: Mapping[str, Sequence[Sequence[str]]],
                    degeneracies: Optional[Mapping[str, Sequence[str]]] = None,
                    name: str = "") -> "FinPseudocubicalSet":
        """
        faces[cell] = [[∂_1^0, ∂_1^1], [∂_2^0, ∂_2^1], ...] by name;
        degeneracies[cell] = [s_1 cell, ..., s_{n+1} cell] for cells below the top.
        """
        cells = tuple(tuple(level) for level in cells)
        index = [{c: k for k, c in enumerate(level)} for level in cells]

        def lookup(n, target, cell, indices, what):
            if target not in index[n]:
                raise InvalidShapeError(f"{what} {cell} = {target} is not a cell of dimension {n}", Violation(
                    kind="dangling", degree=n, cell=cell, indices=indices,
                    detail=f"{what} {cell} = {target} not in dimension {n}"))
            return index[n][target]

        all_faces = [()]
        for n in range(1, len(cells)):
            per_i = []
            for i in range(1, n + 1):
                pair = []
                for eps in (0, 1):
                    row = []
                    for cell in cells[n]:
                        listed = faces.get(cell)
                        if listed is None or len(listed) != n or any(len(p) != 2 for p in listed):
                            raise InvalidShapeError(f"faces of {cell} missing or malformed", Violation(
                                kind="partial-map", degree=n, cell=cell, indices=[i, eps],
                                detail=f"expected {n} face pairs"))
                        row.append(lookup(n - 1, listed[i - 1][eps], cell, [i, eps], f"∂_{i}^{eps}"))
                    pair.append(tuple(row))
                per_i.append(tuple(pair))
            all_faces.append(tuple(per_i))

        degens = None
        if degeneracies is not None:
            degens = [()]
            for n in range(1, len(cells)):
                per_j = []
                for j in range(1, n + 1):
                    row = []
                    for cell in cells[n - 1]:
                        listed = degeneracies.get(cell)
                        if listed is None or len(listed) != n:
                            raise InvalidShapeError(f"degeneracies of {cell} missing or of wrong length", Violation(
                                kind="partial-map", degree=n - 1, cell=cell, indices=[j],
                                detail=f"expected {n} degeneracies"))
                        row.append(lookup(n, listed[j - 1], cell, [j], f"s_{j}"))
                    per_j.append(tuple(row))
                degens.append(tuple(per_j))
            degens = tuple(degens)
        return cls(cells=cells, faces=tuple(all_faces), degeneracies=degens, name=name)


def validate_precubical(x: FinPseudocubicalSet) -> Optional[Violation]:
    """∂_i^a ∂_j^e = ∂_{j-1}^e ∂_i^a for i < j."""
    for n in range(2, x.truncation + 1):
        for k, cell in enumerate(x.cells[n]):
            for j in range(2, n + 1):
                for i in range(1, j):
                    for a in (0, 1):
                        for e in (0, 1):
                            lhs = x.faces[n - 1][i - 1][a][x.faces[n][j - 1][e][k]]
                            rhs = x.faces[n - 1][j - 2][e][x.faces[n][i - 1][a][k]]
                            if lhs != rhs:
                                return Violation(kind="face-face", degree=n, cell=cell, indices=[i, j, a, e],
                                                 detail=f"∂_{i}^{a}∂_{j}^{e} = {x.cells[n - 2][lhs]} but "
                                                        f"∂_{j - 1}^{e}∂_{i}^{a} = {x.cells[n - 2][rhs]}")
    return None


def _expected_face_of_degenerate(x: FinPseudocubicalSet, n: int, i: int, eps: int, j: int, k: int) -> int:
    # ∂_i^eps s_j y for y = cells[n - 1][k], landing in cells[n - 1]
    if i < j:
        return x.degeneracies[n - 1][j - 2][x.faces[n - 1][i - 1][eps][k]]
    if i == j:
        return k
    return x.degeneracies[n - 1][j - 1][x.faces[n - 1][i - 2][eps][k]]


def validate_pseudocubical(x: FinPseudocubicalSet) -> Optional[Violation]:
    """Face identities, then face/degeneracy identities when degeneracies are present."""
    violation = validate_precubical(x)
    if violation is not None or not x.has_degeneracies:
        return violation
    for n in range(1, x.truncation + 1):
        for j in range(1, n + 1):
            s_j = x.degeneracies[n][j - 1]
            for k, cell in enumerate(x.cells[n - 1]):
                for i in range(1, n + 1):
                    for eps in (0, 1):
                        actual = x.faces[n][i - 1][eps][s_j[k]]
                        if i == j:
                            expected = k
                        elif n == 1:
                            continue
                        else:
                            expected = _expected_face_of_degenerate(x, n, i, eps, j, k)
                        if actual != expected:
                            return Violation(kind="face-degeneracy", degree=n, cell=cell, indices=[i, eps, j],
                                             detail=f"∂_{i}^{eps} s_{j} {cell} = {x.cells[n - 1][actual]}, "
                                                    f"expected {x.cells[n - 1][expected]}")
    return None


###############################################################################
# DEGENERATE CLOSURE
###############################################################################
def degenerate_name(cell: str, constant: Tuple[int, ...]) -> str:
    if not constant:
        return cell
    return f"s[{','.join(str(c) for c in constant)}]({cell})"


def cubical_closure(nondegenerate: Sequence[Sequence[str]], faces: Mapping[str, Sequence[Sequence[str]]],
                    truncation: int, name: str = "") -> FinPseudocubicalSet:
    """
    Freely add degeneracies to a precubical set given by its nondegenerate cells.

    An n-cell of the result is a pair (y, S): y a nondegenerate k-cell and S a
    set of n - k constant coordinates in {1..n}. Faces of nondegenerate cells
    must be nondegenerate.
    """
    top_nondeg = len(nondegenerate) - 1
    dim_of = {}
    for k, level in enumerate(nondegenerate):
        for y in level:
            dim_of[y] = k
    for k, level in enumerate(nondegenerate[1:], start=1):
        for y in level:
            listed = faces.get(y)
            if listed is None or len(listed) != k or any(len(pair) != 2 for pair in listed):
                raise InvalidShapeError(f"faces of {y} missing or malformed", Violation(
                    kind="partial-map", degree=k, cell=y, detail=f"expected {k} face pairs"))
    for y, listed in faces.items():
        for pair in listed:
            for target in pair:
                if target not in dim_of or dim_of[target] != dim_of.get(y, -1) - 1:
                    raise InvalidShapeError(f"face {target} of {y} is not a nondegenerate cell one dimension down",
                                            Violation(kind="dangling", degree=dim_of.get(y), cell=y,
                                                      detail=f"face {target}"))

    cells = []
    keys = []
    for n in range(truncation + 1):
        level_keys = []
        for k in range(min(n, top_nondeg), -1, -1):
            for y in nondegenerate[k]:
                for constant in combinations(range(1, n + 1), n - k):
                    level_keys.append((y, constant))
        keys.append(level_keys)
        cells.append(tuple(degenerate_name(y, s) for y, s in level_keys))
    index = [{key: idx for idx, key in enumerate(level)} for level in keys]

    def face_key(y, constant, i, eps):
        lowered = tuple(c if c < i else c - 1 for c in constant if c != i)
        if i in constant:
            return y, lowered
        r = i - sum(1 for c in constant if c < i)
        return faces[y][r - 1][eps], lowered

    def degeneracy_key(y, constant, j):
        return y, tuple(sorted([c if c < j else c + 1 for c in constant] + [j]))

    all_faces = [()]
    degens = [()]
    for n in range(1, truncation + 1):
        all_faces.append(tuple(
            tuple(tuple(index[n - 1][face_key(y, s, i, eps)] for y, s in keys[n]) for eps in (0, 1))
            for i in range(1, n + 1)))
        degens.append(tuple(
            tuple(index[n][degeneracy_key(y, s, j)] for y, s in keys[n - 1])
            for j in range(1, n + 1)))
    return FinPseudocubicalSet(cells=tuple(cells), faces=tuple(all_faces), degeneracies=tuple(degens), name=name)


def nondegenerate_count(x: FinPseudocubicalSet, n: int) -> int:
    """Cells of X_n not in the image of any degeneracy."""
    if not x.has_degeneracies or n == 0:
        return x.count(n)
    hit = set()
    for table in x.degeneracies[n]:
        hit.update(table)
    return x.count(n) - len(hit)
