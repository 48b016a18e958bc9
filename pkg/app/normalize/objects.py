from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple, Union

from app.chains.groups import PresentedGroup
from app.core.errors import DimensionMismatchError, MissingDegeneraciesError
from app.dto.Violation import Violation
from app.exactla import IntMatrix
from app.shapes.augmented import AugmentedShape
from app.shapes.presimplicial import FinPresimplicialSet
from app.shapes.pseudocubical import FinPseudocubicalSet


def table_matrix(table: Sequence[int], rows: int) -> IntMatrix:
    """Matrix of the map of free groups induced by a cell table: column k is e_{table[k]}."""
    m = IntMatrix.zeros(rows, len(table)).array()
    for k, target in enumerate(table):
        m[target, k] = 1
    return IntMatrix._wrap(m)


def _check_map(m: IntMatrix, source: PresentedGroup, target: PresentedGroup, what: str) -> None:
    if m.shape != (target.generators, source.generators):
        raise DimensionMismatchError(f"{what} has shape {m.shape}, expected "
                                     f"{(target.generators, source.generators)}")


@dataclass(frozen=True)
class PresimplicialObject:
    """
    Presimplicial object in finitely presented abelian groups.

    faces[n][i] : levels[n] -> levels[n-1] for 0 <= i <= n; faces[0] is empty.
    """
    levels: Tuple[PresentedGroup, ...]
    faces: Tuple[Tuple[IntMatrix, ...], ...]
    target: Optional[PresentedGroup] = None
    augmentation: Optional[IntMatrix] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for n in range(1, len(self.levels)):
            if len(self.faces[n]) != n + 1:
                raise DimensionMismatchError(f"level {n} needs {n + 1} faces, got {len(self.faces[n])}")
            for i, d in enumerate(self.faces[n]):
                _check_map(d, self.levels[n], self.levels[n - 1], f"∂_{i} on level {n}")
        if self.augmentation is not None:
            _check_map(self.augmentation, self.levels[0], self.target, "augmentation")

    @property
    def truncation(self) -> int:
        return len(self.levels) - 1

    @property
    def is_augmented(self) -> bool:
        return self.augmentation is not None

    def face(self, n: int, i: int) -> IntMatrix:
        return self.faces[n][i]

    @classmethod
    def from_shape(cls, shape: Union[FinPresimplicialSet, AugmentedShape]) -> "PresimplicialObject":
        """ℤ[-] applied cellwise."""
        augmented = shape if isinstance(shape, AugmentedShape) else None
        s = augmented.shape if augmented else shape
        levels = tuple(PresentedGroup.free(s.count(n)) for n in range(s.truncation + 1))
        faces = [()] + [tuple(table_matrix(s.face(n, i), s.count(n - 1)) for i in range(n + 1))
                        for n in range(1, s.truncation + 1)]
        target = aug = None
        if augmented is not None:
            target = PresentedGroup.free(len(augmented.target))
            aug = table_matrix(augmented.augmentation, len(augmented.target))
        return cls(levels, tuple(faces), target, aug, name=s.name)

    def map_levels(self, on_group, on_map) -> "PresimplicialObject":
        """Apply an additive functor given by its action on groups and on maps."""
        levels = tuple(on_group(g) for g in self.levels)
        faces = [()] + [tuple(on_map(d, self.levels[n], self.levels[n - 1]) for d in self.faces[n])
                        for n in range(1, len(self.levels))]
        target = aug = None
        if self.augmentation is not None:
            target = on_group(self.target)
            aug = on_map(self.augmentation, self.levels[0], self.target)
        return PresimplicialObject(levels, tuple(faces), target, aug, name=self.name)

    def check(self) -> Optional[Violation]:
        """∂_i ∂_j = ∂_{j-1} ∂_i (i < j) modulo relations; the augmentation equalises ∂_0 and ∂_1."""
        for n in range(2, self.truncation + 1):
            for j in range(1, n + 1):
                for i in range(j):
                    diff = self.faces[n - 1][i] @ self.faces[n][j] - self.faces[n - 1][j - 1] @ self.faces[n][i]
                    if not self.levels[n - 2].contains(diff):
                        return Violation(kind="face-face", degree=n, indices=[i, j],
                                         detail=f"∂_{i}∂_{j} ≠ ∂_{j - 1}∂_{i}")
        if self.augmentation is not None and self.truncation >= 1:
            diff = self.augmentation @ (self.faces[1][0] - self.faces[1][1])
            if not self.target.contains(diff):
                return Violation(kind="augmentation", degree=1, detail="ε∂_0 ≠ ε∂_1")
        return None


@dataclass(frozen=True)
class PseudocubicalObject:
    """
    Pseudocubical object in finitely presented abelian groups.

    faces[n][i - 1][eps] : levels[n] -> levels[n-1] for 1 <= i <= n;
    degeneracies[n][j - 1] : levels[n-1] -> levels[n] for 1 <= j <= n, or None.
    """
    levels: Tuple[PresentedGroup, ...]
    faces: Tuple[Tuple[Tuple[IntMatrix, IntMatrix], ...], ...]
    degeneracies: Optional[Tuple[Tuple[IntMatrix, ...], ...]] = None
    target: Optional[PresentedGroup] = None
    augmentation: Optional[IntMatrix] = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for n in range(1, len(self.levels)):
            if len(self.faces[n]) != n:
                raise DimensionMismatchError(f"level {n} needs {n} face pairs, got {len(self.faces[n])}")
            for i, pair in enumerate(self.faces[n], start=1):
                for eps, d in enumerate(pair):
                    _check_map(d, self.levels[n], self.levels[n - 1], f"∂_{i}^{eps} on level {n}")
            if self.degeneracies is not None:
                for j, s in enumerate(self.degeneracies[n], start=1):
                    _check_map(s, self.levels[n - 1], self.levels[n], f"s_{j} into level {n}")
        if self.augmentation is not None:
            _check_map(self.augmentation, self.levels[0], self.target, "augmentation")

    @property
    def truncation(self) -> int:
        return len(self.levels) - 1

    @property
    def has_degeneracies(self) -> bool:
        return self.degeneracies is not None

    @property
    def is_augmented(self) -> bool:
        return self.augmentation is not None

    def face(self, n: int, i: int, eps: int) -> IntMatrix:
        return self.faces[n][i - 1][eps]

    def degeneracy(self, n: int, j: int) -> IntMatrix:
        if self.degeneracies is None:
            raise MissingDegeneraciesError(f"{self.name or 'object'} carries no degeneracies")
        return self.degeneracies[n][j - 1]

    @classmethod
    def from_shape(cls, shape: Union[FinPseudocubicalSet, AugmentedShape]) -> "PseudocubicalObject":
        augmented = shape if isinstance(shape, AugmentedShape) else None
        x = augmented.shape if augmented else shape
        levels = tuple(PresentedGroup.free(x.count(n)) for n in range(x.truncation + 1))
        faces = [()] + [tuple((table_matrix(x.face(n, i, 0), x.count(n - 1)),
                               table_matrix(x.face(n, i, 1), x.count(n - 1))) for i in range(1, n + 1))
                        for n in range(1, x.truncation + 1)]
        degens = None
        if x.has_degeneracies:
            degens = tuple([()] + [tuple(table_matrix(x.degeneracy(n, j), x.count(n)) for j in range(1, n + 1))
                                   for n in range(1, x.truncation + 1)])
        target = aug = None
        if augmented is not None:
            target = PresentedGroup.free(len(augmented.target))
            aug = table_matrix(augmented.augmentation, len(augmented.target))
        return cls(levels, tuple(faces), degens, target, aug, name=x.name)

    def map_levels(self, on_group, on_map) -> "PseudocubicalObject":
        levels = tuple(on_group(g) for g in self.levels)
        faces = [()] + [tuple((on_map(a, self.levels[n], self.levels[n - 1]),
                               on_map(b, self.levels[n], self.levels[n - 1])) for a, b in self.faces[n])
                        for n in range(1, len(self.levels))]
        degens = None
        if self.degeneracies is not None:
            degens = tuple([()] + [tuple(on_map(s, self.levels[n - 1], self.levels[n]) for s in self.degeneracies[n])
                                   for n in range(1, len(self.levels))])
        target = aug = None
        if self.augmentation is not None:
            target = on_group(self.target)
            aug = on_map(self.augmentation, self.levels[0], self.target)
        return PseudocubicalObject(levels, tuple(faces), degens, target, aug, name=self.name)

    def without_degeneracies(self) -> "PseudocubicalObject":
        return PseudocubicalObject(self.levels, self.faces, None, self.target, self.augmentation, self.name)

    def check(self) -> Optional[Violation]:
        """Cubical face identities, face/degeneracy identities and the augmentation, modulo relations."""
        for n in range(2, self.truncation + 1):
            for j in range(2, n + 1):
                for i in range(1, j):
                    for a in (0, 1):
                        for e in (0, 1):
                            diff = (self.face(n - 1, i, a) @ self.face(n, j, e)
                                    - self.face(n - 1, j - 1, e) @ self.face(n, i, a))
                            if not self.levels[n - 2].contains(diff):
                                return Violation(kind="face-face", degree=n, indices=[i, j, a, e],
                                                 detail=f"∂_{i}^{a}∂_{j}^{e} ≠ ∂_{j - 1}^{e}∂_{i}^{a}")
        if self.degeneracies is not None:
            for n in range(1, self.truncation + 1):
                for j in range(1, n + 1):
                    s = self.degeneracy(n, j)
                    for i in range(1, n + 1):
                        for eps in (0, 1):
                            lhs = self.face(n, i, eps) @ s
                            if i == j:
                                rhs = IntMatrix.identity(self.levels[n - 1].generators)
                            elif i < j:
                                rhs = self.degeneracy(n - 1, j - 1) @ self.face(n - 1, i, eps)
                            else:
                                rhs = self.degeneracy(n - 1, j) @ self.face(n - 1, i - 1, eps)
                            if not self.levels[n - 1].contains(lhs - rhs):
                                return Violation(kind="face-degeneracy", degree=n, indices=[i, eps, j],
                                                 detail=f"∂_{i}^{eps} s_{j} breaks the cubical identity")
        if self.augmentation is not None and self.truncation >= 1:
            diff = self.augmentation @ (self.face(1, 1, 0) - self.face(1, 1, 1))
            if not self.target.contains(diff):
                return Violation(kind="augmentation", degree=1, detail="ε∂_1^0 ≠ ε∂_1^1")
        return None
