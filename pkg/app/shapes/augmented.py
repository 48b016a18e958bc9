import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, Union

from app.core.errors import DegreeOutOfRangeError, InvalidShapeError
from app.dto.Violation import Violation
from app.shapes.presimplicial import FinPresimplicialSet, validate_presimplicial
from app.shapes.pseudocubical import FinPseudocubicalSet, validate_pseudocubical

Shape = Union[FinPresimplicialSet, FinPseudocubicalSet]


@dataclass(frozen=True)
class AugmentedShape:
    """A shape together with an augmentation cells[0] -> target (indices into target)."""
    shape: Shape
    target: Tuple[str, ...]
    augmentation: Tuple[int, ...]

    def __post_init__(self):
        if len(self.augmentation) != self.shape.count(0):
            raise InvalidShapeError(
                f"augmentation has {len(self.augmentation)} entries for {self.shape.count(0)} vertices",
                Violation(kind="augmentation", degree=0, detail="augmentation is not total"))
        for k, t in enumerate(self.augmentation):
            if not 0 <= t < len(self.target):
                raise InvalidShapeError(f"augmentation of {self.shape.cells[0][k]} points outside the target",
                                        Violation(kind="dangling", degree=0, cell=self.shape.cells[0][k],
                                                  detail="augmentation target missing"))

    @property
    def kind(self) -> str:
        return self.shape.kind

    def is_surjective(self) -> bool:
        return set(self.augmentation) == set(range(len(self.target)))

    @classmethod
    def to_point(cls, shape: Shape, point: str = "*") -> "AugmentedShape":
        return cls(shape, (point,), tuple(0 for _ in range(shape.count(0))))


def validate_augmented(a: AugmentedShape) -> Optional[Violation]:
    shape = a.shape
    if isinstance(shape, FinPresimplicialSet):
        violation = validate_presimplicial(shape)
        pairs = [(shape.face(1, 0), shape.face(1, 1))] if shape.truncation >= 1 else []
        names = ("∂_0", "∂_1")
    else:
        violation = validate_pseudocubical(shape)
        pairs = [(shape.face(1, 1, 0), shape.face(1, 1, 1))] if shape.truncation >= 1 else []
        names = ("∂_1^0", "∂_1^1")
    if violation is not None:
        return violation
    for left, right in pairs:
        for k, cell in enumerate(shape.cells[1]):
            if a.augmentation[left[k]] != a.augmentation[right[k]]:
                return Violation(kind="augmentation", degree=1, cell=cell,
                                 detail=f"ε{names[0]} = {a.target[a.augmentation[left[k]]]} but "
                                        f"ε{names[1]} = {a.target[a.augmentation[right[k]]]}")
    return None


###############################################################################
# FILLER CONDITIONS
###############################################################################
def _check_through(shape: Shape, through: int) -> None:
    if through < 0:
        raise DegreeOutOfRangeError(f"through must be non-negative, got {through}")
    if through > shape.truncation:
        raise DegreeOutOfRangeError(f"through={through} exceeds the truncation {shape.truncation}")


def _simplicial_tuples(n: int, count: int, face: Callable[[int, int], int]) -> Iterator[Tuple[int, ...]]:
    """Tuples (x_0..x_{n+1}) of n-cells with ∂_i x_j = ∂_{j-1} x_i for i < j."""
    by_first_face = defaultdict(list)
    for x in range(count):
        by_first_face[face(0, x)].append(x)
    chosen: List[int] = []

    def extend(j: int) -> Iterator[Tuple[int, ...]]:
        if j == n + 2:
            yield tuple(chosen)
            return
        candidates = range(count) if j == 0 else by_first_face.get(face(j - 1, chosen[0]), ())
        for x in candidates:
            if all(face(i, x) == face(j - 1, chosen[i]) for i in range(1, j)):
                chosen.append(x)
                yield from extend(j + 1)
                chosen.pop()

    yield from extend(0)


def check_simplicial_extension(a: AugmentedShape, through: int) -> bool:
    """
    Every compatible tuple of n-cells is the face tuple of some (n+1)-cell, for
    n + 1 <= through. In degree 0 the compatible pairs are the vertex pairs in
    one fiber of the augmentation.
    """
    shape = a.shape
    if not isinstance(shape, FinPresimplicialSet):
        raise InvalidShapeError("simplicial extension needs a presimplicial shape")
    _check_through(shape, through)
    if not a.is_surjective():
        logging.info(f"[Shapes] augmentation of {shape.name or 'shape'} is not surjective")
        return False
    for n in range(through):
        if n == 0:
            def face(i, x):
                return a.augmentation[x]
        else:
            def face(i, x, n=n):
                return shape.faces[n][i][x]
        upper = shape.faces[n + 1]
        fillers = {tuple(upper[i][y] for i in range(n + 2)) for y in range(shape.count(n + 1))}
        for candidate in _simplicial_tuples(n, shape.count(n), face):
            if candidate not in fillers:
                logging.info(f"[Shapes] no {n + 1}-cell of {shape.name or 'shape'} fills "
                             f"{[shape.cells[n][x] for x in candidate]}")
                return False
    return True


def _cubical_tuples(n: int, count: int, face: Callable[[int, int, int], int]) -> Iterator[Tuple[int, ...]]:
    """Slots ordered (1,0),(1,1),(2,0),...; ∂_i^a x_j^e = ∂_{j-1}^e x_i^a for i < j."""
    by_first_faces = defaultdict(list)
    for x in range(count):
        by_first_faces[(face(1, 0, x), face(1, 1, x))].append(x)
    chosen: List[int] = []
    slots = [(j, e) for j in range(1, n + 2) for e in (0, 1)]

    def slot_value(i: int, a: int) -> int:
        return chosen[2 * (i - 1) + a]

    def extend(s: int) -> Iterator[Tuple[int, ...]]:
        if s == len(slots):
            yield tuple(chosen)
            return
        j, e = slots[s]
        if j == 1:
            candidates = range(count)
        else:
            key = (face(j - 1, e, slot_value(1, 0)), face(j - 1, e, slot_value(1, 1)))
            candidates = by_first_faces.get(key, ())
        for x in candidates:
            if all(face(i, al, x) == face(j - 1, e, slot_value(i, al))
                   for i in range(2, j) for al in (0, 1)):
                chosen.append(x)
                yield from extend(s + 1)
                chosen.pop()

    yield from extend(0)


def check_cubical_extension(a: AugmentedShape, through: int) -> bool:
    """
    Surjective augmentation; any two vertices in one fiber are the ends of an
    edge; and for 1 <= n < through every compatible family (x_i^e) of n-cubes
    is the face family of an (n+1)-cube.
    """
    shape = a.shape
    if not isinstance(shape, FinPseudocubicalSet):
        raise InvalidShapeError("cubical extension needs a pseudocubical shape")
    _check_through(shape, through)
    if not a.is_surjective():
        logging.info(f"[Shapes] augmentation of {shape.name or 'shape'} is not surjective")
        return False
    if through >= 1:
        ends = set(zip(shape.face(1, 1, 0), shape.face(1, 1, 1)))
        for x in range(shape.count(0)):
            for y in range(shape.count(0)):
                if a.augmentation[x] == a.augmentation[y] and (x, y) not in ends:
                    logging.info(f"[Shapes] no edge of {shape.name or 'shape'} joins "
                                 f"{shape.cells[0][x]} to {shape.cells[0][y]}")
                    return False
    for n in range(1, through):
        def face(i, e, x, n=n):
            return shape.faces[n][i - 1][e][x]
        upper = shape.faces[n + 1]
        fillers = {tuple(upper[i][e][y] for i in range(n + 1) for e in (0, 1)) for y in range(shape.count(n + 1))}
        for candidate in _cubical_tuples(n, shape.count(n), face):
            if candidate not in fillers:
                logging.info(f"[Shapes] no {n + 1}-cube of {shape.name or 'shape'} fills "
                             f"{[shape.cells[n][x] for x in candidate]}")
                return False
    return True
