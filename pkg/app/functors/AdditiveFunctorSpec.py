from itertools import product
from typing import Dict, Mapping, Sequence, Tuple

from app.chains.groups import PresentedGroup
from app.core.errors import NonFunctorialError, UnsupportedFunctorError
from app.exactla import IntMatrix
from app.freecat.formal import BaseMap, FinSet
from app.functors.BaseFunctor import BaseFunctor

MapKey = Tuple[FinSet, FinSet, BaseMap]


class AdditiveFunctorSpec(BaseFunctor):
    """
    Functor given by explicit tables on a small base of finite sets.

    Every map between base sets must be listed; functoriality is checked
    exhaustively when the spec is built.
    """
    tag = "table"

    def __init__(self, objects: Mapping[FinSet, PresentedGroup], maps: Mapping[MapKey, IntMatrix]):
        self.objects: Dict[FinSet, PresentedGroup] = {tuple(s): g for s, g in objects.items()}
        self.maps: Dict[MapKey, IntMatrix] = {(tuple(a), tuple(b), tuple(f)): m for (a, b, f), m in maps.items()}
        violation = self.check_functoriality(list(self.objects))
        if violation is not None:
            raise NonFunctorialError(violation.describe())

    def on_object(self, s: FinSet) -> PresentedGroup:
        try:
            return self.objects[tuple(s)]
        except KeyError:
            raise UnsupportedFunctorError(f"set {list(s)} is outside the tabulated base") from None

    def on_map(self, source: FinSet, target: FinSet, images: Sequence[int]) -> IntMatrix:
        try:
            return self.maps[(tuple(source), tuple(target), tuple(images))]
        except KeyError:
            raise NonFunctorialError(f"map {list(images)} from {list(source)} to {list(target)} is not tabulated") \
                from None

    @classmethod
    def tabulate(cls, functor: BaseFunctor, sets: Sequence[FinSet]) -> "AdditiveFunctorSpec":
        """Freeze a rule-based functor into tables over the given sets."""
        objects = {tuple(s): functor.on_object(tuple(s)) for s in sets}
        maps = {}
        for a in sets:
            for b in sets:
                for f in product(range(len(b)), repeat=len(a)):
                    maps[(tuple(a), tuple(b), f)] = functor.on_map(tuple(a), tuple(b), f)
        return cls(objects, maps)
