from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from app.core.errors import DimensionMismatchError

FinSet = Tuple[str, ...]
BaseMap = Tuple[int, ...]


def compose_maps(g: BaseMap, f: BaseMap) -> BaseMap:
    """(g ∘ f)[k] = g[f[k]]."""
    return tuple(g[x] for x in f)


def identity_map(size: int) -> BaseMap:
    return tuple(range(size))


def _pruned(terms: Mapping[BaseMap, int]) -> Tuple[Tuple[BaseMap, int], ...]:
    return tuple(sorted((f, c) for f, c in terms.items() if c))


@dataclass(frozen=True)
class FormalMorphism:
    """
    Element of the free abelian group on Hom(source, target) in finite sets.

    terms is sorted and holds only nonzero coefficients, so equality is
    equality of formal combinations.
    """
    source: FinSet
    target: FinSet
    terms: Tuple[Tuple[BaseMap, int], ...] = ()

    def __post_init__(self):
        for f, _ in self.terms:
            if len(f) != len(self.source) or any(not 0 <= x < len(self.target) for x in f):
                raise DimensionMismatchError(f"{f} is not a map from {len(self.source)} to {len(self.target)} elements")

    @classmethod
    def of(cls, source: Sequence[str], target: Sequence[str], images: Sequence[int],
           coefficient: int = 1) -> "FormalMorphism":
        return cls(tuple(source), tuple(target), _pruned({tuple(images): coefficient}))

    @classmethod
    def combination(cls, source: Sequence[str], target: Sequence[str],
                    terms: Iterable[Tuple[Sequence[int], int]]) -> "FormalMorphism":
        collected: Dict[BaseMap, int] = {}
        for f, c in terms:
            collected[tuple(f)] = collected.get(tuple(f), 0) + c
        return cls(tuple(source), tuple(target), _pruned(collected))

    @classmethod
    def identity(cls, s: Sequence[str]) -> "FormalMorphism":
        return cls.of(s, s, identity_map(len(s)))

    @classmethod
    def zero(cls, source: Sequence[str], target: Sequence[str]) -> "FormalMorphism":
        return cls(tuple(source), tuple(target), ())

    def as_dict(self) -> Dict[BaseMap, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormalMorphism") -> "FormalMorphism":
        return formal_add(self, other)

    def __neg__(self) -> "FormalMorphism":
        return FormalMorphism(self.source, self.target, tuple((f, -c) for f, c in self.terms))

    def __sub__(self, other: "FormalMorphism") -> "FormalMorphism":
        return formal_add(self, -other)

    def __rmul__(self, scalar: int) -> "FormalMorphism":
        return FormalMorphism(self.source, self.target, _pruned({f: scalar * c for f, c in self.terms}))

    def __mul__(self, other: "FormalMorphism") -> "FormalMorphism":
        """self ∘ other."""
        return formal_compose(self, other)


def formal_add(f: FormalMorphism, g: FormalMorphism) -> FormalMorphism:
    if (f.source, f.target) != (g.source, g.target):
        raise DimensionMismatchError("formal sum of morphisms with different source or target")
    collected = f.as_dict()
    for m, c in g.terms:
        collected[m] = collected.get(m, 0) + c
    return FormalMorphism(f.source, f.target, _pruned(collected))


def formal_compose(g: FormalMorphism, f: FormalMorphism) -> FormalMorphism:
    """g ∘ f, expanded bilinearly."""
    if f.target != g.source:
        raise DimensionMismatchError("formal composite of non-composable morphisms")
    collected: Dict[BaseMap, int] = {}
    for gm, gc in g.terms:
        for fm, fc in f.terms:
            key = compose_maps(gm, fm)
            collected[key] = collected.get(key, 0) + gc * fc
    return FormalMorphism(f.source, g.target, _pruned(collected))
