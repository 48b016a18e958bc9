from typing import Union

from app.chains.complexes import AugmentedComplex, ChainComplex
from app.core.errors import InvalidShapeError
from app.exactla import IntMatrix
from app.normalize.objects import PresimplicialObject, PseudocubicalObject
from app.shapes.augmented import AugmentedShape, validate_augmented
from app.shapes.presimplicial import FinPresimplicialSet, validate_presimplicial
from app.shapes.pseudocubical import FinPseudocubicalSet, validate_pseudocubical

SimplicialInput = Union[FinPresimplicialSet, AugmentedShape, PresimplicialObject]
CubicalInput = Union[FinPseudocubicalSet, AugmentedShape, PseudocubicalObject]


def _validated(shape, validator):
    violation = validator(shape)
    if violation is not None:
        raise InvalidShapeError(f"invalid shape: {violation.describe()}", violation)


def as_presimplicial_object(s: SimplicialInput) -> PresimplicialObject:
    if isinstance(s, PresimplicialObject):
        return s
    if isinstance(s, AugmentedShape):
        _validated(s, validate_augmented)
    else:
        _validated(s, validate_presimplicial)
    return PresimplicialObject.from_shape(s)


def as_pseudocubical_object(x: CubicalInput) -> PseudocubicalObject:
    if isinstance(x, PseudocubicalObject):
        return x
    if isinstance(x, AugmentedShape):
        _validated(x, validate_augmented)
    else:
        _validated(x, validate_pseudocubical)
    return PseudocubicalObject.from_shape(x)


def _wrap(obj, complex_: ChainComplex) -> Union[ChainComplex, AugmentedComplex]:
    if obj.is_augmented:
        return AugmentedComplex(complex_, obj.target, obj.augmentation)
    return complex_


def unnormalized_K(s: SimplicialInput) -> Union[ChainComplex, AugmentedComplex]:
    """K(S): ∂_n = Σ_{i=0..n} (-1)^i ∂_i. Augmented input gives an augmented complex."""
    obj = as_presimplicial_object(s)
    boundaries = []
    for n in range(1, obj.truncation + 1):
        d = IntMatrix.zeros(obj.levels[n - 1].generators, obj.levels[n].generators)
        for i in range(n + 1):
            d = d + obj.face(n, i) * (-1) ** i
        boundaries.append(d)
    return _wrap(obj, ChainComplex(obj.levels, tuple(boundaries)))


def cubical_boundary(obj: PseudocubicalObject, n: int) -> IntMatrix:
    """Σ_{i=1..n} (-1)^i (∂_i^1 - ∂_i^0) : X_n -> X_{n-1}."""
    d = IntMatrix.zeros(obj.levels[n - 1].generators, obj.levels[n].generators)
    for i in range(1, n + 1):
        d = d + (obj.face(n, i, 1) - obj.face(n, i, 0)) * (-1) ** i
    return d


def unnormalized_C(x: CubicalInput) -> Union[ChainComplex, AugmentedComplex]:
    """C(X) with the alternating-difference boundary; degeneracies are not consulted."""
    obj = as_pseudocubical_object(x)
    boundaries = tuple(cubical_boundary(obj, n) for n in range(1, obj.truncation + 1))
    return _wrap(obj, ChainComplex(obj.levels, boundaries))


def plain_C(obj: PseudocubicalObject) -> ChainComplex:
    """C(X) without its augmentation."""
    c = unnormalized_C(obj)
    return c.complex if isinstance(c, AugmentedComplex) else c
