import logging
from typing import Dict, List, Optional, Sequence, Union

from app.core.errors import InvalidShapeError, UnknownModelError
from app.pydanticConfig.settings import settings
from app.shapes.presimplicial import FinPresimplicialSet, validate_presimplicial
from app.shapes.pseudocubical import FinPseudocubicalSet, cubical_closure, validate_pseudocubical

# name -> (dimension, nondegenerate cells per dimension, faces by name)
# Δ faces list ∂_0, ..., ∂_n; □ faces list [∂_i^0, ∂_i^1] for i = 1..n
_SIMPLICIAL = {
    "point-Δ": (0, [["v"]], {}),
    "s1-Δ": (1, [["v"], ["e"]], {"e": ["v", "v"]}),
    "s2-Δ": (2, [["v0", "v1", "v2"], ["e01", "e02", "e12"], ["U", "L"]], {
        "e01": ["v1", "v0"], "e02": ["v2", "v0"], "e12": ["v2", "v1"],
        "U": ["e12", "e02", "e01"], "L": ["e12", "e02", "e01"],
    }),
    "torus-Δ": (2, [["v"], ["a", "b", "c"], ["U", "L"]], {
        "a": ["v", "v"], "b": ["v", "v"], "c": ["v", "v"],
        "U": ["a", "c", "b"], "L": ["b", "c", "a"],
    }),
    "rp2-Δ": (2, [["v", "w"], ["a", "b", "c"], ["U", "L"]], {
        "a": ["w", "v"], "b": ["w", "v"], "c": ["w", "w"],
        "U": ["c", "a", "b"], "L": ["c", "b", "a"],
    }),
    "klein-Δ": (2, [["v"], ["a", "b", "c"], ["U", "L"]], {
        "a": ["v", "v"], "b": ["v", "v"], "c": ["v", "v"],
        "U": ["a", "c", "b"], "L": ["c", "b", "a"],
    }),
}

_CUBICAL = {
    "point-□": (0, [["p"]], {}),
    "s1-□": (1, [["p"], ["e"]], {"e": [["p", "p"]]}),
    "torus-□": (2, [["p"], ["a", "b"], ["Q"]], {
        "a": [["p", "p"]], "b": [["p", "p"]],
        "Q": [["a", "a"], ["b", "b"]],
    }),
    "klein-□": (2, [["p"], ["a", "b"], ["Q"]], {
        "a": [["p", "p"]], "b": [["p", "p"]],
        "Q": [["a", "b"], ["b", "a"]],
    }),
}

MODEL_NAMES = tuple(sorted(list(_SIMPLICIAL) + list(_CUBICAL)))


def default_truncation(dimension: int) -> int:
    return min(max(dimension + 1, settings.DEFAULT_TRUNCATION), settings.CUBIX_MAX_DIM)


def _resolve_truncation(name: str, dimension: int, truncation: Optional[int]) -> int:
    if truncation is None:
        return default_truncation(dimension)
    if truncation < 0:
        raise InvalidShapeError(f"truncation must be non-negative, got {truncation}")
    if truncation > settings.CUBIX_MAX_DIM:
        logging.warning(f"[Shapes] truncation {truncation} for {name} capped at "
                        f"CUBIX_MAX_DIM={settings.CUBIX_MAX_DIM}")
        return settings.CUBIX_MAX_DIM
    return truncation


def _simplicial(name: str, truncation: Optional[int]) -> FinPresimplicialSet:
    dimension, cells, faces = _SIMPLICIAL[name]
    top = _resolve_truncation(name, dimension, truncation)
    levels: List[Sequence[str]] = [cells[n] if n < len(cells) else [] for n in range(top + 1)]
    return FinPresimplicialSet.from_tables(levels, faces, name=name)


def _cubical(name: str, truncation: Optional[int]) -> FinPseudocubicalSet:
    dimension, cells, faces = _CUBICAL[name]
    top = _resolve_truncation(name, dimension, truncation)
    # cells above the truncation are dropped; their faces stay consistent
    kept = cells[:top + 1]
    kept_faces: Dict[str, list] = {y: faces[y] for level in kept for y in level if y in faces}
    return cubical_closure(kept, kept_faces, top, name=name)


def builtin_model(name: str, truncation: Optional[int] = None) -> Union[FinPresimplicialSet, FinPseudocubicalSet]:
    """
    Small named models of the point, circle, sphere, torus, projective plane
    and Klein bottle. Δ-models are presimplicial with empty levels above their
    dimension; □-models are closed under degeneracies up to the truncation.
    """
    if name in _SIMPLICIAL:
        shape = _simplicial(name, truncation)
        violation = validate_presimplicial(shape)
    elif name in _CUBICAL:
        shape = _cubical(name, truncation)
        violation = validate_pseudocubical(shape)
    else:
        raise UnknownModelError(f"unknown model {name!r}; known: {', '.join(MODEL_NAMES)}")
    if violation is not None:
        raise InvalidShapeError(f"builtin model {name} failed validation: {violation.describe()}", violation)
    return shape
