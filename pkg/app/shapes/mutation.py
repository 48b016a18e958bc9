from dataclasses import replace
from typing import Sequence, Union

from app.core.errors import InvalidShapeError
from app.shapes.presimplicial import FinPresimplicialSet
from app.shapes.pseudocubical import FinPseudocubicalSet


def _set(row: tuple, k: int, value: int) -> tuple:
    return row[:k] + (value,) + row[k + 1:]


def rewire_face(shape: Union[FinPresimplicialSet, FinPseudocubicalSet], n: int, cell: str,
                index: Sequence[int], to: str) -> Union[FinPresimplicialSet, FinPseudocubicalSet]:
    """
    Copy of the shape with one face redirected: index is [i] for ∂_i of a
    presimplicial set, [i, eps] for ∂_i^eps of a pseudocubical one. The
    result is not validated.
    """
    if not 1 <= n <= shape.truncation or cell not in shape.cells[n] or to not in shape.cells[n - 1]:
        raise InvalidShapeError(f"cannot rewire {cell} in degree {n} to {to}")
    k = shape.index_of(n, cell)
    target = shape.index_of(n - 1, to)
    faces = list(shape.faces)
    if isinstance(shape, FinPresimplicialSet):
        (i,) = index
        faces[n] = _set(faces[n], i, _set(faces[n][i], k, target))
    else:
        i, eps = index
        pair = faces[n][i - 1]
        faces[n] = _set(faces[n], i - 1, _set(pair, eps, _set(pair[eps], k, target)))
    return replace(shape, faces=tuple(faces))
