import logging
from itertools import product
from typing import Sequence, Union

from app.chains.complexes import AugmentedComplex
from app.core.errors import InvalidShapeError
from app.normalize.builders import unnormalized_K
from app.normalize.kernel_form import kernel_form
from app.shapes.augmented import AugmentedShape
from app.shapes.presimplicial import FinPresimplicialSet
from app.shapes.pseudocubical import FinPseudocubicalSet


def _hom_cells(q: int, count: int):
    return list(product(range(count), repeat=q))


def _pointwise(table, cells_hom, index):
    return tuple(index[tuple(table[x] for x in h)] for h in cells_hom)


def hom_shape(q: Union[int, Sequence[str]], a: AugmentedShape) -> AugmentedShape:
    """
    Hom(q, -) applied cellwise: n-cells are maps q -> cells[n], all structure
    maps act pointwise. The augmentation lands in Hom(q, target).
    """
    size = q if isinstance(q, int) else len(q)
    x = a.shape
    homs = [_hom_cells(size, x.count(n)) for n in range(x.truncation + 1)]
    index = [{h: k for k, h in enumerate(level)} for level in homs]
    names = tuple(tuple("[" + "|".join(x.cells[n][c] for c in h) + "]" for h in level)
                  for n, level in enumerate(homs))
    target_homs = _hom_cells(size, len(a.target))
    target_index = {h: k for k, h in enumerate(target_homs)}
    augmentation = _pointwise(a.augmentation, homs[0], target_index)
    target = tuple("[" + "|".join(a.target[t] for t in h) + "]" for h in target_homs)
    name = f"Hom({size}, {x.name or 'shape'})"

    if isinstance(x, FinPresimplicialSet):
        faces = [()] + [tuple(_pointwise(x.face(n, i), homs[n], index[n - 1]) for i in range(n + 1))
                        for n in range(1, x.truncation + 1)]
        shape = FinPresimplicialSet(names, tuple(faces), name=name)
    elif isinstance(x, FinPseudocubicalSet):
        faces = [()] + [tuple((_pointwise(x.face(n, i, 0), homs[n], index[n - 1]),
                               _pointwise(x.face(n, i, 1), homs[n], index[n - 1])) for i in range(1, n + 1))
                        for n in range(1, x.truncation + 1)]
        degens = None
        if x.has_degeneracies:
            degens = tuple([()] + [tuple(_pointwise(x.degeneracy(n, j), homs[n - 1], index[n])
                                         for j in range(1, n + 1)) for n in range(1, x.truncation + 1)])
        shape = FinPseudocubicalSet(names, tuple(faces), degens, name=name)
    else:
        raise InvalidShapeError(f"cannot take Hom into {type(x).__name__}")
    logging.debug(f"[Freecat] {name} cell counts {[len(level) for level in homs]}")
    return AugmentedShape(shape, target, augmentation)


def hom_complex(q: Union[int, Sequence[str]], a: AugmentedShape) -> AugmentedComplex:
    """K(ℤ[Hom(q, S)]) or the kernel-form N(ℤ[Hom(q, X)]), augmented to ℤ[Hom(q, target)]."""
    h = hom_shape(q, a)
    if isinstance(h.shape, FinPresimplicialSet):
        return unnormalized_K(h)
    return kernel_form(h).augmented()
