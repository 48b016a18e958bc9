import json
from pathlib import Path
from typing import Optional, Tuple, Union

from pydantic import ValidationError

from app.core.errors import InvalidShapeError, SpecParseError
from app.dto.ShapeSpec import AugmentationSpec, ShapeSpec
from app.dto.Violation import Violation
from app.shapes.augmented import AugmentedShape, Shape
from app.shapes.presimplicial import FinPresimplicialSet
from app.shapes.pseudocubical import FinPseudocubicalSet, cubical_closure


def load_shape_spec(path: Union[str, Path]) -> ShapeSpec:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        return ShapeSpec.model_validate(raw)
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise SpecParseError(f"cannot read shape from {path}: {e}") from e


def shape_from_spec(spec: ShapeSpec) -> Tuple[Shape, Optional[AugmentedShape]]:
    """Turn a parsed spec into index tables; bad references raise InvalidShapeError with a Violation."""
    levels = spec.levels()
    if spec.kind == "presimplicial":
        for cell, listed in spec.faces.items():
            if any(not isinstance(f, str) for f in listed):
                raise SpecParseError(f"presimplicial faces of {cell} must be cell ids")
        shape: Shape = FinPresimplicialSet.from_tables(levels, spec.faces, name=spec.name)
    else:
        for cell, listed in spec.faces.items():
            if any(isinstance(f, str) for f in listed):
                raise SpecParseError(f"pseudocubical faces of {cell} must be [∂^0, ∂^1] pairs")
        if spec.closure:
            top = max((n for n, level in enumerate(levels) if level), default=0)
            shape = cubical_closure(levels[:top + 1], spec.faces, spec.truncation, name=spec.name)
        else:
            shape = FinPseudocubicalSet.from_tables(levels, spec.faces, spec.degeneracies, name=spec.name)

    augmented = None
    if spec.augmentation is not None:
        target = tuple(spec.augmentation.target)
        position = {t: k for k, t in enumerate(target)}
        table = []
        for v in shape.cells[0]:
            image = spec.augmentation.map.get(v)
            if image is None or image not in position:
                raise InvalidShapeError(f"augmentation of {v} missing or outside the target", Violation(
                    kind="dangling", degree=0, cell=v, detail=f"augmentation {v} -> {image}"))
            table.append(position[image])
        augmented = AugmentedShape(shape, target, tuple(table))
    return shape, augmented


def shape_to_spec(shape: Shape, augmented: Optional[AugmentedShape] = None) -> ShapeSpec:
    """Full tables, degenerate cells included."""
    cells = {str(n): list(level) for n, level in enumerate(shape.cells)}
    faces = {}
    for n in range(1, shape.truncation + 1):
        for k, cell in enumerate(shape.cells[n]):
            if isinstance(shape, FinPresimplicialSet):
                faces[cell] = [shape.cells[n - 1][shape.faces[n][i][k]] for i in range(n + 1)]
            else:
                faces[cell] = [[shape.cells[n - 1][shape.faces[n][i][e][k]] for e in (0, 1)]
                               for i in range(n)]
    degeneracies = None
    if isinstance(shape, FinPseudocubicalSet) and shape.has_degeneracies:
        degeneracies = {}
        for n in range(1, shape.truncation + 1):
            for k, cell in enumerate(shape.cells[n - 1]):
                degeneracies[cell] = [shape.cells[n][shape.degeneracies[n][j][k]] for j in range(n)]
    augmentation = None
    if augmented is not None:
        augmentation = AugmentationSpec(
            target=list(augmented.target),
            map={v: augmented.target[t] for v, t in zip(shape.cells[0], augmented.augmentation)})
    return ShapeSpec(kind=shape.kind, truncation=shape.truncation, name=shape.name, cells=cells,
                     faces=faces, degeneracies=degeneracies, augmentation=augmentation)
