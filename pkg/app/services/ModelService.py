import json
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

from pydantic import ValidationError

from app.chains.complexes import AugmentedComplex, ChainComplex, validate_complex
from app.core.errors import DimensionMismatchError, InvalidShapeError, SpecParseError, UnknownModelError
from app.dto.ComplexSpec import ComplexSpec
from app.dto.ShapeSpec import ShapeSpec
from app.dto.Violation import Violation
from app.shapes import (MODEL_NAMES, AugmentedShape, Shape, builtin_model, shape_from_spec, validate_augmented,
                        validate_shape)


class ModelService:
    """Resolve builtin model names and JSON files to shapes and complexes."""

    @staticmethod
    def _read_json(path: Union[str, Path]) -> dict:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise SpecParseError(f"cannot read {path}: {e}") from e
        if not isinstance(raw, dict) or "kind" not in raw:
            raise SpecParseError(f"{path} is not a shape or complex document")
        return raw

    @classmethod
    def load_shape(cls, target: str, truncation: Optional[int] = None) -> Tuple[Shape, Optional[AugmentedShape]]:
        """A builtin model by name, otherwise a JSON shape file."""
        if target in MODEL_NAMES:
            return builtin_model(target, truncation), None
        if not Path(target).exists():
            raise UnknownModelError(f"'{target}' is neither a builtin model ({', '.join(MODEL_NAMES)}) nor a file")
        raw = cls._read_json(target)
        try:
            spec = ShapeSpec.model_validate(raw)
        except ValidationError as e:
            raise SpecParseError(f"invalid shape document {target}: {e}") from e
        if truncation is not None and truncation != spec.truncation:
            logging.warning(f"[ModelService] {target} fixes its own truncation {spec.truncation}; "
                            f"ignoring --truncation {truncation}")
        return shape_from_spec(spec)

    @classmethod
    def load_complex(cls, path: Union[str, Path]) -> Union[ChainComplex, AugmentedComplex]:
        """A complex document, augmented when it carries an augmentation."""
        raw = cls._read_json(path)
        try:
            return ComplexSpec.model_validate(raw).to_complex()
        except ValidationError as e:
            raise SpecParseError(f"invalid complex document {path}: {e}") from e
        except DimensionMismatchError as e:
            raise SpecParseError(f"inconsistent complex document {path}: {e}") from e

    @classmethod
    def is_complex_file(cls, target: str) -> bool:
        if target in MODEL_NAMES or not Path(target).exists():
            return False
        return cls._read_json(target)["kind"] == "complex"

    @classmethod
    def validate_file(cls, path: str) -> Optional[Violation]:
        """Run the validator matching the document kind; bad references come back as violations."""
        raw = cls._read_json(path)
        if raw["kind"] == "complex":
            return validate_complex(cls.load_complex(path))
        try:
            spec = ShapeSpec.model_validate(raw)
        except ValidationError as e:
            raise SpecParseError(f"invalid document {path}: {e}") from e
        try:
            shape, augmented = shape_from_spec(spec)
        except InvalidShapeError as e:
            return e.violation or Violation(kind="invalid-shape", detail=str(e))
        if augmented is not None:
            return validate_augmented(augmented)
        return validate_shape(shape)
