import json

import pytest

from app.chains.complexes import AugmentedComplex, ChainComplex
from app.core.errors import SpecParseError, UnknownModelError
from app.exactla import IntMatrix
from app.services.ModelService import ModelService


def test_builtin_models_and_files(fixtures_dir):
    shape, augmented = ModelService.load_shape("torus-□", 2)
    assert shape.truncation == 2
    assert augmented is None
    shape, augmented = ModelService.load_shape(str(fixtures_dir / "triangle.json"), truncation=4)
    assert shape.truncation == 2
    assert augmented.target == ("*",)
    with pytest.raises(UnknownModelError):
        ModelService.load_shape("mobius-□")


@pytest.mark.parametrize("fixture", ["square.json", "triangle.json", "torus_cube.json", "resolution_complex.json",
                                     "augmented_complex.json"])
def test_valid_files(fixtures_dir, fixture):
    assert ModelService.validate_file(str(fixtures_dir / fixture)) is None


@pytest.mark.parametrize("fixture,kind,degree", [
    ("square_broken.json", "face-face", 2),
    ("dangling.json", "dangling", 1),
    ("bad_complex.json", "boundary-squared", 2),
    ("bad_augmentation.json", "augmentation", 1),
])
def test_invalid_files(fixtures_dir, fixture, kind, degree):
    violation = ModelService.validate_file(str(fixtures_dir / fixture))
    assert violation.kind == kind
    assert violation.degree == degree


def test_unreadable_files(fixtures_dir, tmp_path):
    with pytest.raises(SpecParseError):
        ModelService.validate_file(str(fixtures_dir / "malformed.json"))
    other = tmp_path / "list.json"
    other.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(SpecParseError):
        ModelService.validate_file(str(other))


def test_complex_files(fixtures_dir, tmp_path):
    resolution = ModelService.load_complex(fixtures_dir / "augmented_complex.json")
    assert isinstance(resolution, AugmentedComplex)
    assert resolution.target.relations == IntMatrix.from_rows([[2]])
    assert isinstance(ModelService.load_complex(fixtures_dir / "resolution_complex.json"), ChainComplex)
    assert ModelService.is_complex_file(str(fixtures_dir / "augmented_complex.json"))
    assert not ModelService.is_complex_file(str(fixtures_dir / "square.json"))
    assert not ModelService.is_complex_file("torus-□")
    mismatched = tmp_path / "mismatched.json"
    mismatched.write_text(json.dumps({"kind": "complex", "terms": [{"generators": 1}, {"generators": 2}],
                                      "boundaries": [{"rows": 1, "cols": 1, "entries": [[1]]}]}), encoding="utf-8")
    with pytest.raises(SpecParseError):
        ModelService.load_complex(mismatched)
