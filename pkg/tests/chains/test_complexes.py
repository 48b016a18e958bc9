import pytest
from pydantic import ValidationError

from app.chains.complexes import (AugmentedComplex, ChainComplex, homology, homology_report, is_acyclic,
                                  validate_complex)
from app.chains.groups import PresentedGroup
from app.core.errors import DegreeOutOfRangeError, DimensionMismatchError
from app.dto.ComplexSpec import ComplexSpec
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix

Z = FgAbGroup.free(1)
Z2 = FgAbGroup.cyclic(2)


def _times_two() -> ChainComplex:
    return ChainComplex.free([1, 1], [IntMatrix.from_rows([[2]])])


def test_homology_of_multiplication_by_two():
    c = _times_two()
    assert homology(c, 0) == Z2
    assert homology(c, 1).is_trivial()


def test_homology_with_presented_terms():
    # Z --2--> Z/4
    c = ChainComplex((PresentedGroup.from_fg(FgAbGroup.cyclic(4)), PresentedGroup.free(1)),
                     (IntMatrix.from_rows([[2]]),))
    assert validate_complex(c) is None
    assert homology(c, 0) == Z2
    assert homology(c, 1) == Z


def test_report_marks_the_top_degree_as_an_upper_bound():
    circle = ChainComplex.free([1, 1], [IntMatrix.zeros(1, 1)])
    report = homology_report(circle)
    assert report.H == [Z]
    assert report.certified_through == 0
    assert report.top_upper_bound == Z


def test_homology_rejects_degrees_outside_the_complex():
    with pytest.raises(DegreeOutOfRangeError):
        homology(_times_two(), 2)


def test_boundary_shapes_are_checked():
    with pytest.raises(DimensionMismatchError):
        ChainComplex.free([1, 2], [IntMatrix.zeros(1, 1)])


def test_validate_finds_nonzero_square():
    c = ChainComplex.free([1, 1, 1], [IntMatrix.identity(1), IntMatrix.identity(1)])
    violation = validate_complex(c)
    assert violation.kind == "boundary-squared"
    assert violation.degree == 2


def test_validate_finds_boundary_ignoring_relations():
    c = ChainComplex((PresentedGroup.free(1), PresentedGroup.from_fg(Z2)), (IntMatrix.identity(1),))
    violation = validate_complex(c)
    assert violation.kind == "ill-defined-boundary"
    assert violation.degree == 1


def test_tensor_changes_coefficients():
    c = _times_two().tensor(Z2)
    assert homology(c, 0) == Z2
    assert homology(c, 1) == Z2
    assert _times_two().tensor(FgAbGroup.cyclic(3)).truncate(0).ranks() == [1]


def test_augmented_resolution_is_acyclic():
    resolution = AugmentedComplex(_times_two(), PresentedGroup.from_fg(Z2), IntMatrix.identity(1))
    assert validate_complex(resolution) is None
    assert is_acyclic(resolution, 1)
    with pytest.raises(DegreeOutOfRangeError):
        is_acyclic(resolution, 2)


def test_bad_augmentation_is_reported():
    wrong = AugmentedComplex(ChainComplex.free([1, 1], [IntMatrix.identity(1)]), PresentedGroup.free(1),
                             IntMatrix.identity(1))
    violation = validate_complex(wrong)
    assert violation.kind == "augmentation"
    circle = ChainComplex.free([1, 1], [IntMatrix.zeros(1, 1)])
    assert not is_acyclic(AugmentedComplex(circle, PresentedGroup.free(1), IntMatrix.identity(1)), 1)


def test_augmentation_failures_keep_their_degree():
    wrong = AugmentedComplex(ChainComplex.free([1, 1], [IntMatrix.identity(1)]), PresentedGroup.free(1),
                             IntMatrix.identity(1))
    assert validate_complex(wrong).degree == 1
    ill_defined = AugmentedComplex(ChainComplex((PresentedGroup.from_fg(Z2),), ()), PresentedGroup.free(1),
                                   IntMatrix.identity(1))
    violation = validate_complex(ill_defined)
    assert (violation.kind, violation.degree) == ("augmentation", 0)
    higher = AugmentedComplex(ChainComplex.free([1, 1, 1], [IntMatrix.identity(1), IntMatrix.identity(1)]),
                              PresentedGroup.free(1), IntMatrix.zeros(1, 1))
    violation = validate_complex(higher)
    assert (violation.kind, violation.degree) == ("boundary-squared", 2)


def test_complex_documents_round_trip():
    plain = ChainComplex((PresentedGroup.from_fg(FgAbGroup.cyclic(4)), PresentedGroup.free(1)),
                         (IntMatrix.from_rows([[2]]),))
    resolution = AugmentedComplex(_times_two(), PresentedGroup.from_fg(Z2), IntMatrix.identity(1))
    for c in (plain, resolution):
        spec = ComplexSpec.from_complex(c)
        assert ComplexSpec.model_validate_json(spec.model_dump_json()).to_complex() == c
    spec = ComplexSpec.from_complex(resolution)
    assert spec.terms[0].relations is None
    assert spec.augmentation.target.relations.entries == [[2]]
    assert ComplexSpec.from_complex(plain).augmentation is None


def test_complex_documents_check_their_counts():
    with pytest.raises(ValidationError):
        ComplexSpec.model_validate({"kind": "complex", "terms": [{"generators": 1}, {"generators": 1}]})
    with pytest.raises(ValidationError):
        ComplexSpec.model_validate({"kind": "complex", "terms": [
            {"generators": 2, "relations": {"rows": 1, "cols": 1, "entries": [[2]]}}]})
