import pytest

from app.chains.complexes import is_acyclic
from app.core.errors import DegreeOutOfRangeError, NotSurjectiveError
from app.normalize import kernel_form, unnormalized_K
from app.shapes import (AugmentedShape, builtin_model, cech_presimplicial, cech_pseudocubical,
                        check_cubical_extension, check_simplicial_extension, surjection_from_fibers,
                        validate_augmented)


def test_surjection_from_fibers():
    assert surjection_from_fibers([2, 1]) == {"a": "b0", "b": "b0", "c": "b1"}
    with pytest.raises(NotSurjectiveError):
        surjection_from_fibers([1, 0])


def test_simplicial_cech_nerve():
    a = cech_presimplicial(surjection_from_fibers([2, 1]), 2)
    assert [a.shape.count(n) for n in range(3)] == [3, 5, 9]
    assert a.shape.cells[0] == ("(a)", "(b)", "(c)")
    assert a.shape.face_name(1, 0, "(a,b)") == "(b)"
    assert a.target == ("b0", "b1")
    assert validate_augmented(a) is None
    assert check_simplicial_extension(a, 2)
    assert is_acyclic(unnormalized_K(a), 1)


def test_cubical_cech_construction():
    a = cech_pseudocubical(surjection_from_fibers([2, 1]), 2)
    assert [a.shape.count(n) for n in range(3)] == [3, 5, 17]
    assert a.shape.face_name(1, 1, 0, "(a,b)") == "(a)"
    assert a.shape.face_name(1, 1, 1, "(a,b)") == "(b)"
    assert validate_augmented(a) is None
    assert check_cubical_extension(a, 2)
    assert is_acyclic(kernel_form(a).augmented(), 1)


def test_codomain_must_be_covered():
    with pytest.raises(NotSurjectiveError):
        cech_presimplicial({"a": "x"}, 1, codomain=["x", "y"])
    with pytest.raises(DegreeOutOfRangeError):
        cech_pseudocubical({"a": "x"}, -1)


def test_torus_is_not_a_cech_nerve():
    torus = AugmentedShape.to_point(builtin_model("torus-Δ"))
    assert validate_augmented(torus) is None
    assert check_simplicial_extension(torus, 1)
    assert not check_simplicial_extension(torus, 2)
    with pytest.raises(DegreeOutOfRangeError):
        check_simplicial_extension(torus, 7)


def test_cubical_extension_of_augmented_models():
    circle = AugmentedShape.to_point(builtin_model("s1-□"))
    assert check_cubical_extension(circle, 1)
    # (e, e, e, e) is a compatible family of edges that no square fills
    assert not check_cubical_extension(circle, 2)
    assert check_cubical_extension(AugmentedShape.to_point(builtin_model("point-□")), 3)
    missed = AugmentedShape(builtin_model("point-□"), ("x", "y"), (0,))
    assert not check_cubical_extension(missed, 1)


def test_simplicial_extension_of_small_models():
    circle = AugmentedShape.to_point(builtin_model("s1-Δ"))
    assert check_simplicial_extension(circle, 1)
    assert not check_simplicial_extension(circle, 2)
    assert not check_simplicial_extension(AugmentedShape.to_point(builtin_model("point-Δ")), 1)


def test_three_point_cubical_fiber_extends():
    a = cech_pseudocubical(surjection_from_fibers([3]), 2)
    assert [a.shape.count(n) for n in range(3)] == [3, 9, 81]
    assert check_cubical_extension(a, 2)


@pytest.mark.slow
def test_three_point_cubical_fiber_is_acyclic_through_two():
    assert is_acyclic(kernel_form(cech_pseudocubical(surjection_from_fibers([3]), 3)).augmented(), 2)
