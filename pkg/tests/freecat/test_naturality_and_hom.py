import pytest

from app.chains.complexes import is_acyclic
from app.core.errors import MissingDegeneraciesError
from app.dto.FgAbGroup import FgAbGroup
from app.freecat import (KaroubiObject, formal_sigma, hom_complex, hom_shape, karoubi_normalization,
                         naturality_violation, verify_normalization_naturality)
from app.functors.concreteFunctors.FreeFunctor import FreeFunctor
from app.functors.concreteFunctors.FreeTensorFunctor import FreeTensorFunctor
from app.shapes import (builtin_model, cech_presimplicial, cech_pseudocubical, load_shape_spec, nondegenerate_count,
                        shape_from_spec, surjection_from_fibers, validate_augmented)


def test_formal_sigma_of_the_circle():
    circle = builtin_model("s1-□")
    sigma = formal_sigma(circle, 1)
    # cells of degree 1 are e and s[1](p); ∂_1^1 of both is p
    assert sigma.as_dict() == {(0, 1): 1, (1, 1): -1}
    KaroubiObject(circle.cells[1], sigma)


@pytest.mark.parametrize("name", ["s1-□", "torus-□", "klein-□"])
def test_karoubi_normalization_has_nondegenerate_ranks(name):
    x = builtin_model(name)
    complex_, parts = karoubi_normalization(FreeFunctor(), x)
    assert complex_.ranks() == [nondegenerate_count(x, n) for n in range(x.truncation + 1)]
    assert len(parts) == x.truncation + 1


@pytest.mark.parametrize("name,coefficients", [("torus-□", "Z/2"), ("klein-□", "Z/2"), ("s1-□", "Z/3"),
                                               ("klein-□", "Z/4")])
def test_normalization_commutes_with_the_functor(name, coefficients):
    functor = FreeTensorFunctor(FgAbGroup.parse(coefficients))
    x = builtin_model(name)
    assert naturality_violation(functor, x) is None
    assert verify_normalization_naturality(functor, x)


def test_naturality_needs_degeneracies(fixtures_dir):
    square, _ = shape_from_spec(load_shape_spec(fixtures_dir / "square.json"))
    with pytest.raises(MissingDegeneraciesError):
        naturality_violation(FreeFunctor(), square)


def test_hom_into_a_cech_nerve_stays_contractible():
    f = surjection_from_fibers([2])
    simplicial = hom_shape(2, cech_presimplicial(f, 2))
    assert simplicial.shape.count(0) == 4
    assert simplicial.shape.cells[0][1] == "[(a)|(b)]"
    assert validate_augmented(simplicial) is None
    assert is_acyclic(hom_complex(2, cech_presimplicial(f, 2)), 1)
    assert is_acyclic(hom_complex(1, cech_pseudocubical(f, 2)), 1)


def test_maps_from_three_points_into_a_two_point_fiber():
    f = surjection_from_fibers([2])
    assert hom_shape(3, cech_presimplicial(f, 2)).shape.count(0) == 8
    assert is_acyclic(hom_complex(3, cech_presimplicial(f, 2)), 1)


@pytest.mark.slow
def test_maps_from_three_points_into_a_cubical_fiber():
    assert is_acyclic(hom_complex(3, cech_pseudocubical(surjection_from_fibers([2]), 2)), 1)
