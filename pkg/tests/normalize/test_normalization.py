import pytest

from app.chains.complexes import homology, homology_report
from app.core.errors import InvalidComplexError, InvalidShapeError, MissingDegeneraciesError
from app.dto.FgAbGroup import FgAbGroup
from app.normalize import (PseudocubicalObject, check_normalization_agreement, degenerate_subcomplex_rank,
                           kernel_form, normalized_kernel, normalized_sigma, sigma_endomorphism, unnormalized_C,
                           unnormalized_K)
from app.shapes import (FinPseudocubicalSet, builtin_model, load_shape_spec, nondegenerate_count, rewire_face,
                        shape_from_spec)

CUBICAL = ["point-□", "s1-□", "torus-□", "klein-□"]


@pytest.mark.parametrize("name", CUBICAL)
def test_sigma_is_identity_on_vertices_and_kills_degeneracies(name):
    x = builtin_model(name)
    sigma = sigma_endomorphism(x)
    obj = PseudocubicalObject.from_shape(x)
    assert sigma.components[0].is_identity()
    for n in range(1, x.truncation + 1):
        assert sigma.components[n] @ sigma.components[n] == sigma.components[n]
        for j in range(1, n + 1):
            assert (sigma.components[n] @ obj.degeneracy(n, j)).is_zero()


@pytest.mark.parametrize("name", CUBICAL)
def test_both_normalizations_agree(name):
    x = builtin_model(name)
    assert check_normalization_agreement(x) is None
    expected = [nondegenerate_count(x, n) for n in range(x.truncation + 1)]
    assert kernel_form(x).complex.ranks() == expected
    assert normalized_sigma(x).complex.ranks() == expected
    assert [x.count(n) - degenerate_subcomplex_rank(x, n) for n in range(x.truncation + 1)] == expected
    assert homology_report(normalized_sigma(x).complex) == homology_report(normalized_kernel(x))


def test_unnormalized_chains_of_a_point_are_not_acyclic():
    point = builtin_model("point-□")
    for n in (1, 2):
        assert homology(unnormalized_C(point), n) == FgAbGroup.free(1)
        assert homology(normalized_kernel(point), n).is_trivial()


def test_klein_bottle_through_every_theory():
    expected = [FgAbGroup.free(1), FgAbGroup(rank=1, torsion=(2,)), FgAbGroup.zero()]
    assert homology_report(unnormalized_K(builtin_model("klein-Δ"))).H == expected
    assert homology_report(normalized_kernel(builtin_model("klein-□"))).H == expected
    assert homology_report(normalized_sigma(builtin_model("klein-□")).complex).H == expected


def test_sigma_needs_degeneracies(fixtures_dir):
    square, _ = shape_from_spec(load_shape_spec(fixtures_dir / "square.json"))
    with pytest.raises(MissingDegeneraciesError):
        sigma_endomorphism(square)
    assert normalized_kernel(square).ranks()[0] == 4


def test_augmented_kernel_form_needs_an_augmentation():
    with pytest.raises(InvalidComplexError):
        kernel_form(builtin_model("torus-□")).augmented()


def test_invalid_shapes_are_refused_by_the_builders():
    with pytest.raises(InvalidShapeError):
        unnormalized_K(rewire_face(builtin_model("s2-Δ"), 2, "U", [0], "e01"))


def test_triangle_is_acyclic(fixtures_dir):
    _, triangle = shape_from_spec(load_shape_spec(fixtures_dir / "triangle.json"))
    report = homology_report(unnormalized_K(triangle).complex)
    assert report.H == [FgAbGroup.free(1), FgAbGroup.zero()]


def test_kernel_form_of_the_precubical_circle():
    # without degeneracies ∂_1^1 e = p is nonzero, so no edge survives the kernel
    circle = FinPseudocubicalSet.from_tables([["p"], ["e"]], {"e": [["p", "p"]]}, name="s1")
    n = normalized_kernel(circle)
    assert n.ranks() == [1, 0]
    assert [homology(n, k) for k in (0, 1)] == [FgAbGroup.free(1), FgAbGroup.zero()]
    c = unnormalized_C(circle)
    assert [homology(c, k) for k in (0, 1)] == [FgAbGroup.free(1), FgAbGroup.free(1)]
