import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.errors import DimensionMismatchError, NotIdempotentError
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix
from app.freecat import FormalMorphism, KaroubiObject, extend_additive, extend_to_karoubi, formal_add, formal_compose
from app.functors.concreteFunctors.FreeFunctor import FreeFunctor
from app.functors.concreteFunctors.FreeTensorFunctor import FreeTensorFunctor

A = ("x", "y")
B = ("u", "v", "w")
C = ("z",)


@st.composite
def formal_morphisms(draw, source, target):
    maps = st.tuples(*[st.integers(0, len(target) - 1) for _ in source])
    terms = draw(st.lists(st.tuples(maps, st.integers(-3, 3)), max_size=3))
    return FormalMorphism.combination(source, target, terms)


@given(formal_morphisms(A, B), formal_morphisms(A, B), formal_morphisms(B, C))
def test_composition_is_bilinear(f, g, h):
    assert h * (f + g) == h * f + h * g
    assert h * (f - g) == h * f - h * g
    assert h * (2 * f) == 2 * (h * f)


@given(formal_morphisms(C, A), formal_morphisms(A, B), formal_morphisms(B, C))
def test_composition_is_associative_and_unital(f, g, h):
    assert h * (g * f) == (h * g) * f
    assert FormalMorphism.identity(B) * g == g
    assert g * FormalMorphism.identity(A) == g


@given(formal_morphisms(A, B), formal_morphisms(B, C))
def test_free_functor_is_additive_and_functorial(f, g):
    free = FreeFunctor()
    assert extend_additive(free, g * f) == extend_additive(free, g) @ extend_additive(free, f)
    assert extend_additive(free, f + f) == extend_additive(free, f) * 2


def test_cancelling_terms_vanish():
    f = FormalMorphism.of(A, B, (0, 2))
    assert (f - f).is_zero()
    assert f - f == FormalMorphism.zero(A, B)
    with pytest.raises(DimensionMismatchError):
        FormalMorphism.of(A, B, (0, 3))
    with pytest.raises(DimensionMismatchError):
        f + FormalMorphism.of(A, A, (0, 1))


def test_extension_reduces_entries_in_torsion_targets():
    mod2 = FreeTensorFunctor(FgAbGroup.cyclic(2))
    three = 3 * FormalMorphism.identity(A)
    assert mod2.additive_lift(three) == IntMatrix.identity(2) * 3
    assert extend_additive(mod2, three) == IntMatrix.identity(2)


def test_karoubi_objects_split_into_summands():
    constant = FormalMorphism.of(A, A, (0, 0))
    image = KaroubiObject(A, constant)
    complement = KaroubiObject(A, FormalMorphism.identity(A) - constant)
    free = FreeFunctor()
    first, second = extend_to_karoubi(free, image), extend_to_karoubi(free, complement)
    assert first.group.generators == 1
    assert second.group.generators == 1
    assert first.projection @ first.inclusion == IntMatrix.identity(1)
    assert first.inclusion @ first.projection == free.additive_lift(constant)
    mod3 = extend_to_karoubi(FreeTensorFunctor(FgAbGroup.cyclic(3)), image)
    assert mod3.group.canonical() == FgAbGroup.cyclic(3)


def test_karoubi_objects_need_idempotents():
    with pytest.raises(NotIdempotentError):
        KaroubiObject(A, FormalMorphism.of(A, A, (1, 0)))
    with pytest.raises(NotIdempotentError):
        KaroubiObject(A, 2 * FormalMorphism.identity(A))
    with pytest.raises(NotIdempotentError):
        KaroubiObject(A, FormalMorphism.of(A, B, (0, 0)))


def test_composite_of_basis_maps():
    f = FormalMorphism.of(A, B, (0, 2))
    g = FormalMorphism.of(B, C, (0, 0, 0))
    h = FormalMorphism.of(B, A, (1, 1, 0))
    assert formal_compose(h, f) == FormalMorphism.of(A, A, (1, 0))
    assert formal_compose(g, formal_add(f, f)) == 2 * FormalMorphism.of(A, C, (0, 0))
    with pytest.raises(DimensionMismatchError):
        formal_compose(f, g)
