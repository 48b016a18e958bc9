import pytest

from app.chains.complexes import homology_report
from app.core.errors import NonFunctorialError, UnsupportedFunctorError
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix
from app.functors.AdditiveFunctorSpec import AdditiveFunctorSpec
from app.functors.concreteFunctors.FreeFunctor import FreeFunctor
from app.functors.concreteFunctors.FreeTensorFunctor import FreeTensorFunctor
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor
from app.normalize import PseudocubicalObject, normalized_kernel, unnormalized_K
from app.services.FunctorService import FunctorService
from app.shapes import builtin_model

SETS = [(), ("x",), ("x", "y")]


def test_free_functors_are_functorial():
    assert FreeFunctor().check_functoriality(SETS) is None
    assert FreeTensorFunctor(FgAbGroup.parse("Z+Z/2")).check_functoriality(SETS) is None


def test_tabulated_functor_matches_its_rule():
    table = AdditiveFunctorSpec.tabulate(FreeFunctor(), SETS)
    assert table.on_map(("x", "y"), ("x",), (0, 0)) == IntMatrix.from_rows([[1, 1]])
    with pytest.raises(UnsupportedFunctorError):
        table.on_object(("x", "y", "z"))


def test_broken_table_is_refused():
    table = AdditiveFunctorSpec.tabulate(FreeFunctor(), SETS)
    maps = dict(table.maps)
    maps[(("x",), ("x",), (0,))] = IntMatrix.from_rows([[2]])
    with pytest.raises(NonFunctorialError):
        AdditiveFunctorSpec(table.objects, maps)


def test_free_functor_on_a_shape_is_the_chain_object():
    torus = builtin_model("torus-□")
    assert FreeFunctor().on_shape(torus) == PseudocubicalObject.from_shape(torus)


def test_coefficients_through_the_set_functor():
    klein = builtin_model("klein-Δ")
    mod2 = FreeTensorFunctor(FgAbGroup.cyclic(2)).on_shape(klein)
    assert homology_report(unnormalized_K(mod2)).H == [FgAbGroup.cyclic(2), FgAbGroup(torsion=(2, 2)),
                                                         FgAbGroup.cyclic(2)]


def test_tensor_functor_on_objects():
    torus = PseudocubicalObject.from_shape(builtin_model("torus-□"))
    identity, mod3 = TensorFunctor(), TensorFunctor(FgAbGroup.cyclic(3))
    assert identity.tag == "id"
    assert identity.apply(torus) is torus
    assert mod3.tag == "tensor:Z/3"
    assert homology_report(normalized_kernel(mod3.apply(torus))).H == [
        FgAbGroup.cyclic(3), FgAbGroup(torsion=(3, 3)), FgAbGroup.cyclic(3)]


def test_functor_lookup_by_tag():
    assert isinstance(FunctorService.get_set_functor("free"), FreeFunctor)
    assert FunctorService.get_set_functor("free-mod:5").tag == "free-mod:5"
    assert FunctorService.get_set_functor("free-tensor:Z+Z/2").coefficients == FgAbGroup.parse("Z+Z/2")
    assert FunctorService.get_endofunctor("id").is_identity
    assert FunctorService.get_endofunctor("tensor:Z/4").coefficients == FgAbGroup.cyclic(4)
    for tag in ("free-mod:1", "free-mod:x", "tensor:", "tensor:Q", "sym2", "id:Z"):
        with pytest.raises(UnsupportedFunctorError):
            if tag.startswith("free"):
                FunctorService.get_set_functor(tag)
            else:
                FunctorService.get_endofunctor(tag)
