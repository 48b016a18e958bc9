import pytest

from app.core.errors import UnsupportedFunctorError
from app.dto.FgAbGroup import FgAbGroup
from app.services.DerivedFunctorService import DerivedFunctorService

Z2 = FgAbGroup.cyclic(2)


def test_oracle_method():
    values, verdicts, details = DerivedFunctorService.run("Z/2", "tensor:Z/2", 2, method="oracle")
    assert values == [Z2, Z2, FgAbGroup.zero()]
    assert verdicts == {}
    assert details == {"module": "Z/2", "functor": "tensor:Z/2", "method": "oracle"}


@pytest.mark.parametrize("method", ["simplicial", "cubical"])
def test_single_resolution_methods(method, fresh_resolutions):
    values, _, details = DerivedFunctorService.run("Z/6", "tensor:Z/4", 1, method=method, seed=1)
    assert values == [Z2, Z2]
    assert details["seed"] == 1


def test_comparing_every_method(fresh_resolutions):
    values, verdicts, details = DerivedFunctorService.run("Z+Z/2", "tensor:Z/2", 1, seed=0)
    assert values == [FgAbGroup(torsion=(2, 2)), Z2]
    assert verdicts == {"agree": True, "eilenberg_moore": True}
    assert details["comparison"]["seeds"] == [0]
    assert details["comparison"]["verdict"] is True


def test_identity_functor_defaults_to_integer_coefficients():
    values, _, details = DerivedFunctorService.run("Z/3", "id", 1, method="oracle")
    assert values == [FgAbGroup.cyclic(3), FgAbGroup.zero()]
    assert details["functor"] == "id"


def test_bad_requests():
    with pytest.raises(ValueError):
        DerivedFunctorService.run("Z/2", "tensor:Z/2", 1, method="spectral")
    with pytest.raises(ValueError):
        DerivedFunctorService.run("Z/2", "tensor:Z/2", -1)
    with pytest.raises(UnsupportedFunctorError):
        DerivedFunctorService.run("Z/2", "sym2", 1, method="oracle")
