import pytest

from app.derive import (FpModule, additivity_check, compare_theorem, derived_cubical, derived_simplicial,
                        eilenberg_moore_check, karoubi_path_check, tor_oracle)
from app.dto.FgAbGroup import FgAbGroup
from app.functors.concreteFunctors.TensorFunctor import TensorFunctor

Z2, Z3, Z4 = FgAbGroup.cyclic(2), FgAbGroup.cyclic(3), FgAbGroup.cyclic(4)
ZERO = FgAbGroup.zero()


@pytest.mark.parametrize("module,a,tor0,tor1", [
    ("Z", Z2, Z2, ZERO),
    ("Z", Z4, Z4, ZERO),
    ("Z/2", Z2, Z2, Z2),
    ("Z/2", Z3, ZERO, ZERO),
    ("Z/4", Z2, Z2, Z2),
    ("Z/4", Z4, Z4, Z4),
    ("Z/6", Z3, Z3, Z3),
    ("Z/6", Z4, Z2, Z2),
    ("Z+Z/2", Z2, FgAbGroup(torsion=(2, 2)), Z2),
    ("Z+Z/2", Z4, FgAbGroup(torsion=(2, 4)), Z2),
])
def test_tor_oracle(module, a, tor0, tor1):
    m = FpModule.parse(module)
    assert tor_oracle(m, a, 0) == tor0
    assert tor_oracle(m, a, 1) == tor1
    assert tor_oracle(m, a, 2) == ZERO


@pytest.mark.parametrize("module,coefficients,n", [("Z/2", Z2, 0), ("Z/2", Z2, 1), ("Z/6", Z4, 1),
                                                   ("Z+Z/2", Z2, 1), ("Z/4", Z3, 1)])
def test_both_theories_match_tor(module, coefficients, n, fresh_resolutions):
    m = FpModule.parse(module)
    functor = TensorFunctor(coefficients)
    expected = tor_oracle(m, coefficients, n)
    assert derived_simplicial(m, functor, n) == expected
    assert derived_cubical(m, functor, n) == expected
    assert derived_simplicial(m, functor, n, seed=1) == expected


def test_identity_functor_has_no_higher_derived_functors(fresh_resolutions):
    m = FpModule.parse("Z/6")
    assert derived_simplicial(m, TensorFunctor(), 0) == FgAbGroup.cyclic(6)
    assert derived_simplicial(m, TensorFunctor(), 1).is_trivial()
    assert derived_cubical(m, TensorFunctor(), 1).is_trivial()


def test_comparison_report(fresh_resolutions):
    report = compare_theorem(FpModule.parse("Z/4"), TensorFunctor(Z2), 1, seeds=[0, 1])
    assert report.verdict
    assert report.eilenberg_moore
    assert report.functor == "tensor:Z/2"
    assert report.module == "Z/4"
    assert [row.degree for row in report.degrees] == [0, 1]
    assert [row.oracle for row in report.degrees] == [Z2, Z2]
    assert report.degrees[1].simplicial == [Z2, Z2]
    assert report.degrees[1].cubical == [Z2, Z2]


def test_comparison_paths(fresh_resolutions):
    m = FpModule.parse("Z/6")
    assert eilenberg_moore_check(m, Z4, 2, seed=1)
    assert eilenberg_moore_check(m, None, 2)
    assert karoubi_path_check(m, Z2, 0)
    assert karoubi_path_check(m, Z2, 1, seed=2)


def test_derived_functors_are_additive(fresh_resolutions):
    assert additivity_check(FpModule.parse("Z/2"), FpModule.parse("Z/4"), TensorFunctor(Z2), 1) == (True, True)
    assert additivity_check(FpModule.parse("Z"), FpModule.parse("Z/3"), TensorFunctor(Z3), 0) == (True, True)
