import pytest

from app.core.errors import DegreeOutOfRangeError
from app.derive import (FpModule, build_presimplicial_resolution, build_pseudocubical_resolution,
                        presimplicial_resolution, verify_resolution)

MODULES = ["Z", "Z/2", "Z/6", "Z+Z/2"]


@pytest.mark.parametrize("module", MODULES)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_presimplicial_resolutions_are_exact(module, seed):
    m = FpModule.parse(module)
    res = build_presimplicial_resolution(m, 3, seed)
    assert res.depth == 3
    assert res.ranks()[0] == m.generators + seed % 2
    assert verify_resolution(res) is None


@pytest.mark.parametrize("module", MODULES)
@pytest.mark.parametrize("seed", [0, 1])
def test_pseudocubical_resolutions_are_exact(module, seed):
    m = FpModule.parse(module)
    res = build_pseudocubical_resolution(m, 2, seed)
    assert res.object.has_degeneracies
    assert res.ranks()[0] == m.generators + seed % 2
    assert verify_resolution(res) is None


def test_torsion_cover_doubles_in_degree_one():
    # the pullback of Z -> Z/2 along itself is all of Z^2 with x = y mod 2
    assert build_presimplicial_resolution(FpModule.parse("Z/2"), 1).ranks() == [1, 2]


def test_resolutions_need_positive_depth():
    with pytest.raises(DegreeOutOfRangeError):
        build_presimplicial_resolution(FpModule.parse("Z/2"), 0)
    with pytest.raises(DegreeOutOfRangeError):
        build_pseudocubical_resolution(FpModule.parse("Z/2"), -1)


def test_resolutions_are_cached_per_seed(fresh_resolutions):
    m = FpModule.parse("Z/4")
    first = presimplicial_resolution(m, 2, seed=1)
    assert presimplicial_resolution(m, 2, seed=1) is first
    assert presimplicial_resolution(m, 2, seed=2) is not first
    assert presimplicial_resolution(m, 2, seed=1, use_cache=False) is not first
