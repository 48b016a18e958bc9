import pytest

from app.chains.complexes import AugmentedComplex, ChainComplex
from app.chains.groups import PresentedGroup
from app.chains.maps import (ChainMap, compose, construct_homotopy, induces_equal_maps, lift_chain_map,
                             verify_chain_map, verify_homotopy)
from app.chains.splitting import split_idempotent, split_presented_idempotent
from app.core.errors import NotIdempotentError
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix

Z2 = PresentedGroup.from_fg(FgAbGroup.cyclic(2))


def _short_resolution() -> AugmentedComplex:
    return AugmentedComplex(ChainComplex.free([1, 1], [IntMatrix.from_rows([[2]])]), Z2, IntMatrix.identity(1))


def _long_resolution() -> AugmentedComplex:
    # Z <-[2 4]- Z^2 <-(2,-1)- Z, still a free resolution of Z/2
    c = ChainComplex.free([1, 2, 1], [IntMatrix.from_rows([[2, 4]]), IntMatrix.from_rows([[2], [-1]])])
    return AugmentedComplex(c, Z2, IntMatrix.identity(1))


def test_lifts_of_the_same_map_are_homotopic():
    source, target = _short_resolution(), _long_resolution()
    f = lift_chain_map(source, target, IntMatrix.identity(1))
    assert verify_chain_map(f)
    g = ChainMap(f.source, f.target, (IntMatrix.from_rows([[3]]), IntMatrix.from_rows([[3], [0]])))
    assert verify_chain_map(g)
    h = construct_homotopy(f, g)
    assert verify_homotopy(f, g, h)
    assert induces_equal_maps(f, g, 0)


def test_compose_with_identity():
    f = lift_chain_map(_short_resolution(), _long_resolution(), IntMatrix.identity(1))
    assert compose(ChainMap.identity(f.target), f).components == f.components
    assert (f - f).components == ChainMap.zero(f.source, f.target).components


def test_non_chain_map_is_rejected():
    c = _short_resolution().complex
    bad = ChainMap(c, c, (IntMatrix.identity(1), IntMatrix.zeros(1, 1)))
    assert not verify_chain_map(bad)


def test_split_presented_idempotent_in_both_bases():
    g = PresentedGroup.free(2)
    p = IntMatrix.from_rows([[1, 1], [0, 0]])
    for basis in ("kernel", "image"):
        summand = split_presented_idempotent(g, p, basis=basis)
        assert summand.group.generators == 1
        assert summand.projection @ summand.inclusion == IntMatrix.identity(1)
        assert summand.inclusion @ summand.projection == p


def test_split_rejects_non_idempotents():
    with pytest.raises(NotIdempotentError):
        split_presented_idempotent(PresentedGroup.free(1), IntMatrix.from_rows([[2]]))


def test_split_idempotent_of_a_complex():
    c = ChainComplex.free([2, 2], [IntMatrix.identity(2)])
    e = IntMatrix.diagonal([1, 0])
    splitting = split_idempotent(c, ChainMap(c, c, (e, e)))
    assert splitting.verify()
    assert splitting.sub.ranks() == [1, 1]
    assert splitting.complement.ranks() == [1, 1]
