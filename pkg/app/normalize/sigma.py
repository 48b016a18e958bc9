import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from app.chains.complexes import ChainComplex
from app.chains.maps import ChainMap, verify_chain_map
from app.chains.splitting import Splitting, Summand, split_idempotent, split_presented_idempotent
from app.core.errors import MissingDegeneraciesError, NotChainMapError, NotIdempotentError
from app.exactla import IntMatrix
from app.normalize.builders import CubicalInput, as_pseudocubical_object, plain_C
from app.normalize.objects import PseudocubicalObject


@dataclass(frozen=True)
class SigmaEndomorphism:
    """σ_n = (1 - s_1 ∂_1^1)(1 - s_2 ∂_2^1) ... (1 - s_n ∂_n^1) on each level; σ_0 = 1."""
    components: Tuple[IntMatrix, ...]

    def as_chain_map(self, c: ChainComplex) -> ChainMap:
        return ChainMap(c, c, self.components)


def sigma_matrix(obj: PseudocubicalObject, n: int) -> IntMatrix:
    one = IntMatrix.identity(obj.levels[n].generators)
    sigma = one
    for i in range(1, n + 1):
        sigma = sigma @ (one - obj.degeneracy(n, i) @ obj.face(n, i, 1))
    return sigma


def sigma_endomorphism(x: CubicalInput) -> SigmaEndomorphism:
    """Build σ^X and verify σ² = σ and the chain-map property against C(X)."""
    obj = as_pseudocubical_object(x)
    if not obj.has_degeneracies:
        raise MissingDegeneraciesError(
            f"σ-normalization of {obj.name or 'this object'} needs degeneracies; use the kernel form instead")
    components = tuple(sigma_matrix(obj, n) for n in range(obj.truncation + 1))
    for n, s in enumerate(components):
        if not obj.levels[n].contains(s @ s - s):
            raise NotIdempotentError(f"σ_{n} ∘ σ_{n} differs from σ_{n}")
    c = plain_C(obj)
    if not verify_chain_map(ChainMap(c, c, components)):
        raise NotChainMapError("σ does not commute with the boundary of C(X)")
    return SigmaEndomorphism(components)


@dataclass(frozen=True)
class NormalizedComplex:
    """N(X) as a retract of C(X); splitting is kept when C(X) is free."""
    complex: ChainComplex
    inclusion: ChainMap
    projection: ChainMap
    splitting: Optional[Splitting] = None


def split_chain_idempotent(c: ChainComplex, p: ChainMap, basis: str = "kernel") -> NormalizedComplex:
    """
    Ker(1 - p) of an idempotent chain endomorphism of a complex of presented
    groups, with boundary π ∂ i. For free complexes and the kernel basis the
    full two-sided splitting is retained.
    """
    if c.is_free() and basis == "kernel":
        splitting = split_idempotent(c, p)
        return NormalizedComplex(splitting.sub, splitting.i2, splitting.pi2, splitting)
    parts: List[Summand] = [split_presented_idempotent(c.terms[n], pn, basis=basis)
                            for n, pn in enumerate(p.components)]
    sub = ChainComplex(tuple(s.group for s in parts),
                       tuple(parts[n - 1].projection @ c.boundary(n) @ parts[n].inclusion
                             for n in range(1, c.top + 1)))
    return NormalizedComplex(sub,
                             ChainMap(sub, c, tuple(s.inclusion for s in parts)),
                             ChainMap(c, sub, tuple(s.projection for s in parts)))


def normalized_sigma(x: CubicalInput, basis: str = "kernel") -> NormalizedComplex:
    obj = as_pseudocubical_object(x)
    sigma = sigma_endomorphism(obj)
    c = plain_C(obj)
    result = split_chain_idempotent(c, sigma.as_chain_map(c), basis=basis)
    logging.debug(f"[Normalize] σ-normalized ranks of {obj.name or 'object'}: {result.complex.ranks()}")
    return result
