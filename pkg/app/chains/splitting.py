from dataclasses import dataclass
from typing import List, Optional

from app.chains.complexes import ChainComplex
from app.chains.groups import PresentedGroup
from app.chains.maps import ChainMap, verify_chain_map
from app.core.errors import DimensionMismatchError, InvalidComplexError, NotChainMapError, NotIdempotentError
from app.dto.Violation import Violation
from app.exactla import IntMatrix, image_basis, kernel_basis, solve_matrix


@dataclass(frozen=True)
class Summand:
    """Direct summand of a presented group cut out by an idempotent p: π i = 1 and i π = p."""
    group: PresentedGroup
    inclusion: IntMatrix
    projection: IntMatrix


def split_presented_idempotent(g: PresentedGroup, p: IntMatrix, basis: str = "kernel") -> Summand:
    """
    Split an integer idempotent p of a presented group.

    basis="kernel" takes the lattice Ker(1 - p); basis="image" takes a basis of
    the column lattice of p. Both lattices coincide, the chosen bases differ.
    """
    if p.shape != (g.generators, g.generators):
        raise DimensionMismatchError(f"endomorphism of shape {p.shape} on {g.generators} generators")
    if p @ p != p:
        raise NotIdempotentError("p ∘ p differs from p")
    if not g.is_morphism(p, g):
        raise NotChainMapError("the idempotent does not respect the relations")
    if basis == "kernel":
        inclusion = kernel_basis(IntMatrix.identity(g.generators) - p)
    elif basis == "image":
        inclusion = image_basis(p)
    else:
        raise ValueError(f"unknown splitting basis '{basis}'")
    projection = solve_matrix(inclusion, p)
    if projection is None:
        raise NotIdempotentError("the image of p is not spanned by the fixed lattice")
    return Summand(PresentedGroup(inclusion.cols, projection @ g.relations), inclusion, projection)


@dataclass(frozen=True)
class Splitting:
    """
    C = sub ⊕ complement for an idempotent chain endomorphism p of C.

    sub realises Ker(1 - p) through (i2, π2), complement realises Ker(p)
    through (i1, π1).
    """
    p: ChainMap
    sub: ChainComplex
    complement: ChainComplex
    i1: ChainMap
    pi1: ChainMap
    i2: ChainMap
    pi2: ChainMap

    def check(self) -> Optional[Violation]:
        for n, pn in enumerate(self.p.components):
            one = IntMatrix.identity(pn.rows)
            i1, pi1 = self.i1.components[n], self.pi1.components[n]
            i2, pi2 = self.i2.components[n], self.pi2.components[n]
            identities = [
                ("pi1 i1 = 1", pi1 @ i1 == IntMatrix.identity(i1.cols)),
                ("pi2 i2 = 1", pi2 @ i2 == IntMatrix.identity(i2.cols)),
                ("pi1 i2 = 0", (pi1 @ i2).is_zero()),
                ("pi2 i1 = 0", (pi2 @ i1).is_zero()),
                ("i1 pi1 = 1 - p", i1 @ pi1 == one - pn),
                ("i2 pi2 = p", i2 @ pi2 == pn),
            ]
            for name, holds in identities:
                if not holds:
                    return Violation(kind="splitting", degree=n, detail=name)
        for name, m in (("i1", self.i1), ("pi1", self.pi1), ("i2", self.i2), ("pi2", self.pi2)):
            if not verify_chain_map(m):
                return Violation(kind="splitting", detail=f"{name} is not a chain map")
        return None

    def verify(self) -> bool:
        return self.check() is None


def split_idempotent(c: ChainComplex, p: ChainMap) -> Splitting:
    if not c.is_free():
        raise InvalidComplexError("split_idempotent needs a complex of free groups")
    if p.source.ranks() != c.ranks() or p.target.ranks() != c.ranks() or p.top != c.top:
        raise DimensionMismatchError("p must be an endomorphism of the whole complex")
    for n, pn in enumerate(p.components):
        if pn @ pn != pn:
            raise NotIdempotentError(f"p_{n} ∘ p_{n} differs from p_{n}")
    if not verify_chain_map(p):
        raise NotChainMapError("p does not commute with the boundary")

    subs: List[Summand] = []
    comps: List[Summand] = []
    for n, pn in enumerate(p.components):
        g = c.terms[n]
        subs.append(split_presented_idempotent(g, pn))
        comps.append(split_presented_idempotent(g, IntMatrix.identity(g.generators) - pn))

    def assemble(parts: List[Summand]) -> ChainComplex:
        return ChainComplex(tuple(s.group for s in parts),
                            tuple(parts[n - 1].projection @ c.boundary(n) @ parts[n].inclusion
                                  for n in range(1, c.top + 1)))

    sub, complement = assemble(subs), assemble(comps)
    return Splitting(
        p=p, sub=sub, complement=complement,
        i1=ChainMap(complement, c, tuple(s.inclusion for s in comps)),
        pi1=ChainMap(c, complement, tuple(s.projection for s in comps)),
        i2=ChainMap(sub, c, tuple(s.inclusion for s in subs)),
        pi2=ChainMap(c, sub, tuple(s.projection for s in subs)),
    )
