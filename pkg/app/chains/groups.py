from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Union

import numpy as np

from app.core.errors import DimensionMismatchError
from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix, cokernel_invariants, solve_matrix


@dataclass(frozen=True)
class PresentedGroup:
    """
    Abelian group Z^generators / (column lattice of relations).

    relations has one row per generator and one column per relator. Free groups
    carry a relations matrix with zero columns.
    """
    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.generators:
            raise DimensionMismatchError(
                f"relations have {self.relations.rows} rows for {self.generators} generators")

    # -- constructors -------------------------------------------------------
    @classmethod
    def free(cls, n: int) -> "PresentedGroup":
        return cls(n, IntMatrix.zeros(n, 0))

    @classmethod
    def zero(cls) -> "PresentedGroup":
        return cls.free(0)

    @classmethod
    def from_fg(cls, group: FgAbGroup) -> "PresentedGroup":
        """Canonical presentation: one generator per cyclic summand, one relator per torsion summand."""
        n = group.rank + len(group.torsion)
        rel = np.zeros((n, len(group.torsion)), dtype=object)
        for k, t in enumerate(group.torsion):
            rel[group.rank + k, k] = t
        return cls(n, IntMatrix._wrap(rel))

    # -- queries ------------------------------------------------------------
    @property
    def is_free(self) -> bool:
        return self.relations.cols == 0 or self.relations.is_zero()

    def canonical(self) -> FgAbGroup:
        return cokernel_invariants(self.relations)

    def contains(self, m: IntMatrix) -> bool:
        """True when every column of m lies in the relation lattice (is zero in the group)."""
        if m.rows != self.generators:
            raise DimensionMismatchError(f"{m.rows}-row matrix checked against {self.generators} generators")
        if m.is_zero():
            return True
        if self.relations.cols == 0:
            return False
        return solve_matrix(self.relations, m) is not None

    def is_morphism(self, m: IntMatrix, target: "PresentedGroup") -> bool:
        if m.shape != (target.generators, self.generators):
            raise DimensionMismatchError(
                f"map of shape {m.shape} between {self.generators} and {target.generators} generators")
        return target.contains(m @ self.relations)

    # -- constructions ------------------------------------------------------
    def tensor(self, other: Union["PresentedGroup", FgAbGroup]) -> "PresentedGroup":
        """self ⊗ other; generator (i, k) sits at index i * other.generators + k."""
        if isinstance(other, FgAbGroup):
            other = PresentedGroup.from_fg(other)
        h = other.generators
        rel = IntMatrix.hstack([self.relations.kron(IntMatrix.identity(h)),
                                IntMatrix.identity(self.generators).kron(other.relations)],
                               rows=self.generators * h)
        return PresentedGroup(self.generators * h, rel)

    def direct_sum(self, other: "PresentedGroup") -> "PresentedGroup":
        return PresentedGroup(self.generators + other.generators,
                              IntMatrix.block_diagonal([self.relations, other.relations]))

    def row_moduli(self) -> Optional[List[int]]:
        """Per-generator modulus when every relator is a multiple of one generator, else None."""
        moduli = [0] * self.generators
        for col in self.relations.columns():
            support = [i for i, x in enumerate(col) if x]
            if len(support) > 1:
                return None
            if support:
                i = support[0]
                moduli[i] = gcd(moduli[i], abs(col[i]))
        return moduli

    def reduce(self, m: IntMatrix) -> IntMatrix:
        """Entrywise reduction of a map into this group, for monomial presentations."""
        moduli = self.row_moduli()
        if moduli is None or not any(moduli):
            return m
        arr = m.array()
        for i, mod in enumerate(moduli):
            if mod:
                arr[i, :] = arr[i, :] % mod
        return IntMatrix._wrap(arr)

    def __repr__(self) -> str:
        return f"PresentedGroup({self.generators} gens, {self.relations.cols} rels)"
