import re
from math import gcd
from typing import Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.core.errors import SpecParseError

_SUMMAND = re.compile(r"^(?:Z(?:\^(\d+))?|Z/(\d+)|0)$")


def _divisibility_chain(orders: Iterable[int]) -> List[int]:
    factors = [abs(o) for o in orders]
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            g = gcd(a, b)
            factors[i], factors[j] = g, (a * b // g if g else 0)
    return [f for f in factors if f > 1]


class FgAbGroup(BaseModel):
    """Finitely generated abelian group in canonical form: Z^rank + Z/t_1 + ... with t_1 | t_2 | ..."""
    model_config = ConfigDict(frozen=True)

    rank: int = Field(0, ge=0, description="Rank of the free part")
    torsion: Tuple[int, ...] = Field(default_factory=tuple, description="Invariant factors t_i >= 2, t_1 | t_2 | ...")

    @field_validator("torsion")
    @classmethod
    def _canonical_torsion(cls, torsion: Tuple[int, ...]) -> Tuple[int, ...]:
        for i, t in enumerate(torsion):
            if t < 2:
                raise ValueError(f"invariant factor {t} is below 2")
            if i and t % torsion[i - 1]:
                raise ValueError(f"invariant factors {list(torsion)} break the divisibility chain")
        return tuple(torsion)

    @classmethod
    def from_cyclic(cls, rank: int, orders: Iterable[int]) -> "FgAbGroup":
        """Canonicalise Z^rank + sum of Z/n_i (n_i = 0 counts as a free summand)."""
        orders = list(orders)
        extra_rank = sum(1 for o in orders if o == 0)
        return cls(rank=rank + extra_rank, torsion=tuple(_divisibility_chain(o for o in orders if o)))

    @classmethod
    def zero(cls) -> "FgAbGroup":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> "FgAbGroup":
        return cls.from_cyclic(0, [order])

    @classmethod
    def parse(cls, spec: str) -> "FgAbGroup":
        """Parse strings such as ``Z``, ``Z/6``, ``Z+Z/2``, ``Z^2`` or ``0``."""
        text = spec.replace(" ", "")
        if not text:
            raise SpecParseError("empty group spec")
        rank, orders = 0, []
        for part in text.split("+"):
            match = _SUMMAND.match(part)
            if not match:
                raise SpecParseError(f"cannot parse group summand '{part}' in '{spec}'")
            power, order = match.groups()
            if part == "0":
                continue
            if order is not None:
                if int(order) == 0:
                    rank += 1
                else:
                    orders.append(int(order))
            else:
                rank += int(power) if power is not None else 1
        return cls.from_cyclic(rank, orders)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def cyclic_orders(self) -> List[int]:
        """Orders of the cyclic summands, 0 standing for Z."""
        return [0] * self.rank + list(self.torsion)

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_cyclic(self.rank + other.rank, list(self.torsion) + list(other.torsion))

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return "+".join(parts) or "0"
