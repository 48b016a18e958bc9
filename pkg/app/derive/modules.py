from dataclasses import dataclass, field

from app.chains.groups import PresentedGroup
from app.dto.FgAbGroup import FgAbGroup


@dataclass(frozen=True)
class FpModule:
    """A finitely presented abelian group, ℤ^generators / relations."""
    presentation: PresentedGroup
    name: str = field(default="", compare=False)

    @classmethod
    def from_group(cls, group: FgAbGroup) -> "FpModule":
        return cls(PresentedGroup.from_fg(group), name=str(group))

    @classmethod
    def parse(cls, spec: str) -> "FpModule":
        return cls.from_group(FgAbGroup.parse(spec))

    @property
    def generators(self) -> int:
        return self.presentation.generators

    def canonical(self) -> FgAbGroup:
        return self.presentation.canonical()

    def direct_sum(self, other: "FpModule") -> "FpModule":
        return FpModule(self.presentation.direct_sum(other.presentation),
                        name=f"{self.name or self.canonical()}+{other.name or other.canonical()}")

    def __str__(self) -> str:
        return self.name or str(self.canonical())
