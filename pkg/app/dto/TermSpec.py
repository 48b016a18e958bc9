from typing import Optional

from pydantic import BaseModel, Field, model_validator

from app.chains.groups import PresentedGroup
from app.dto.MatrixSpec import MatrixSpec


class TermSpec(BaseModel):
    """One term ℤ^generators / (columns of relations); no relations means free."""
    generators: int = Field(..., ge=0, description="Number of generators")
    relations: Optional[MatrixSpec] = Field(None, description="generators x relators matrix")

    @model_validator(mode="after")
    def _check_rows(self):
        if self.relations is not None and self.relations.rows != self.generators:
            raise ValueError(f"relations have {self.relations.rows} rows for {self.generators} generators")
        return self

    def to_group(self) -> PresentedGroup:
        if self.relations is None:
            return PresentedGroup.free(self.generators)
        return PresentedGroup(self.generators, self.relations.to_matrix())

    @classmethod
    def from_group(cls, group: PresentedGroup) -> "TermSpec":
        if group.relations.cols == 0:
            return cls(generators=group.generators)
        return cls(generators=group.generators, relations=MatrixSpec.from_matrix(group.relations))
