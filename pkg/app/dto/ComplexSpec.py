from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from app.chains.complexes import AugmentedComplex, ChainComplex
from app.dto.MatrixSpec import MatrixSpec
from app.dto.TermSpec import TermSpec


class AugmentationSpec(BaseModel):
    """ε = ∂_0 : C_0 -> target."""
    target: TermSpec
    matrix: MatrixSpec


class ComplexSpec(BaseModel):
    """C_0 <- C_1 <- ... <- C_D as terms, boundaries ∂_1..∂_D and an optional augmentation."""
    kind: Literal["complex"] = "complex"
    terms: List[TermSpec] = Field(..., min_length=1, description="C_0 .. C_D")
    boundaries: List[MatrixSpec] = Field(default_factory=list, description="∂_1 .. ∂_D")
    augmentation: Optional[AugmentationSpec] = None

    @model_validator(mode="after")
    def _check_counts(self):
        if len(self.boundaries) != len(self.terms) - 1:
            raise ValueError(f"{len(self.terms)} terms need {len(self.terms) - 1} boundaries")
        return self

    def to_complex(self) -> Union[ChainComplex, AugmentedComplex]:
        """Shape mismatches surface as DimensionMismatchError from the complex itself."""
        complex_ = ChainComplex(tuple(t.to_group() for t in self.terms),
                                tuple(m.to_matrix() for m in self.boundaries))
        if self.augmentation is None:
            return complex_
        return AugmentedComplex(complex_, self.augmentation.target.to_group(), self.augmentation.matrix.to_matrix())

    @classmethod
    def from_complex(cls, c: Union[ChainComplex, AugmentedComplex]) -> "ComplexSpec":
        augmentation = None
        if isinstance(c, AugmentedComplex):
            augmentation = AugmentationSpec(target=TermSpec.from_group(c.target),
                                            matrix=MatrixSpec.from_matrix(c.augmentation))
            c = c.complex
        return cls(terms=[TermSpec.from_group(t) for t in c.terms],
                   boundaries=[MatrixSpec.from_matrix(d) for d in c.boundaries], augmentation=augmentation)
