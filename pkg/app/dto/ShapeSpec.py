from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator


class AugmentationSpec(BaseModel):
    target: List[str] = Field(..., description="Elements of the augmentation target")
    map: Dict[str, str] = Field(..., description="Vertex id -> target element")


class ShapeSpec(BaseModel):
    kind: Literal["presimplicial", "pseudocubical"]
    truncation: int = Field(..., ge=0, description="Hard dimension bound D")
    name: str = ""
    cells: Dict[str, List[str]] = Field(..., description="Dimension (as a string) -> cell ids")
    faces: Dict[str, List[Union[str, List[str]]]] = Field(
        default_factory=dict,
        description="Cell id -> [∂_0..∂_n] (presimplicial) or [[∂_1^0, ∂_1^1], ...] (pseudocubical)")
    degeneracies: Optional[Dict[str, List[str]]] = Field(
        None, description="Cell id of dimension n-1 -> [s_1, ..., s_n]")
    closure: bool = Field(False, description="Cells are the nondegenerate ones; build the degenerate closure")
    augmentation: Optional[AugmentationSpec] = None

    @model_validator(mode="after")
    def _check_layout(self):
        for key in self.cells:
            if not key.isdigit() or int(key) > self.truncation:
                raise ValueError(f"cell dimension {key!r} is not an integer in 0..{self.truncation}")
        if self.closure and self.kind != "pseudocubical":
            raise ValueError("closure only applies to pseudocubical shapes")
        if self.closure and self.degeneracies is not None:
            raise ValueError("closure builds the degeneracies; do not list them")
        return self

    def levels(self) -> List[List[str]]:
        return [list(self.cells.get(str(n), [])) for n in range(self.truncation + 1)]
