from typing import List, Optional

from pydantic import BaseModel, Field


class Violation(BaseModel):
    """First failure found by a validator; validators return None when everything holds."""
    kind: str = Field(..., description="Which identity or condition failed, e.g. 'face-face'")
    degree: Optional[int] = Field(None, description="Dimension / degree where it failed")
    cell: Optional[str] = Field(None, description="Offending cell id, if any")
    indices: List[int] = Field(default_factory=list, description="Face/degeneracy indices (i, j, alpha, eps ...)")
    detail: str = ""

    def describe(self) -> str:
        where = f" at degree {self.degree}" if self.degree is not None else ""
        cell = f" cell {self.cell}" if self.cell is not None else ""
        idx = f" indices {self.indices}" if self.indices else ""
        return f"{self.kind}{where}{cell}{idx}: {self.detail}".rstrip(": ")
