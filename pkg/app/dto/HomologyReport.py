from typing import List, Optional

from pydantic import BaseModel, Field

from app.dto.FgAbGroup import FgAbGroup


class HomologyReport(BaseModel):
    H: List[FgAbGroup] = Field(default_factory=list, description="H_0 .. H_{certified_through}")
    certified_through: int = Field(..., description="Highest degree whose value does not depend on the truncation")
    top_upper_bound: Optional[FgAbGroup] = Field(None, description="H at the top degree, valid only if exact above it")
