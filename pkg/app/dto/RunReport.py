from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from app.dto.FgAbGroup import FgAbGroup
from app.dto.Violation import Violation


class RunReport(BaseModel):
    command: List[str] = Field(..., description="Echo of the command line")
    H: Optional[List[FgAbGroup]] = Field(None, description="Per-degree results, H_0 first")
    certified_through: Optional[int] = None
    top_upper_bound: Optional[FgAbGroup] = None
    verdicts: Dict[str, bool] = Field(default_factory=dict, description="Named pass/fail verdicts")
    details: Dict[str, Any] = Field(default_factory=dict)
    violation: Optional[Violation] = None
    passed: bool = True
    wall_time: Optional[float] = Field(None, description="Seconds; only reported with --timing")
