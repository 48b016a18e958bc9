from typing import List, Optional

from pydantic import BaseModel, Field

from app.dto.FgAbGroup import FgAbGroup


class DegreeComparison(BaseModel):
    degree: int
    simplicial: List[FgAbGroup] = Field(default_factory=list, description="One value per seed")
    cubical: List[FgAbGroup] = Field(default_factory=list, description="One value per seed")
    oracle: Optional[FgAbGroup] = Field(None, description="Tor_n(m, A), with A = Z for the identity functor")
    agree: bool = False


class ComparisonReport(BaseModel):
    module: str
    functor: str
    through: int
    seeds: List[int]
    degrees: List[DegreeComparison] = Field(default_factory=list)
    eilenberg_moore: bool = Field(False, description="F(K(P)) and K(F(P)) coincide for every seed")
    verdict: bool = False
