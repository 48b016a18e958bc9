from typing import List

from pydantic import BaseModel, Field


class ModelPair(BaseModel):
    name: str
    delta: str
    cube: str


class SmithGrid(BaseModel):
    samples: int = Field(1000, ge=1)
    max_dim: int = Field(6, ge=1)
    max_entry: int = Field(9, ge=1)
    seed: int = 0


class ContractibilityGrid(BaseModel):
    fiber_sizes: List[List[int]] = Field(..., description="Surjections up to isomorphism, as fiber sizes")
    simplicial_through: int = 2
    cubical_through: int = 2
    cubical_large_fiber_through: int = 1
    thorough_cubical_fibers: List[List[int]] = Field(
        default_factory=list, description="Fibers > 2 still checked through cubical_through by selftest --thorough")
    hom_domain_sizes: List[int] = Field(default_factory=lambda: [1, 2, 3])
    hom_through: int = 1
    hom_max_domain: int = Field(2, description="Largest |E| whose nerves are mapped into by Hom(q, -)")


class DerivedGrid(BaseModel):
    modules: List[str]
    coefficients: List[str]
    degrees: List[int]
    seeds: List[int]
    karoubi_modules: List[str] = Field(default_factory=list)
    additivity_pairs: List[List[str]] = Field(default_factory=list,
                                              description="Pairs (m, m') checked for L_n F(m + m')")


class Mutation(BaseModel):
    source: str = Field(..., description="Builtin model name, or cech-Δ:<fiber sizes> / cech-□:<fiber sizes>")
    degree: int = Field(..., ge=1)
    cell: str
    index: List[int] = Field(..., description="[i] for Δ faces, [i, eps] for □ faces")
    to: str


class AcceptanceConfig(BaseModel):
    smith: SmithGrid = SmithGrid()
    compare_pairs: List[ModelPair]
    cubical_models: List[str]
    mutations: List[Mutation] = Field(default_factory=list)
    naturality_coefficients: List[str]
    contractibility: ContractibilityGrid
    derived: DerivedGrid
