"""Pydantic schemas for quivers and their AR quivers."""
from typing import List

from pydantic import BaseModel, Field

from app.features.quivers.domain.entities import ARGraph, Quiver, QuiverSpec, build_quiver


class QuiverSchema(BaseModel):
    """A Dynkin quiver: family, rank and one arrow [source, target] per edge."""
    family: str = Field(..., description="Dynkin family, 'A' or 'D'")
    rank: int = Field(..., ge=1, description="Number of vertices")
    arrows: List[List[int]] = Field(..., description="Arrows as [source, target] pairs")

    class Config:
        json_schema_extra = {
            "example": {"family": "D", "rank": 4, "arrows": [[3, 1], [3, 2], [4, 3]]}
        }

    def to_spec(self) -> QuiverSpec:
        return QuiverSpec(self.family, self.rank, tuple(tuple(a) for a in self.arrows))

    def to_domain(self) -> Quiver:
        return build_quiver(self.to_spec())

    @classmethod
    def from_domain(cls, quiver: Quiver) -> "QuiverSchema":
        return cls(family=quiver.family, rank=quiver.rank, arrows=[list(a) for a in quiver.arrows])


class IndecResponse(BaseModel):
    """One vertex of the AR quiver."""
    id: int
    dim: List[int]
    orbit: int
    shift: int
    projective: bool
    injective: bool


class ARQuiverResponse(BaseModel):
    """AR quiver: vertices in knitting order, irreducible maps and the translation."""
    quiver: QuiverSchema
    vertices: List[IndecResponse]
    arrows: List[List[int]]
    tau: List[List[int]]

    @classmethod
    def from_domain(cls, ar: ARGraph) -> "ARQuiverResponse":
        ids = {ind.dim: k for k, ind in enumerate(ar.indecs)}
        vertices = [
            IndecResponse(
                id=k,
                dim=list(ind.dim),
                orbit=ind.orbit,
                shift=ind.shift,
                projective=ind.is_projective,
                injective=ind.is_injective,
            )
            for k, ind in enumerate(ar.indecs)
        ]
        arrows = sorted([ids[a], ids[b]] for a, b in ar.graph.edges)
        tau = []
        for ind in ar.indecs:
            image = ar.tau(ind)
            if image is not None:
                tau.append([ids[ind.dim], ids[image.dim]])
        return cls(quiver=QuiverSchema.from_domain(ar.quiver), vertices=vertices, arrows=arrows, tau=tau)
