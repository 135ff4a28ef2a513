"""Pydantic schemas for module classes and crystal graphs."""
import math
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.features.crystals.domain.entities import CrystalGraph, CrystalNode, ModClass, NEG_INF
from app.features.quivers.presentation.schemas import QuiverSchema


class RootMultiplicity(BaseModel):
    """Multiplicity of the indecomposable with dimension vector `root`."""
    root: List[int]
    m: int = Field(..., ge=1)


class ModClassSchema(BaseModel):
    """Isoclass of a module; roots are listed in lexicographic order."""
    quiver: QuiverSchema
    mult: List[RootMultiplicity] = Field(default_factory=list)

    class Config:
        json_schema_extra = {
            "example": {
                "quiver": {"family": "A", "rank": 2, "arrows": [[2, 1]]},
                "mult": [{"root": [1, 1], "m": 1}],
            }
        }

    def to_domain(self) -> ModClass:
        quiver = self.quiver.to_domain()
        counts: dict[tuple[int, ...], int] = {}
        for item in self.mult:
            root = tuple(item.root)
            counts[root] = counts.get(root, 0) + item.m
        return ModClass.from_mapping(quiver, counts)

    @classmethod
    def from_domain(cls, module: ModClass) -> "ModClassSchema":
        return cls(
            quiver=QuiverSchema.from_domain(module.quiver),
            mult=[RootMultiplicity(root=list(r), m=m) for r, m in module.mult],
        )


def _stat_out(value: float) -> Optional[int]:
    return None if math.isinf(value) else int(value)


def _stat_in(value: Optional[int]) -> float:
    return NEG_INF if value is None else value


class CrystalNodeSchema(BaseModel):
    """A node; module crystals carry `mult`, tableau crystals carry `rows`."""
    id: int
    mult: Optional[List[RootMultiplicity]] = None
    rows: Optional[List[List[int]]] = None
    wt: List[int]
    eps: List[Optional[int]]
    phi: List[Optional[int]]


class CrystalEdgeSchema(BaseModel):
    src: int
    color: int
    dst: int


class CrystalGraphSchema(BaseModel):
    """Crystal graph JSON; eps/phi entries of null stand for -infinity."""
    model_config = ConfigDict(populate_by_name=True)

    lam: Optional[List[int]] = Field(None, alias="lambda")
    cartan: List[List[int]]
    colors: List[int]
    affine: bool = False
    nodes: List[CrystalNodeSchema]
    edges: List[CrystalEdgeSchema]

    @classmethod
    def from_domain(cls, graph: CrystalGraph) -> "CrystalGraphSchema":
        nodes = []
        for k, node in enumerate(graph.nodes):
            key = node.key
            mult = rows = None
            if isinstance(key, ModClass):
                mult = [RootMultiplicity(root=list(r), m=m) for r, m in key.mult]
            elif hasattr(key, "rows"):
                rows = [list(row) for row in key.rows]
            nodes.append(
                CrystalNodeSchema(
                    id=k,
                    mult=mult,
                    rows=rows,
                    wt=list(node.weight),
                    eps=[_stat_out(x) for x in node.eps],
                    phi=[_stat_out(x) for x in node.phi],
                )
            )
        return cls(
            lam=list(graph.lam) if graph.lam is not None else None,
            cartan=[list(row) for row in graph.cartan],
            colors=list(graph.colors),
            affine=graph.affine,
            nodes=nodes,
            edges=[CrystalEdgeSchema(src=s, color=c, dst=d) for s, c, d in graph.edges],
        )

    def to_domain(self) -> CrystalGraph:
        """Rebuild a graph for checking; node keys are the node ids."""
        ordered = sorted(self.nodes, key=lambda n: n.id)
        renumber = {n.id: k for k, n in enumerate(ordered)}
        nodes = [
            CrystalNode(
                key=n.id,
                weight=tuple(n.wt),
                eps=tuple(_stat_in(x) for x in n.eps),
                phi=tuple(_stat_in(x) for x in n.phi),
            )
            for n in ordered
        ]
        edges = [(renumber[e.src], e.color, renumber[e.dst]) for e in self.edges]
        return CrystalGraph(
            colors=tuple(self.colors),
            cartan=tuple(tuple(row) for row in self.cartan),
            nodes=nodes,
            edges=sorted(edges),
            lam=tuple(self.lam) if self.lam is not None else None,
            affine=self.affine,
            highest_weight=None,
        )

    def dump(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class GenerateCrystalRequest(BaseModel):
    """Request for the graph of B(lambda)."""
    quiver: QuiverSchema
    hw: List[int] = Field(..., description="Highest weight as pairings (lambda(h_1), ..., lambda(h_n))")
    max_nodes: Optional[int] = Field(None, ge=1, description="Node cap; defaults to MAX_NODES")

    class Config:
        json_schema_extra = {
            "example": {
                "quiver": {"family": "A", "rank": 2, "arrows": [[2, 1]]},
                "hw": [1, 0],
            }
        }


class EpsStarResponse(BaseModel):
    eps_star: List[int]


class VerifyResponse(BaseModel):
    clean: bool
    violations: List[str]
