"""
Auslander-Reiten quiver of a Dynkin quiver.

Indecomposables are produced by knitting: start from the projectives
P(i) and apply tau^{-1} (the inverse Coxeter transformation on
dimension vectors) until the orbit reaches an injective. Hom dimensions
are computed on the same pass through the mesh relations.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Union

import networkx as nx

from app.features.quivers.domain.entities.quiver import DimVector, Quiver
from app.features.quivers.domain.entities.roots import positive_roots
from app.shared.exceptions import (
    ForeignModuleError,
    InternalInvariantError,
    RankMismatchError,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Indec:
    """An indecomposable module, identified by its dimension vector."""
    dim: DimVector
    orbit: int = field(compare=False)
    shift: int = field(compare=False)
    is_projective: bool = field(compare=False)
    is_injective: bool = field(compare=False)
    quiver: Quiver = field(compare=False, repr=False)

    @property
    def proj_coordinate(self) -> tuple[int, int]:
        """(i, k) such that this module is tau^{-k} P(i)."""
        return (self.orbit, self.shift)

    @property
    def label(self) -> str:
        return "".join(str(d) for d in self.dim)

    def __str__(self) -> str:
        return f"M({self.label})"


ModuleRef = Union[Indec, DimVector]


def _path_vector(quiver: Quiver, i: int, forward: bool) -> DimVector:
    graph = quiver.digraph
    reach = nx.descendants(graph, i) if forward else nx.ancestors(graph, i)
    return tuple(1 if j == i or j in reach else 0 for j in quiver.vertices)


class ARGraph:
    """The AR quiver Gamma_Q with tau, hom/ext dimensions and the path order."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.graph = nx.DiGraph()
        self._indecs: list[Indec] = []
        self._by_dim: dict[DimVector, Indec] = {}
        self._by_coord: dict[tuple[int, int], Indec] = {}
        self._injective_dims = {
            i: _path_vector(quiver, i, forward=False) for i in quiver.vertices
        }
        self._knit()
        self._add_arrows()
        self._hom = self._knit_hom()
        self._reach = {
            ind.dim: frozenset(nx.descendants(self.graph, ind.dim)) for ind in self._indecs
        }
        logger.debug(f"AR quiver of {quiver}: {len(self._indecs)} indecomposables")

    # construction

    def _knit(self) -> None:
        quiver = self.quiver
        injectives = set(self._injective_dims.values())
        layer = {i: _path_vector(quiver, i, forward=True) for i in quiver.vertices}
        shift = 0
        while layer:
            following = {}
            for i in quiver.adapted_order():
                if i not in layer:
                    continue
                dim = layer[i]
                ind = Indec(
                    dim=dim,
                    orbit=i,
                    shift=shift,
                    is_projective=shift == 0,
                    is_injective=dim in injectives,
                    quiver=quiver,
                )
                if dim in self._by_dim:
                    raise InternalInvariantError(f"Dimension vector {dim} knitted twice")
                self._indecs.append(ind)
                self._by_dim[dim] = ind
                self._by_coord[(i, shift)] = ind
                if not ind.is_injective:
                    image = quiver.coxeter_inverse(dim)
                    if min(image) < 0:
                        raise InternalInvariantError(f"tau^-1 of non-injective {dim} is {image}")
                    following[i] = image
            layer = following
            shift += 1
        expected = len(positive_roots(quiver))
        if len(self._indecs) != expected:
            raise InternalInvariantError(
                f"Knitted {len(self._indecs)} indecomposables, expected {expected}"
            )

    def _add_arrows(self) -> None:
        for ind in self._indecs:
            self.graph.add_node(ind.dim, indec=ind)
        for a, b in self.quiver.arrows:
            for (i, k), ind in self._by_coord.items():
                if i == b and (a, k) in self._by_coord:
                    self.graph.add_edge(ind.dim, self._by_coord[(a, k)].dim)
                if i == a and (b, k + 1) in self._by_coord:
                    self.graph.add_edge(ind.dim, self._by_coord[(b, k + 1)].dim)

    def _knit_hom(self) -> dict[tuple[DimVector, DimVector], int]:
        hom: dict[tuple[DimVector, DimVector], int] = {}
        for x in self._indecs:
            if x.is_projective:
                for n in self._indecs:
                    hom[(x.dim, n.dim)] = n.dim[x.orbit - 1]
                continue
            prev = self._by_coord[(x.orbit, x.shift - 1)]
            middle = list(self.graph.successors(prev.dim))
            for n in self._indecs:
                value = (
                    sum(hom[(e, n.dim)] for e in middle)
                    - hom[(prev.dim, n.dim)]
                    + (1 if prev.dim == n.dim else 0)
                )
                if value < 0:
                    raise InternalInvariantError(f"Negative hom({x.dim}, {n.dim})")
                hom[(x.dim, n.dim)] = value
        return hom

    # lookup

    @property
    def indecs(self) -> tuple[Indec, ...]:
        """Indecomposables in knitting order (layer by layer, adapted order)."""
        return tuple(self._indecs)

    def __len__(self) -> int:
        return len(self._indecs)

    def __iter__(self) -> Iterator[Indec]:
        return iter(self._indecs)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Indec):
            return item.quiver == self.quiver and item.dim in self._by_dim
        return tuple(item) in self._by_dim  # type: ignore[arg-type]

    def get(self, ref: ModuleRef) -> Indec:
        if isinstance(ref, Indec):
            if ref.quiver != self.quiver:
                raise ForeignModuleError(f"{ref} belongs to {ref.quiver}, not {self.quiver}")
            return self._by_dim[ref.dim]
        dim = tuple(int(x) for x in ref)
        if len(dim) != self.quiver.rank:
            raise RankMismatchError(f"Vector {dim} does not match rank {self.quiver.rank}")
        try:
            return self._by_dim[dim]
        except KeyError:
            raise ForeignModuleError(f"{dim} is not a positive root of {self.quiver}") from None

    def at(self, i: int, k: int) -> Optional[Indec]:
        return self._by_coord.get((i, k))

    def projective(self, i: int) -> Indec:
        self.quiver.check_vertex(i)
        return self._by_coord[(i, 0)]

    def injective(self, i: int) -> Indec:
        self.quiver.check_vertex(i)
        return self._by_dim[self._injective_dims[i]]

    def simple(self, i: int) -> Indec:
        return self._by_dim[self.quiver.unit(i)]

    # AR structure

    def tau(self, ref: ModuleRef) -> Optional[Indec]:
        """AR translate; None for projectives."""
        ind = self.get(ref)
        return self._by_coord.get((ind.orbit, ind.shift - 1))

    def tau_inv(self, ref: ModuleRef) -> Optional[Indec]:
        """Inverse AR translate; None for injectives."""
        ind = self.get(ref)
        return self._by_coord.get((ind.orbit, ind.shift + 1))

    def mesh_middle(self, ref: ModuleRef) -> tuple[Indec, ...]:
        """Middle terms E of the mesh M -> E -> tau^{-1} M."""
        ind = self.get(ref)
        return tuple(self._by_dim[d] for d in sorted(self.graph.successors(ind.dim)))

    def orbit_end(self, ref: ModuleRef) -> Indec:
        """Last module of the tau^{-1}-orbit through M (always injective)."""
        ind = self.get(ref)
        while not ind.is_injective:
            ind = self._by_coord[(ind.orbit, ind.shift + 1)]
        return ind

    def nakayama(self) -> dict[Indec, Indec]:
        """Nakayama permutation P(i) -> I(i)."""
        return {self.projective(i): self.injective(i) for i in self.quiver.vertices}

    def hom_dim(self, m: ModuleRef, n: ModuleRef) -> int:
        return self._hom[(self.get(m).dim, self.get(n).dim)]

    def ext_dim(self, m: ModuleRef, n: ModuleRef) -> int:
        """dim Ext^1(M, N) = dim Hom(N, tau M) (Auslander-Reiten formula)."""
        tau_m = self.tau(m)
        if tau_m is None:
            return 0
        return self.hom_dim(n, tau_m)

    def precedes(self, n: ModuleRef, m: ModuleRef) -> bool:
        """True when N = M or there is a path N -> ... -> M in Gamma_Q."""
        a, b = self.get(n).dim, self.get(m).dim
        return a == b or b in self._reach[a]

    def successors_closure(self, ref: ModuleRef) -> frozenset[DimVector]:
        return self._reach[self.get(ref).dim]

    def dualize(self, ref: ModuleRef) -> Indec:
        """The module with the same dimension vector over the opposite quiver."""
        ind = self.get(ref)
        return build_ar_graph(self.quiver.opposite()).get(ind.dim)


@lru_cache(maxsize=64)
def build_ar_graph(quiver: Quiver) -> ARGraph:
    return ARGraph(quiver)


def indecomposables(quiver: Quiver) -> tuple[Indec, ...]:
    return build_ar_graph(quiver).indecs


def type_a_nakayama(n: int, r: int, i: int) -> tuple[int, int]:
    """Standard type A_n: nu(r, i) = (r + i - 1, n + 1 - i) in (shift, vertex) coordinates."""
    return (r + i - 1, n + 1 - i)
