"""Dynkin quivers of types A and D with their bilinear forms and reflections."""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import networkx as nx
import numpy as np

from app.shared.exceptions import (
    QuiverValidationError,
    RankMismatchError,
    UnknownVertexError,
)


logger = logging.getLogger(__name__)

FAMILIES = ("A", "D")

DimVector = tuple[int, ...]
Arrow = tuple[int, int]


def dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    """
    Undirected edges of the Dynkin graph as (smaller, larger) pairs.

    Type D numbering: the fork tips are 1 and 2, the branch vertex is 3,
    the tail is 4..n.
    """
    if family == "A":
        if rank < 1:
            raise QuiverValidationError(f"Type A needs rank >= 1, got {rank}")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise QuiverValidationError(f"Type D needs rank >= 4, got {rank}")
        return [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank)]
    raise QuiverValidationError(f"Unknown Dynkin family: {family!r}")


@dataclass(frozen=True)
class QuiverSpec:
    """Unvalidated quiver description: family, rank and one arrow per edge."""
    family: str
    rank: int
    arrows: tuple[Arrow, ...]


@dataclass(frozen=True)
class Quiver:
    """
    A validated Dynkin quiver of type A_n or D_n.

    Instances are immutable and hashable; derived data (Cartan matrix,
    adapted order, ...) is computed lazily and cached on the instance.
    """
    family: str
    rank: int
    arrows: tuple[Arrow, ...]

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows)
        return graph

    @cached_property
    def sinks(self) -> tuple[int, ...]:
        return tuple(i for i in self.vertices if self.digraph.out_degree(i) == 0)

    @cached_property
    def sources(self) -> tuple[int, ...]:
        return tuple(i for i in self.vertices if self.digraph.in_degree(i) == 0)

    @cached_property
    def cartan(self) -> np.ndarray:
        """Cartan matrix C of the underlying Dynkin diagram."""
        matrix = 2 * np.identity(self.rank, dtype=np.int64)
        for a, b in dynkin_edges(self.family, self.rank):
            matrix[a - 1, b - 1] = -1
            matrix[b - 1, a - 1] = -1
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def _euler_matrix(self) -> np.ndarray:
        matrix = np.identity(self.rank, dtype=np.int64)
        for src, dst in self.arrows:
            matrix[src - 1, dst - 1] -= 1
        matrix.setflags(write=False)
        return matrix

    def check_vertex(self, i: int) -> None:
        if i not in self.vertices:
            raise UnknownVertexError(f"Vertex {i} is not in 1..{self.rank}")

    def _as_array(self, v: Sequence[int]) -> np.ndarray:
        if len(v) != self.rank:
            raise RankMismatchError(
                f"Vector of length {len(v)} does not match rank {self.rank}"
            )
        return np.asarray(v, dtype=np.int64)

    def unit(self, i: int) -> DimVector:
        """Dimension vector e_i of the simple module S(i)."""
        self.check_vertex(i)
        return tuple(1 if j == i else 0 for j in self.vertices)

    def euler_form(self, v: Sequence[int], w: Sequence[int]) -> int:
        """<v, w> = sum_j v_j w_j - sum over arrows h of v_out(h) w_in(h)."""
        return int(self._as_array(v) @ self._euler_matrix @ self._as_array(w))

    def sym_euler(self, v: Sequence[int], w: Sequence[int]) -> int:
        """Symmetrized Euler form (v, w)_R = v^t C w."""
        return int(self._as_array(v) @ self.cartan @ self._as_array(w))

    def adapted_order(self) -> tuple[int, ...]:
        return self._adapted_order

    @cached_property
    def _adapted_order(self) -> tuple[int, ...]:
        # Greedy sink removal, smallest index first.
        arrows = set(self.arrows)
        remaining = set(self.vertices)
        order = []
        while remaining:
            sinks = [i for i in sorted(remaining) if not any(src == i for src, _ in arrows)]
            i = sinks[0]
            order.append(i)
            remaining.remove(i)
            arrows = {(dst, src) if i in (src, dst) else (src, dst) for src, dst in arrows}
        return tuple(order)

    def reflect(self, i: int, v: Sequence[int]) -> DimVector:
        """r_i(v) = v - (v, e_i)_R e_i; entries may become negative."""
        self.check_vertex(i)
        array = self._as_array(v)
        pairing = int(self.cartan[i - 1] @ array)
        result = array.copy()
        result[i - 1] -= pairing
        return tuple(int(x) for x in result)

    def coxeter(self, v: Sequence[int]) -> DimVector:
        """r_{i_n} ... r_{i_1}(v) for the adapted order; tau on dimension vectors."""
        result = tuple(v)
        for i in self.adapted_order():
            result = self.reflect(i, result)
        return result

    def coxeter_inverse(self, v: Sequence[int]) -> DimVector:
        """r_{i_1} ... r_{i_n}(v); tau^{-1} on dimension vectors."""
        result = tuple(v)
        for i in reversed(self.adapted_order()):
            result = self.reflect(i, result)
        return result

    def opposite(self) -> "Quiver":
        """Q* with every arrow reversed."""
        return Quiver(self.family, self.rank, tuple(sorted((b, a) for a, b in self.arrows)))

    @property
    def is_standard_orientation(self) -> bool:
        return self.arrows == standard_quiver(self.family, self.rank).arrows

    def to_spec(self) -> QuiverSpec:
        return QuiverSpec(self.family, self.rank, self.arrows)

    def __str__(self) -> str:
        arrows = ",".join(f"{a}>{b}" for a, b in self.arrows)
        return f"{self.family}{self.rank}[{arrows}]"


def build_quiver(spec: QuiverSpec) -> Quiver:
    """
    Validate a quiver specification.

    Raises:
        QuiverValidationError: unknown family, non-adjacent arrow, an edge
            oriented twice or an edge left without orientation.
    """
    if spec.family not in FAMILIES:
        raise QuiverValidationError(f"Unknown Dynkin family: {spec.family!r}")
    edges = set(dynkin_edges(spec.family, spec.rank))
    seen: set[tuple[int, int]] = set()
    for arrow in spec.arrows:
        if len(arrow) != 2:
            raise QuiverValidationError(f"Malformed arrow {arrow!r}")
        src, dst = int(arrow[0]), int(arrow[1])
        if src not in range(1, spec.rank + 1) or dst not in range(1, spec.rank + 1):
            raise QuiverValidationError(f"Arrow {src}->{dst} leaves the vertex set 1..{spec.rank}")
        edge = (min(src, dst), max(src, dst))
        if edge not in edges:
            raise QuiverValidationError(
                f"Arrow {src}->{dst} does not lie on an edge of {spec.family}{spec.rank}"
            )
        if edge in seen:
            raise QuiverValidationError(f"Edge {edge[0]}-{edge[1]} is oriented more than once")
        seen.add(edge)
    missing = sorted(edges - seen)
    if missing:
        raise QuiverValidationError(f"Edges without orientation: {missing}")
    arrows = tuple(sorted((int(a), int(b)) for a, b in spec.arrows))
    logger.debug(f"Built quiver {spec.family}{spec.rank} with arrows {arrows}")
    return Quiver(spec.family, spec.rank, arrows)


def standard_quiver(family: str, rank: int) -> Quiver:
    """All arrows point toward the smaller index: n -> n-1 -> ... -> 1 in type A."""
    arrows = tuple(sorted((b, a) for a, b in dynkin_edges(family, rank)))
    return Quiver(family, rank, arrows)


def all_orientations(family: str, rank: int) -> Iterator[Quiver]:
    """Every orientation of the Dynkin graph, in a fixed order."""
    edges = dynkin_edges(family, rank)
    for flips in itertools.product((False, True), repeat=len(edges)):
        arrows = tuple(sorted((a, b) if flip else (b, a) for (a, b), flip in zip(edges, flips)))
        yield Quiver(family, rank, arrows)
