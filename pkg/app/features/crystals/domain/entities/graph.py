"""
Finite crystal graphs: nodes with weights and string statistics, colored
edges for the lowering operators, plus the generic operations on them
(axiom check, tensor product, isomorphism, decomposition).
"""
import logging
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from app.shared.exceptions import GraphIsomorphismError


logger = logging.getLogger(__name__)

NEG_INF = -math.inf

Stat = float  # int-valued except for the -inf of T_lambda


@dataclass(frozen=True)
class CrystalNode:
    """A crystal element; eps/phi are listed in the order of the graph's colors."""
    key: Hashable
    weight: tuple[int, ...]
    eps: tuple[Stat, ...]
    phi: tuple[Stat, ...]


@dataclass
class CrystalGraph:
    """
    Crystal graph with nodes in canonical order (node id = list index).

    `weight` holds the classical pairing vector (wt(h_1), ..., wt(h_n));
    the affine color 0 pairs through wt(h_0) = -sum_i wt(h_i).
    """
    colors: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    nodes: list[CrystalNode]
    edges: list[tuple[int, int, int]]
    lam: Optional[tuple[int, ...]] = None
    affine: bool = False
    highest_weight: Optional[int] = 0
    _f: dict[tuple[int, int], int] = field(default_factory=dict, init=False, repr=False)
    _e: dict[tuple[int, int], int] = field(default_factory=dict, init=False, repr=False)
    _keys: dict[Hashable, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        self._index_edges()

    def _index_edges(self) -> None:
        self._f = {(src, color): dst for src, color, dst in self.edges}
        self._e = {(dst, color): src for src, color, dst in self.edges}
        self._keys = {node.key: k for k, node in enumerate(self.nodes)}

    def __len__(self) -> int:
        return len(self.nodes)

    def f(self, node: int, color: int) -> Optional[int]:
        return self._f.get((node, color))

    def e(self, node: int, color: int) -> Optional[int]:
        return self._e.get((node, color))

    def color_index(self, color: int) -> int:
        return self.colors.index(color)

    def pairing(self, weight: Sequence[int], color: int) -> int:
        if color == 0:
            return -sum(weight)
        return weight[color - 1]

    def root_shift(self, color: int) -> tuple[int, ...]:
        """Pairing vector of alpha_color (classical part for color 0)."""
        matrix = np.asarray(self.cartan, dtype=np.int64)
        if color == 0:
            return tuple(int(x) for x in -matrix.sum(axis=1))
        return tuple(int(x) for x in matrix[:, color - 1])

    def index_of(self, key: Hashable) -> int:
        return self._keys[key]


def check_axioms(graph: CrystalGraph) -> list[str]:
    """Return every violated crystal axiom as a human-readable line; empty when clean."""
    violations: list[str] = []
    out_seen: Counter = Counter((src, color) for src, color, _ in graph.edges)
    in_seen: Counter = Counter((dst, color) for _, color, dst in graph.edges)
    for (node, color), count in sorted(out_seen.items()):
        if count > 1:
            violations.append(f"node {node} has {count} outgoing {color}-edges")
    for (node, color), count in sorted(in_seen.items()):
        if count > 1:
            violations.append(f"node {node} has {count} incoming {color}-edges")

    for src, color, dst in graph.edges:
        if color not in graph.colors:
            violations.append(f"edge {src}->{dst} has unknown color {color}")
            continue
        c = graph.color_index(color)
        a, b = graph.nodes[src], graph.nodes[dst]
        shift = graph.root_shift(color)
        expected = tuple(w - s for w, s in zip(a.weight, shift))
        if b.weight != expected:
            violations.append(f"edge {src}-{color}->{dst}: weight {b.weight} != {expected}")
        if b.eps[c] != a.eps[c] + 1:
            violations.append(f"edge {src}-{color}->{dst}: eps does not increase by one")
        if b.phi[c] != a.phi[c] - 1:
            violations.append(f"edge {src}-{color}->{dst}: phi does not decrease by one")

    for k, node in enumerate(graph.nodes):
        for c, color in enumerate(graph.colors):
            eps, phi = node.eps[c], node.phi[c]
            if eps == NEG_INF or phi == NEG_INF:
                continue
            if phi - eps != graph.pairing(node.weight, color):
                violations.append(f"node {k}: phi_{color} - eps_{color} != wt(h_{color})")
            up = _string_length(graph, k, color, graph.e)
            down = _string_length(graph, k, color, graph.f)
            if up != eps:
                violations.append(f"node {k}: eps_{color} = {eps} but the e-string has length {up}")
            if down != phi:
                violations.append(f"node {k}: phi_{color} = {phi} but the f-string has length {down}")
    return violations


def _string_length(graph: CrystalGraph, node: int, color: int, step) -> int:
    length, current = 0, step(node, color)
    while current is not None:
        length += 1
        if length > len(graph):
            break
        current = step(current, color)
    return length


def t_lambda(cartan: Sequence[Sequence[int]], lam: Sequence[int]) -> CrystalGraph:
    """The one-element crystal T_lambda: eps = phi = -inf, no edges."""
    rank = len(lam)
    colors = tuple(range(1, rank + 1))
    node = CrystalNode(
        key=("t", tuple(lam)),
        weight=tuple(lam),
        eps=(NEG_INF,) * rank,
        phi=(NEG_INF,) * rank,
    )
    return CrystalGraph(
        colors=colors,
        cartan=tuple(tuple(row) for row in cartan),
        nodes=[node],
        edges=[],
        lam=tuple(lam),
        highest_weight=None,
    )


def tensor(left: CrystalGraph, right: CrystalGraph) -> CrystalGraph:
    """
    Tensor product b1 ⊗ b2 by the signature rule:

        eps_i(b1 ⊗ b2) = max(eps_i(b1), eps_i(b2) - wt(b1)(h_i))
        phi_i(b1 ⊗ b2) = max(phi_i(b2), phi_i(b1) + wt(b2)(h_i))
        f_i(b1 ⊗ b2) = f_i b1 ⊗ b2 if phi_i(b1) > eps_i(b2) else b1 ⊗ f_i b2
    """
    if left.colors != right.colors:
        raise GraphIsomorphismError("Tensor factors have different color sets")
    width = len(right.nodes)
    nodes: list[CrystalNode] = []
    for a in left.nodes:
        for b in right.nodes:
            eps, phi = [], []
            for c, color in enumerate(left.colors):
                eps.append(max(a.eps[c], b.eps[c] - left.pairing(a.weight, color)))
                phi.append(max(b.phi[c], a.phi[c] + left.pairing(b.weight, color)))
            weight = tuple(x + y for x, y in zip(a.weight, b.weight))
            nodes.append(CrystalNode((a.key, b.key), weight, tuple(eps), tuple(phi)))

    edges = []
    for ia, a in enumerate(left.nodes):
        for ib, b in enumerate(right.nodes):
            for c, color in enumerate(left.colors):
                if a.phi[c] > b.eps[c]:
                    target = left.f(ia, color)
                    dst = None if target is None else target * width + ib
                else:
                    target = right.f(ib, color)
                    dst = None if target is None else ia * width + target
                if dst is not None:
                    edges.append((ia * width + ib, color, dst))
    lam = None
    if left.lam is not None and right.lam is not None:
        lam = tuple(x + y for x, y in zip(left.lam, right.lam))
    return CrystalGraph(
        colors=left.colors,
        cartan=left.cartan,
        nodes=nodes,
        edges=sorted(edges),
        lam=lam,
        affine=left.affine,
        highest_weight=None,
    )


def _as_nx(graph: CrystalGraph) -> nx.MultiDiGraph:
    result = nx.MultiDiGraph()
    result.add_nodes_from(range(len(graph)))
    for src, color, dst in graph.edges:
        result.add_edge(src, dst, color=color)
    return result


def connected_components(graph: CrystalGraph) -> list[list[int]]:
    """Node ids of each connected component, components ordered by smallest id."""
    parts = [sorted(c) for c in nx.weakly_connected_components(_as_nx(graph))]
    return sorted(parts, key=lambda part: part[0])


def highest_weight_nodes(graph: CrystalGraph) -> list[int]:
    """Nodes without incoming edges of any color."""
    targets = {dst for _, _, dst in graph.edges}
    return [k for k in range(len(graph)) if k not in targets]


def subgraph(graph: CrystalGraph, node_ids: Iterable[int]) -> CrystalGraph:
    ids = sorted(node_ids)
    renumber = {old: new for new, old in enumerate(ids)}
    edges = [
        (renumber[s], c, renumber[d])
        for s, c, d in graph.edges
        if s in renumber and d in renumber
    ]
    sources = [renumber[k] for k in highest_weight_nodes(graph) if k in renumber]
    return CrystalGraph(
        colors=graph.colors,
        cartan=graph.cartan,
        nodes=[graph.nodes[k] for k in ids],
        edges=sorted(edges),
        lam=graph.nodes[ids[sources[0]]].weight if len(sources) == 1 else None,
        affine=graph.affine,
        highest_weight=sources[0] if len(sources) == 1 else None,
    )


def _unique_source(graph: CrystalGraph) -> int:
    sources = highest_weight_nodes(graph)
    if len(sources) != 1:
        raise GraphIsomorphismError(
            f"graph_iso needs a unique source node, found {len(sources)}; "
            "split the graph with connected_components first"
        )
    return sources[0]


def graph_iso(first: CrystalGraph, second: CrystalGraph) -> Optional[dict[int, int]]:
    """
    Color- and weight-preserving isomorphism found by walking both graphs
    in lockstep from their sources; None when the graphs differ.
    """
    if first.colors != second.colors or len(first) != len(second):
        return None
    if len(first.edges) != len(second.edges):
        return None
    a0, b0 = _unique_source(first), _unique_source(second)
    mapping = {a0: b0}
    used = {b0}
    queue = deque([a0])
    while queue:
        a = queue.popleft()
        b = mapping[a]
        if first.nodes[a].weight != second.nodes[b].weight:
            return None
        for color in first.colors:
            fa, fb = first.f(a, color), second.f(b, color)
            if (fa is None) != (fb is None):
                return None
            if fa is None:
                continue
            if fa in mapping:
                if mapping[fa] != fb:
                    return None
                continue
            if fb in used:
                return None
            mapping[fa] = fb
            used.add(fb)
            queue.append(fa)
    if len(mapping) != len(first):
        return None
    logger.debug(f"graph_iso matched {len(mapping)} nodes")
    return mapping


def character(graph: CrystalGraph) -> Counter:
    """Multiset of weights (the formal character)."""
    return Counter(node.weight for node in graph.nodes)


def to_plain(value: Any) -> Any:
    """Stat values as JSON-friendly numbers (None for -inf)."""
    if isinstance(value, float) and math.isinf(value):
        return None
    return int(value)
