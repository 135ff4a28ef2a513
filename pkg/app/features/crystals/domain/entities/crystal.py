"""
Crystal structure on isoclasses of modules over a special quiver.

f_i adds the antichain module V_M and removes U_M; e_i is found as the
unique preimage of f_i among the candidates obtained by removing an
antichain of summands of M. The highest-weight crystal B(lambda) is cut
out of B(infinity) by the starred string lengths eps_i^*.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from app.features.crystals.domain.entities.graph import CrystalGraph, CrystalNode
from app.features.crystals.domain.entities.reineke import ModClass, ReinekeTables, reineke_tables
from app.features.quivers.domain.entities import Quiver, build_ar_graph
from app.shared.exceptions import (
    CrystalMembershipError,
    ForeignModuleError,
    InternalInvariantError,
    NodeLimitExceeded,
    NotSpecialError,
    RankMismatchError,
)


logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 1_000_000


def is_cospecial(quiver: Quiver) -> bool:
    """Hom(S(i), M) has dimension at most one for every vertex i and indecomposable M."""
    ar = build_ar_graph(quiver)
    return all(ar.hom_dim(ar.simple(i), m) <= 1 for i in quiver.vertices for m in ar)


def is_special(quiver: Quiver) -> bool:
    """Q is special when its opposite quiver is cospecial."""
    return is_cospecial(quiver.opposite())


class ModuleCrystal:
    """Crystal operators on ModClass values over one special quiver."""

    def __init__(self, quiver: Quiver):
        if not is_special(quiver):
            raise NotSpecialError(f"{quiver} is not special; crystal operators are undefined")
        self.quiver = quiver
        self.tables: ReinekeTables = reineke_tables(quiver)
        self.cospecial = is_cospecial(quiver)

    def _own(self, m: ModClass) -> None:
        if m.quiver != self.quiver:
            raise ForeignModuleError(f"Module over {m.quiver} used with {self.quiver}")

    def check_weight(self, lam: Optional[Sequence[int]]) -> tuple[int, ...]:
        if lam is None:
            return (0,) * self.quiver.rank
        if len(lam) != self.quiver.rank:
            raise RankMismatchError(f"Weight {tuple(lam)} does not match rank {self.quiver.rank}")
        if min(lam) < 0:
            raise CrystalMembershipError(f"Weight {tuple(lam)} is not dominant")
        return tuple(int(x) for x in lam)

    def apply_f(self, m: ModClass, i: int) -> ModClass:
        self._own(m)
        v_m, removed, _ = self.tables.select_vm_um(m, i)
        return m.shifted(removed, v_m.summands)

    def apply_e(self, m: ModClass, i: int) -> Optional[ModClass]:
        """Preimage of f_i, or None when eps_i(M) = 0."""
        self._own(m)
        if self.eps(m, i) == 0:
            return None
        table = self.tables.table(i)
        for v in table.antichains:
            if not m.contains(v.summands):
                continue
            removed = table.removed[v]
            if any(r is None for r in removed):
                continue
            candidate = m.shifted(v.summands, removed)
            if self.apply_f(candidate, i) == m:
                return candidate
        raise InternalInvariantError(f"No preimage of {m} under f_{i} although eps_{i} > 0")

    def eps(self, m: ModClass, i: int) -> int:
        self._own(m)
        return self.tables.eps(m, i)

    def weight(self, m: ModClass, lam: Optional[Sequence[int]] = None) -> tuple[int, ...]:
        """Pairing vector (wt(h_1), ..., wt(h_n)) = lambda - C dim M."""
        self._own(m)
        shifted = np.asarray(self.check_weight(lam), dtype=np.int64) - self.quiver.cartan @ np.asarray(
            m.dim, dtype=np.int64
        )
        return tuple(int(x) for x in shifted)

    def phi(self, m: ModClass, i: int, lam: Optional[Sequence[int]] = None) -> int:
        return self.eps(m, i) + self.weight(m, lam)[i - 1]

    def eps_star(self, m: ModClass, i: int) -> int:
        self._own(m)
        return self.tables.eps_star(m, i)

    def eps_star_vector(self, m: ModClass) -> tuple[int, ...]:
        return tuple(self.eps_star(m, i) for i in self.quiver.vertices)

    def in_highest_weight_crystal(self, m: ModClass, lam: Sequence[int]) -> bool:
        if not self.cospecial:
            raise NotSpecialError(f"{self.quiver} is not cospecial; B(lambda) is undefined")
        lam = self.check_weight(lam)
        return all(self.eps_star(m, i) <= lam[i - 1] for i in self.quiver.vertices)

    def _require_member(self, m: ModClass, lam: Sequence[int]) -> None:
        if not self.in_highest_weight_crystal(m, lam):
            raise CrystalMembershipError(f"{m} is not in B({tuple(lam)})")

    def apply_f_lambda(self, m: ModClass, i: int, lam: Sequence[int]) -> Optional[ModClass]:
        self._require_member(m, lam)
        image = self.apply_f(m, i)
        return image if self.in_highest_weight_crystal(image, lam) else None

    def apply_e_lambda(self, m: ModClass, i: int, lam: Sequence[int]) -> Optional[ModClass]:
        self._require_member(m, lam)
        return self.apply_e(m, i)

    def node(self, m: ModClass, lam: Sequence[int]) -> CrystalNode:
        weight = self.weight(m, lam)
        eps = tuple(self.eps(m, i) for i in self.quiver.vertices)
        phi = tuple(e + w for e, w in zip(eps, weight))
        return CrystalNode(key=m, weight=weight, eps=eps, phi=phi)


@lru_cache(maxsize=64)
def module_crystal(quiver: Quiver) -> ModuleCrystal:
    return ModuleCrystal(quiver)


def canonical_key(m: ModClass) -> tuple:
    """Sort key for nodes: total dimension first, then the sorted root list."""
    return (sum(m.dim), m.mult)


def generate_crystal(
    quiver: Quiver,
    lam: Sequence[int],
    max_nodes: int = DEFAULT_MAX_NODES,
    threads: int = 1,
) -> CrystalGraph:
    """
    Closure of the zero module under the operators f_i^lambda.

    The breadth-first frontier is expanded in a thread pool; each new layer
    is sorted canonically before ids are assigned, so the result does not
    depend on the number of workers. Membership in B(lambda) is memoized per
    module.
    """
    crystal = module_crystal(quiver)
    lam = tuple(int(x) for x in lam)
    crystal.check_weight(lam)
    zero = ModClass.zero(quiver)
    colors = tuple(quiver.vertices)

    @lru_cache(maxsize=None)
    def member(m: ModClass) -> bool:
        return crystal.in_highest_weight_crystal(m, lam)

    def expand(m: ModClass) -> list[tuple[int, ModClass]]:
        out = []
        for i in colors:
            image = crystal.apply_f(m, i)
            if member(image):
                out.append((i, image))
        return out

    order: list[ModClass] = [zero]
    ids: dict[ModClass, int] = {zero: 0}
    raw_edges: list[tuple[ModClass, int, ModClass]] = []
    frontier = [zero]
    layer = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        while frontier:
            results = list(pool.map(expand, frontier))
            fresh: set[ModClass] = set()
            for src, images in zip(frontier, results):
                for i, dst in images:
                    raw_edges.append((src, i, dst))
                    if dst not in ids:
                        fresh.add(dst)
            frontier = sorted(fresh, key=canonical_key)
            for m in frontier:
                ids[m] = len(order)
                order.append(m)
            if len(order) > max_nodes:
                raise NodeLimitExceeded(
                    f"B({lam}) on {quiver} exceeds the node limit of {max_nodes}", limit=max_nodes
                )
            layer += 1
            logger.debug(f"Layer {layer}: {len(frontier)} new nodes, {len(order)} total")

    nodes = [crystal.node(m, lam) for m in order]
    edges = sorted((ids[s], i, ids[d]) for s, i, d in raw_edges)
    logger.info(f"Generated B({lam}) on {quiver}: {len(nodes)} nodes, {len(edges)} edges")
    return CrystalGraph(
        colors=colors,
        cartan=tuple(tuple(int(x) for x in row) for row in quiver.cartan),
        nodes=nodes,
        edges=edges,
        lam=lam,
        highest_weight=0,
    )
