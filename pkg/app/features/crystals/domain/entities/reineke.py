"""
Module classes, the posets P_i / P_i^check, antichain modules and the
statistics F_i, F_i^check that drive the crystal operators.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Mapping, Optional

import numpy as np

from app.features.quivers.domain.entities import ARGraph, DimVector, Quiver, build_ar_graph
from app.shared.exceptions import (
    AmbiguousSelectionError,
    ForeignModuleError,
    InternalInvariantError,
    RankMismatchError,
)


logger = logging.getLogger(__name__)

PLAIN = "plain"
CHECK = "check"


@dataclass(frozen=True)
class ModClass:
    """
    Isoclass of a module: multiplicities of indecomposables, keyed by root.

    `mult` is kept sorted by root with strictly positive multiplicities, so
    equal modules compare and hash equal.
    """
    quiver: Quiver
    mult: tuple[tuple[DimVector, int], ...] = ()

    @classmethod
    def zero(cls, quiver: Quiver) -> "ModClass":
        return cls(quiver, ())

    @classmethod
    def from_mapping(cls, quiver: Quiver, mapping: Mapping[DimVector, int]) -> "ModClass":
        """Validated constructor: every key must be a positive root of `quiver`."""
        ar = build_ar_graph(quiver)
        counts: dict[DimVector, int] = {}
        for root, m in mapping.items():
            root = tuple(int(x) for x in root)
            if len(root) != quiver.rank:
                raise RankMismatchError(f"Root {root} does not match rank {quiver.rank}")
            if root not in ar:
                raise ForeignModuleError(f"{root} is not a positive root of {quiver}")
            if m < 0:
                raise ForeignModuleError(f"Negative multiplicity {m} at {root}")
            if m:
                counts[root] = counts.get(root, 0) + int(m)
        return cls._from_counts(quiver, counts)

    @classmethod
    def _from_counts(cls, quiver: Quiver, counts: Mapping[DimVector, int]) -> "ModClass":
        return cls(quiver, tuple(sorted((r, m) for r, m in counts.items() if m)))

    def as_dict(self) -> dict[DimVector, int]:
        return dict(self.mult)

    def mu(self, root: Optional[DimVector]) -> int:
        if root is None:
            return 0
        return self._lookup.get(root, 0)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.quiver, self.mult))

    @cached_property
    def _lookup(self) -> dict[DimVector, int]:
        return dict(self.mult)

    @property
    def summands(self) -> tuple[DimVector, ...]:
        return tuple(r for r, _ in self.mult)

    @property
    def is_zero(self) -> bool:
        return not self.mult

    @cached_property
    def dim(self) -> DimVector:
        total = [0] * self.quiver.rank
        for root, m in self.mult:
            for k, d in enumerate(root):
                total[k] += m * d
        return tuple(total)

    def shifted(self, removed: Iterable[DimVector], added: Iterable[DimVector]) -> "ModClass":
        """M minus one copy of each `removed` root plus one copy of each `added` root."""
        counts = dict(self.mult)
        for root in removed:
            counts[root] = counts.get(root, 0) - 1
            if counts[root] < 0:
                raise InternalInvariantError(f"{root} is not a summand of {self}")
        for root in added:
            counts[root] = counts.get(root, 0) + 1
        return ModClass._from_counts(self.quiver, counts)

    def contains(self, roots: Iterable[DimVector]) -> bool:
        need: dict[DimVector, int] = {}
        for root in roots:
            need[root] = need.get(root, 0) + 1
        return all(self.mu(r) >= k for r, k in need.items())

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        parts = []
        for root, m in self.mult:
            label = "M(" + "".join(str(d) for d in root) + ")"
            parts.append(label if m == 1 else f"{label}^{m}")
        return " + ".join(parts)


@dataclass(frozen=True)
class AntichainModule:
    """A direct sum of pairwise Hom-orthogonal indecomposables of one poset."""
    summands: tuple[DimVector, ...]

    def __str__(self) -> str:
        return " + ".join("M(" + "".join(str(d) for d in r) + ")" for r in self.summands)


def _enumerate_antichains(
    elements: list[DimVector], comparable: set[tuple[DimVector, DimVector]]
) -> Iterator[tuple[DimVector, ...]]:
    # Depth-first extension by later elements keeps each subset unique.
    def extend(start: int, chosen: list[DimVector]) -> Iterator[tuple[DimVector, ...]]:
        for k in range(start, len(elements)):
            candidate = elements[k]
            if any((candidate, c) in comparable for c in chosen):
                continue
            chosen.append(candidate)
            yield tuple(chosen)
            yield from extend(k + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


class VertexTable:
    """
    Everything about vertex i that does not depend on the module M:
    the two posets, their antichains, and for each antichain the
    contribution lists of F_i / F_i^check and the removed summand U(V).

    The contribution lists are also stored as integer matrices over the
    indecomposables (column order given by `index`), so the statistics of
    all antichains at once are a single product with the multiplicity vector.
    """

    def __init__(self, ar: ARGraph, i: int, index: Mapping[DimVector, int]):
        self.ar = ar
        self.i = i
        self.index = index
        simple = ar.simple(i)
        self.plain = tuple(b.dim for b in ar if ar.hom_dim(b, simple))
        self.check = tuple(b.dim for b in ar if ar.hom_dim(simple, b))
        self.antichains = self._antichains(self.plain)
        self.check_antichains = self._antichains(self.check)

        tau = {b: _dim_or_none(ar.tau(b)) for b in self.plain}
        tau_inv = {b: _dim_or_none(ar.tau_inv(b)) for b in self.check}
        self.f_terms = {
            v: tuple((b, tau[b]) for b in self.plain if self._hom_into(b, v)) for v in self.antichains
        }
        self.f_check_terms = {
            v: tuple((b, tau_inv[b]) for b in self.check if self._hom_from(v, b))
            for v in self.check_antichains
        }
        self.removed = {v: self._removed_summand(v) for v in self.antichains}
        self.by_summands = {v.summands: v for v in self.antichains}

        self.f_matrix = self._term_matrix(self.antichains, self.f_terms)
        self.f_check_matrix = self._term_matrix(self.check_antichains, self.f_check_terms)
        # below[a, b]: antichain a lies strictly under antichain b
        self.below = np.array(
            [[self.leq(v, w) and not self.leq(w, v) for w in self.antichains] for v in self.antichains],
            dtype=bool,
        )
        self.below_check = np.array(
            [
                [self.leq_check(v, w) and not self.leq_check(w, v) for w in self.check_antichains]
                for v in self.check_antichains
            ],
            dtype=bool,
        )

    def _antichains(self, poset: tuple[DimVector, ...]) -> tuple[AntichainModule, ...]:
        comparable = {
            (a, b)
            for a in poset
            for b in poset
            if a != b and (self.ar.hom_dim(a, b) or self.ar.hom_dim(b, a))
        }
        found = [AntichainModule(tuple(sorted(c))) for c in _enumerate_antichains(list(poset), comparable)]
        return tuple(sorted(found, key=lambda v: v.summands))

    def _term_matrix(
        self,
        antichains: tuple[AntichainModule, ...],
        terms: Mapping[AntichainModule, tuple[tuple[DimVector, Optional[DimVector]], ...]],
    ) -> np.ndarray:
        matrix = np.zeros((len(antichains), len(self.index)), dtype=np.int64)
        for row, v in enumerate(antichains):
            for b, tb in terms[v]:
                matrix[row, self.index[b]] += 1
                if tb is not None:
                    matrix[row, self.index[tb]] -= 1
        return matrix

    def _hom_into(self, b: DimVector, v: AntichainModule) -> bool:
        return any(self.ar.hom_dim(b, c) for c in v.summands)

    def _hom_from(self, v: AntichainModule, b: DimVector) -> bool:
        return any(self.ar.hom_dim(c, b) for c in v.summands)

    def leq(self, v: AntichainModule, w: AntichainModule) -> bool:
        """V ⊴ W: every summand of V maps nonzero into W."""
        return all(self._hom_into(b, w) for b in v.summands)

    def leq_check(self, v: AntichainModule, w: AntichainModule) -> bool:
        """V ⊴^check W: V maps nonzero into every summand of W."""
        return all(self._hom_from(v, b) for b in w.summands)

    def _removed_summand(self, v: AntichainModule) -> tuple[Optional[DimVector], ...]:
        outside = [b for b in self.plain if not self._hom_into(b, v)]
        minimal = [
            b
            for b in outside
            if not any(c != b and self.ar.precedes(c, b) for c in outside)
        ]
        return tuple(_dim_or_none(self.ar.tau(b)) for b in sorted(minimal))


def _dim_or_none(ind) -> Optional[DimVector]:
    return None if ind is None else ind.dim


def _maximal_maximizers(scores: np.ndarray, below: np.ndarray) -> np.ndarray:
    """Indices attaining the maximum score that no other maximizer lies strictly above."""
    candidates = np.flatnonzero(scores == scores.max())
    dominated = below[np.ix_(candidates, candidates)].any(axis=1)
    return candidates[~dominated]


class ReinekeTables:
    """
    Per-quiver VertexTable objects and the statistics on top of them.

    All vertex tables are built up front, so one instance can be shared
    by the worker threads of crystal generation.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.ar = build_ar_graph(quiver)
        self.index: dict[DimVector, int] = {b.dim: k for k, b in enumerate(self.ar)}
        self._tables: dict[int, VertexTable] = {
            i: VertexTable(self.ar, i, self.index) for i in quiver.vertices
        }

    def table(self, i: int) -> VertexTable:
        self.quiver.check_vertex(i)
        return self._tables[i]

    def _own(self, m: ModClass) -> None:
        if m.quiver != self.quiver:
            raise ForeignModuleError(f"Module over {m.quiver} used with {self.quiver}")

    def vector(self, m: ModClass) -> np.ndarray:
        """Multiplicities of M as a vector over the indecomposables."""
        self._own(m)
        vec = np.zeros(len(self.index), dtype=np.int64)
        for root, k in m.mult:
            vec[self.index[root]] = k
        return vec

    def poset(self, i: int, variant: str = PLAIN) -> tuple[DimVector, ...]:
        table = self.table(i)
        return table.check if variant == CHECK else table.plain

    def antichain_modules(self, i: int, variant: str = PLAIN) -> tuple[AntichainModule, ...]:
        table = self.table(i)
        return table.check_antichains if variant == CHECK else table.antichains

    def f_stat(self, m: ModClass, v: AntichainModule, i: int) -> int:
        self._own(m)
        return sum(m.mu(b) - m.mu(tb) for b, tb in self.table(i).f_terms[v])

    def f_stat_check(self, m: ModClass, v: AntichainModule, i: int) -> int:
        self._own(m)
        return sum(m.mu(b) - m.mu(tb) for b, tb in self.table(i).f_check_terms[v])

    def select_vm_um(self, m: ModClass, i: int) -> tuple[AntichainModule, tuple[DimVector, ...], int]:
        """V_M, the summands of U_M, and the attained maximum of F_i."""
        table = self.table(i)
        scores = table.f_matrix @ self.vector(m)
        maximal = _maximal_maximizers(scores, table.below)
        if len(maximal) != 1:
            raise InternalInvariantError(
                f"No unique ⊴-maximal maximizer of F_{i} at {m}: "
                f"{[str(table.antichains[k]) for k in maximal]}"
            )
        v_m = table.antichains[int(maximal[0])]
        removed = table.removed[v_m]
        if any(r is None for r in removed) or not m.contains(removed):
            raise InternalInvariantError(f"U_M is not a summand of {m} for V_M = {v_m}")
        return v_m, removed, int(scores.max())  # type: ignore[return-value]

    def eps(self, m: ModClass, i: int) -> int:
        """Maximum of F_i over the antichains of P_i."""
        return int((self.table(i).f_matrix @ self.vector(m)).max())

    def eps_star(self, m: ModClass, i: int) -> int:
        best = int((self.table(i).f_check_matrix @ self.vector(m)).max())
        return max(0, best)

    def select_wn_en(self, n: ModClass, i: int) -> tuple[DimVector, Optional[DimVector]]:
        """
        W_N and E_N on a type A standard quiver.

        W_N is the ⊴^check-maximal maximizer of F_i^check; E_N is tau^{-1} of the
        maximal B in P_i^check with Hom(W_N, B) = 0, or None when no such B exists.
        """
        table = self.table(i)
        scores = table.f_check_matrix @ self.vector(n)
        maximal = _maximal_maximizers(scores, table.below_check)
        if len(maximal) != 1 or len(table.check_antichains[int(maximal[0])].summands) != 1:
            raise AmbiguousSelectionError(f"W_N is not a single indecomposable at vertex {i}")
        w_n = table.check_antichains[int(maximal[0])].summands[0]
        outside = [b for b in table.check if not self.ar.hom_dim(w_n, b)]
        top = [b for b in outside if not any(c != b and self.ar.precedes(b, c) for c in outside)]
        if not top:
            return w_n, None
        if len(top) > 1:
            raise AmbiguousSelectionError(f"E_N has {len(top)} maximal candidates at vertex {i}")
        return w_n, _dim_or_none(self.ar.tau_inv(top[0]))


@lru_cache(maxsize=64)
def reineke_tables(quiver: Quiver) -> ReinekeTables:
    return ReinekeTables(quiver)
