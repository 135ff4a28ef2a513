"""
Promotion on B(m w_j) for the type A_n quiver n -> n-1 -> ... -> 1.

A module M is first extended to a module over A_{n+1} (its extended
array: row r counts the letters of row r of the matching tableau), then
the unit at M(j, n+1) is pushed out repeatedly with sh_j and the hole is
carried up to row 1 by the operators T_{j-1}, ..., T_1.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from app.features.crystals.domain.entities import (
    CrystalGraph,
    CrystalNode,
    ModClass,
    generate_crystal,
    module_crystal,
    reineke_tables,
)
from app.features.quivers.domain.entities import DimVector, Quiver, standard_quiver
from app.shared.exceptions import (
    CrystalMembershipError,
    InternalInvariantError,
    UnsupportedOrientationError,
)


logger = logging.getLogger(__name__)


def interval_root(rank: int, a: int, b: int) -> DimVector:
    """Dimension vector of the interval module M(a, b) on A_rank."""
    return tuple(1 if a <= k <= b else 0 for k in range(1, rank + 1))


def root_interval(root: DimVector) -> tuple[int, int]:
    support = [k + 1 for k, d in enumerate(root) if d]
    return support[0], support[-1]


@dataclass(frozen=True)
class ExtArray:
    """
    Extended array of a module: rows[r-1][s-r] = mu_{r,s} for
    r <= s <= n+1-j+r; the diagonal entry mu_{r,r} holds k_r.
    """
    n: int
    j: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def columns(self, r: int) -> range:
        return range(r, self.n + 2 - self.j + r)

    def entry(self, r: int, s: int) -> int:
        if not 1 <= r <= self.j or s not in self.columns(r):
            return 0
        return self.rows[r - 1][s - r]

    def row_sum(self, r: int) -> int:
        return sum(self.rows[r - 1])

    @property
    def hole_rows(self) -> tuple[int, ...]:
        """Rows whose sum differs from m."""
        return tuple(r for r in range(1, self.j + 1) if self.row_sum(r) != self.m)

    def to_module(self, quiver: Quiver) -> ModClass:
        counts = {
            interval_root(self.n + 1, r, s): self.entry(r, s)
            for r in range(1, self.j + 1)
            for s in self.columns(r)
        }
        return ModClass._from_counts(quiver, counts)

    @classmethod
    def from_module(cls, n: int, j: int, m: int, module: ModClass) -> "ExtArray":
        rows = [[0] * (n + 2 - j) for _ in range(j)]
        for root, mult in module.mult:
            r, s = root_interval(root)
            if not 1 <= r <= j or not r <= s <= n + 1 - j + r:
                raise InternalInvariantError(f"Extended module leaves the strip at M({r},{s})")
            rows[r - 1][s - r] = mult
        return cls(n, j, m, tuple(tuple(row) for row in rows))

    def __str__(self) -> str:
        lines = []
        for r in range(1, self.j + 1):
            lines.append("  " * (r - 1) + " ".join(str(x) for x in self.rows[r - 1]))
        return "\n".join(lines)


class PromotionEngine:
    """pr, T_i, sh_j and the affine operators for one (n, j, m)."""

    def __init__(self, n: int, j: int, m: int):
        if n < 1 or not 1 <= j <= n or m < 1:
            raise UnsupportedOrientationError(f"Need n >= 1, 1 <= j <= n, m >= 1; got {n}, {j}, {m}")
        self.n, self.j, self.m = n, j, m
        self.quiver = standard_quiver("A", n)
        self.ext_quiver = standard_quiver("A", n + 1)
        self.crystal = module_crystal(self.quiver)
        self.ext_tables = reineke_tables(self.ext_quiver)
        self.lam = tuple(m if k == j else 0 for k in range(1, n + 1))

    def _own(self, module: ModClass) -> None:
        if module.quiver != self.quiver:
            raise UnsupportedOrientationError(
                f"Promotion is defined on {self.quiver} only, got a module over {module.quiver}"
            )

    def require_member(self, module: ModClass) -> None:
        self._own(module)
        if not self.crystal.in_highest_weight_crystal(module, self.lam):
            raise CrystalMembershipError(f"{module} is not in B({self.lam})")

    def mu(self, module: ModClass, r: int, s: int) -> int:
        return module.mu(interval_root(self.n, r, s))

    def k(self, module: ModClass, r: int) -> int:
        """k_r = m - dim Hom(S(r), M)."""
        return self.m - sum(self.mu(module, r, s) for s in range(r, self.n + 1))

    def to_ext_array(self, module: ModClass) -> ExtArray:
        self._own(module)
        n, j = self.n, self.j
        for root, _ in module.mult:
            r, s = root_interval(root)
            if r > j or s > n - j + r:
                raise CrystalMembershipError(f"{module} has the summand M({r},{s}) outside the strip")
        rows = []
        for r in range(1, j + 1):
            k_r = self.k(module, r)
            if k_r < 0:
                raise CrystalMembershipError(f"{module} has k_{r} = {k_r} < 0")
            rows.append((k_r,) + tuple(self.mu(module, r, s - 1) for s in range(r + 1, n + 2 - j + r)))
        return ExtArray(n, j, self.m, tuple(rows))

    def from_ext_array(self, array: ExtArray) -> ModClass:
        counts = {
            interval_root(self.n, r, s - 1): array.entry(r, s)
            for r in range(1, array.j + 1)
            for s in array.columns(r)
            if s != r
        }
        return ModClass._from_counts(self.quiver, counts)

    def apply_sh(self, array: ExtArray) -> ExtArray:
        """Remove one copy of M(j, n+1) if present."""
        if array.entry(self.j, self.n + 1) == 0:
            return array
        return self._moved(array, (self.j, self.n + 1), None)

    def apply_T(self, i: int, array: ExtArray) -> ExtArray:
        """Replace one copy of W_N by E_N; unchanged when W_N is not a summand."""
        module = array.to_module(self.ext_quiver)
        w_n, e_n = self.ext_tables.select_wn_en(module, i)
        if module.mu(w_n) == 0:
            return array
        w = root_interval(w_n)
        if e_n is None:
            if i < self.j - 1:
                logger.warning(f"T_{i}: pure removal of M{w} with i < j-1 in {array.rows}")
            return self._moved(array, w, None)
        return self._moved(array, w, root_interval(e_n))

    def _moved(self, array: ExtArray, source: tuple[int, int], target: Optional[tuple[int, int]]) -> ExtArray:
        rows = [list(row) for row in array.rows]
        r, s = source
        rows[r - 1][s - r] -= 1
        if target is not None:
            r, s = target
            rows[r - 1][s - r] += 1
        return ExtArray(array.n, array.j, array.m, tuple(tuple(row) for row in rows))

    def promote_trace(self, module: ModClass) -> list[ExtArray]:
        """The extended array and every state after each sh_j / T_i step."""
        self.require_member(module)
        state = self.to_ext_array(module)
        trace = [state]
        for _ in range(state.entry(self.j, self.n + 1)):
            state = self.apply_sh(state)
            trace.append(state)
            for i in range(self.j - 1, 0, -1):
                state = self.apply_T(i, state)
                trace.append(state)
        return trace

    def read_promoted(self, state: ExtArray) -> ModClass:
        """mu_{r,s}(pr M) = mu_{r,s}(final state) for r <= s <= n-j+r."""
        counts: dict[DimVector, int] = {}
        for r in range(1, self.j + 1):
            last = self.n + 1 - self.j + r
            if state.entry(r, last):
                raise InternalInvariantError(f"Promotion left M({r},{last}) in {state.rows}")
            for s in range(r, last):
                counts[interval_root(self.n, r, s)] = state.entry(r, s)
        return ModClass._from_counts(self.quiver, counts)

    def promote(self, module: ModClass) -> ModClass:
        result = self.read_promoted(self.promote_trace(module)[-1])
        logger.debug(f"pr({module}) = {result}")
        return result

    def promote_power(self, module: ModClass, times: int) -> ModClass:
        for _ in range(times):
            module = self.promote(module)
        return module

    def affine_f0(self, module: ModClass) -> Optional[ModClass]:
        """f_0 = pr^n o f_1 o pr, None when f_1 leaves B(m w_j)."""
        self.require_member(module)
        lowered = self.crystal.apply_f_lambda(self.promote(module), 1, self.lam)
        if lowered is None:
            return None
        return self.promote_power(lowered, self.n)

    def affine_e0(self, module: ModClass) -> Optional[ModClass]:
        """e_0 = pr^n o e_1 o pr."""
        self.require_member(module)
        raised = self.crystal.apply_e_lambda(self.promote(module), 1, self.lam)
        if raised is None:
            return None
        return self.promote_power(raised, self.n)

    def f0_inequality(self, module: ModClass) -> bool:
        """k_1 < mu_{j,n}(M) + mu_{1,1}(pr M)."""
        self.require_member(module)
        return self.k(module, 1) < self.mu(module, self.j, self.n) + self.mu(self.promote(module), 1, 1)

    def kr_graph(self, max_nodes: int = 1_000_000, threads: int = 1) -> CrystalGraph:
        """B(m w_j) with its classical edges plus the 0-colored edges of f_0."""
        classical = generate_crystal(self.quiver, self.lam, max_nodes=max_nodes, threads=threads)
        affine_edges = []
        for k, node in enumerate(classical.nodes):
            image = self.affine_f0(node.key)
            if image is not None:
                affine_edges.append((k, 0, classical.index_of(image)))
        edges = sorted(classical.edges + affine_edges)
        down = {src: dst for src, _, dst in affine_edges}
        up = {dst: src for src, _, dst in affine_edges}

        def run(start: int, step: dict[int, int]) -> int:
            length, current = 0, start
            while current in step:
                current = step[current]
                length += 1
            return length

        nodes = [
            CrystalNode(
                key=node.key,
                weight=node.weight,
                eps=(run(k, up),) + node.eps,
                phi=(run(k, down),) + node.phi,
            )
            for k, node in enumerate(classical.nodes)
        ]
        logger.info(f"KR graph for n={self.n}, j={self.j}, m={self.m}: {len(affine_edges)} 0-edges")
        return CrystalGraph(
            colors=(0,) + classical.colors,
            cartan=classical.cartan,
            nodes=nodes,
            edges=edges,
            lam=self.lam,
            affine=True,
            highest_weight=None,
        )


@lru_cache(maxsize=64)
def promotion_engine(n: int, j: int, m: int) -> PromotionEngine:
    return PromotionEngine(n, j, m)


def engine_for(module: ModClass, j: int, m: int) -> PromotionEngine:
    """Engine matching the quiver of `module`; rejects anything but type A standard."""
    quiver = module.quiver
    if quiver.family != "A" or not quiver.is_standard_orientation:
        raise UnsupportedOrientationError(f"Promotion needs type A standard orientation, got {quiver}")
    return promotion_engine(quiver.rank, j, m)
