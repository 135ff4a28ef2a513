"""Use case comparing the module crystal with the tableau crystal."""
import logging
from dataclasses import dataclass
from typing import Optional

from app.features.crystals.domain.entities import CrystalGraph, generate_crystal, graph_iso
from app.features.quivers.domain.entities import standard_quiver
from app.features.tableaux.domain.entities import phi, tableau_crystal


logger = logging.getLogger(__name__)


@dataclass
class ComparisonResult:
    modules: CrystalGraph
    tableaux: CrystalGraph
    mapping: Optional[dict[int, int]]
    phi_agrees: bool

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None and self.phi_agrees


class CompareWithTableauxUseCase:
    """
    Builds B(m w_j) on the standard A_n quiver and the SSYT crystal of the
    j x m rectangle, matches them from their sources and checks that the
    match sends every module to its tableau under phi.
    """

    def __init__(self, max_nodes: int, threads: int = 1):
        self.max_nodes = max_nodes
        self.threads = threads

    def execute(self, n: int, j: int, m: int) -> ComparisonResult:
        quiver = standard_quiver("A", n)
        lam = tuple(m if k == j else 0 for k in range(1, n + 1))
        modules = generate_crystal(quiver, lam, max_nodes=self.max_nodes, threads=self.threads)
        tableaux = tableau_crystal(n, j, m)
        mapping = graph_iso(modules, tableaux)
        phi_agrees = mapping is not None and all(
            tableaux.nodes[mapping[k]].key == phi(node.key, j, m) for k, node in enumerate(modules.nodes)
        )
        logger.info(
            f"A{n}, j={j}, m={m}: {len(modules)} modules vs {len(tableaux)} tableaux, "
            f"iso={'yes' if mapping is not None else 'no'}, phi={'yes' if phi_agrees else 'no'}"
        )
        return ComparisonResult(modules, tableaux, mapping, phi_agrees)
