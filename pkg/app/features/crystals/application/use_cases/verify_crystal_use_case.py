"""Use case for checking the crystal axioms on a graph."""
import logging

from app.features.crystals.domain.entities import CrystalGraph, check_axioms


logger = logging.getLogger(__name__)


class VerifyCrystalUseCase:

    def execute(self, graph: CrystalGraph) -> list[str]:
        violations = check_axioms(graph)
        if violations:
            logger.warning(f"Crystal graph with {len(graph)} nodes has {len(violations)} violations")
        else:
            logger.info(f"Crystal graph with {len(graph)} nodes passes every axiom")
        return violations
