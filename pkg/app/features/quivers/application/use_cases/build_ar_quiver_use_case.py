"""Use case for building the Auslander-Reiten quiver of a Dynkin quiver."""
import logging

from app.features.quivers.domain.entities import ARGraph, Quiver, QuiverSpec, build_ar_graph, build_quiver


logger = logging.getLogger(__name__)


class BuildARQuiverUseCase:
    """Validates a quiver specification and knits its AR quiver."""

    def execute(self, spec: QuiverSpec) -> ARGraph:
        logger.info(f"Building AR quiver for {spec.family}{spec.rank} arrows={list(spec.arrows)}")
        quiver: Quiver = build_quiver(spec)
        ar = build_ar_graph(quiver)
        logger.info(f"AR quiver of {quiver} has {len(ar)} indecomposables")
        return ar
