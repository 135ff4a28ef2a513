"""Use case for generating highest-weight crystal graphs."""
import logging
from typing import Optional, Sequence

from app.features.crystals.domain.entities import CrystalGraph, generate_crystal
from app.features.quivers.domain.entities import Quiver


logger = logging.getLogger(__name__)


class GenerateCrystalUseCase:
    """Builds B(lambda) on a special and cospecial quiver within a node budget."""

    def __init__(self, max_nodes: int, threads: int = 1):
        self.max_nodes = max_nodes
        self.threads = threads

    def execute(self, quiver: Quiver, hw: Sequence[int], max_nodes: Optional[int] = None) -> CrystalGraph:
        limit = max_nodes or self.max_nodes
        logger.info(f"Generating B({tuple(hw)}) on {quiver} (max_nodes={limit}, threads={self.threads})")
        return generate_crystal(quiver, hw, max_nodes=limit, threads=self.threads)
