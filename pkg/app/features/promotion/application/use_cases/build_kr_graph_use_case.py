"""Use case for Kirillov-Reshetikhin crystal graphs."""
import logging

from app.features.crystals.domain.entities import CrystalGraph
from app.features.promotion.domain.entities import promotion_engine


logger = logging.getLogger(__name__)


class BuildKRGraphUseCase:

    def __init__(self, max_nodes: int, threads: int = 1):
        self.max_nodes = max_nodes
        self.threads = threads

    def execute(self, rank: int, j: int, m: int) -> CrystalGraph:
        logger.info(f"Building KR graph for A{rank}, j={j}, m={m}")
        return promotion_engine(rank, j, m).kr_graph(max_nodes=self.max_nodes, threads=self.threads)
