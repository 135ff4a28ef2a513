"""Use case for the starred string lengths of a module."""
import logging

from app.features.crystals.domain.entities import ModClass, module_crystal


logger = logging.getLogger(__name__)


class ComputeEpsStarUseCase:

    def execute(self, module: ModClass) -> tuple[int, ...]:
        """(eps_1^*(M), ..., eps_n^*(M)); M lies in B(lambda) iff this is <= lambda."""
        values = module_crystal(module.quiver).eps_star_vector(module)
        logger.info(f"eps* of {module} = {values}")
        return values
