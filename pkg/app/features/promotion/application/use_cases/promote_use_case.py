"""Use case for promotion of module classes."""
import logging

from app.features.crystals.domain.entities import ModClass
from app.features.promotion.domain.entities import ExtArray, engine_for


logger = logging.getLogger(__name__)


class PromoteUseCase:
    """Applies pr to an element of B(m w_j) on the standard A_n quiver."""

    def execute(self, module: ModClass, j: int, m: int) -> tuple[ModClass, list[ExtArray]]:
        """
        Returns:
            pr(M) together with the extended arrays visited on the way.

        Raises:
            UnsupportedOrientationError: quiver is not type A standard
            CrystalMembershipError: M is not in B(m w_j)
        """
        engine = engine_for(module, j, m)
        trace = engine.promote_trace(module)
        result = engine.read_promoted(trace[-1])
        logger.info(f"pr({module}) = {result} after {len(trace) - 1} steps")
        return result, trace
