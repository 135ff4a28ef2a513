"""Use case for jeu-de-taquin promotion of rectangular tableaux."""
import logging

from app.features.tableaux.domain.entities import Tableau, tab_promote
from app.shared.exceptions import CrystalMembershipError


logger = logging.getLogger(__name__)


class TableauPromoteUseCase:

    def execute(self, tableau: Tableau, n: int) -> Tableau:
        if not tableau.is_semistandard(alphabet=n + 1):
            raise CrystalMembershipError(f"{tableau} is not a semistandard tableau over 1..{n + 1}")
        result = tab_promote(tableau, n)
        logger.info(f"pr({tableau}) = {result}")
        return result
