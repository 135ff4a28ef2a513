"""The bijection between B(m w_j) on the standard A_n quiver and SSYT of the j x m rectangle."""
from collections import Counter

from app.features.crystals.domain.entities import ModClass
from app.features.promotion.domain.entities import interval_root, root_interval
from app.features.quivers.domain.entities import standard_quiver
from app.features.tableaux.domain.entities.tableau import Tableau
from app.shared.exceptions import CrystalMembershipError, UnsupportedOrientationError


def phi(module: ModClass, j: int, m: int) -> Tableau:
    """Row r holds k_r copies of r and mu_{r,s}(M) copies of s+1."""
    quiver = module.quiver
    if quiver.family != "A" or not quiver.is_standard_orientation:
        raise UnsupportedOrientationError(f"phi needs type A standard orientation, got {quiver}")
    n = quiver.rank
    rows: list[list[int]] = [[] for _ in range(j)]
    for root, mult in module.mult:
        r, s = root_interval(root)
        if r > j:
            raise CrystalMembershipError(f"{module} has a summand M({r},{s}) below row {j}")
        rows[r - 1].extend([s + 1] * mult)
    for r, row in enumerate(rows, start=1):
        if len(row) > m:
            raise CrystalMembershipError(f"Row {r} of phi({module}) holds more than {m} letters")
        row.extend([r] * (m - len(row)))
        row.sort()
    tableau = Tableau.of(rows)
    if not tableau.is_semistandard(alphabet=n + 1):
        raise CrystalMembershipError(f"phi({module}) = {tableau} is not semistandard")
    return tableau


def phi_inv(tableau: Tableau, n: int) -> ModClass:
    """Inverse of phi: letter s+1 in row r contributes one copy of M(r, s)."""
    if not tableau.is_semistandard(alphabet=n + 1):
        raise CrystalMembershipError(f"{tableau} is not a semistandard tableau over 1..{n + 1}")
    counts: Counter = Counter()
    for r, row in enumerate(tableau.rows, start=1):
        for letter in row:
            if letter < r:
                raise CrystalMembershipError(f"Letter {letter} cannot sit in row {r}")
            if letter > r:
                counts[interval_root(n, r, letter - 1)] += 1
    return ModClass._from_counts(standard_quiver("A", n), counts)
