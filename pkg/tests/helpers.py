"""Builders shared by the test modules."""
from app.features.crystals.domain.entities import ModClass
from app.features.promotion.domain.entities import interval_root
from app.features.quivers.domain.entities import standard_quiver


def interval_module(n: int, *summands: tuple[int, int, int]) -> ModClass:
    """Module over the standard A_n quiver from (a, b, multiplicity) triples."""
    quiver = standard_quiver("A", n)
    counts: dict = {}
    for a, b, mult in summands:
        root = interval_root(n, a, b)
        counts[root] = counts.get(root, 0) + mult
    return ModClass.from_mapping(quiver, counts)


def small_configs(max_rank: int = 4, max_m: int = 3) -> list[tuple[int, int, int]]:
    """Every (n, j, m) with n <= max_rank, 1 <= j <= n and m <= max_m."""
    return [
        (n, j, m)
        for n in range(1, max_rank + 1)
        for j in range(1, n + 1)
        for m in range(1, max_m + 1)
    ]
