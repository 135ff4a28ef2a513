"""Positive roots and the Weyl dimension formula."""
from collections import deque
from fractions import Fraction
from typing import Sequence

from app.features.quivers.domain.entities.quiver import DimVector, Quiver
from app.shared.exceptions import RankMismatchError


def positive_roots(quiver: Quiver) -> tuple[DimVector, ...]:
    """All positive roots, found by reflecting simple roots while staying positive."""
    simple = [quiver.unit(i) for i in quiver.vertices]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        for i in quiver.vertices:
            image = quiver.reflect(i, root)
            if min(image) >= 0 and image not in seen:
                seen.add(image)
                queue.append(image)
    return tuple(sorted(seen))


def weyl_dimension(quiver: Quiver, weight: Sequence[int]) -> int:
    """dim V(lambda) = prod over positive roots of <lambda + rho, a> / <rho, a>."""
    if len(weight) != quiver.rank:
        raise RankMismatchError(f"Weight {tuple(weight)} does not match rank {quiver.rank}")
    product = Fraction(1)
    for root in positive_roots(quiver):
        numerator = sum(c * (lam + 1) for c, lam in zip(root, weight))
        product *= Fraction(numerator, sum(root))
    return int(product)
