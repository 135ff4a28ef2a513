"""Rectangular semistandard tableaux, their crystal and jeu-de-taquin promotion."""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from app.features.crystals.domain.entities import CrystalGraph, CrystalNode
from app.features.quivers.domain.entities import standard_quiver


logger = logging.getLogger(__name__)

F = "f"
E = "e"


@dataclass(frozen=True, order=True)
class Tableau:
    """Rows top to bottom, each a tuple of letters."""
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows) -> "Tableau":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def is_rectangular(self) -> bool:
        return len({len(row) for row in self.rows}) <= 1

    def is_semistandard(self, alphabet: Optional[int] = None) -> bool:
        if not self.is_rectangular():
            return False
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            if any(x < 1 or (alphabet is not None and x > alphabet) for x in row):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                return False
        return True

    def reading_word(self) -> list[tuple[int, int, int]]:
        """(letter, row, column) read row by row from the bottom, each left to right."""
        return [
            (letter, r, c)
            for r in range(len(self.rows) - 1, -1, -1)
            for c, letter in enumerate(self.rows[r])
        ]

    def content(self, alphabet: int) -> tuple[int, ...]:
        counts = [0] * alphabet
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def weight(self, n: int) -> tuple[int, ...]:
        """wt(h_i) = #i - #(i+1) for i = 1..n."""
        counts = self.content(n + 1)
        return tuple(counts[i - 1] - counts[i] for i in range(1, n + 1))

    def replace(self, r: int, c: int, letter: int) -> "Tableau":
        rows = [list(row) for row in self.rows]
        rows[r][c] = letter
        return Tableau.of(rows)

    def render(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)

    def __str__(self) -> str:
        return " / ".join(" ".join(str(x) for x in row) for row in self.rows)


def _unpaired(tableau: Tableau, i: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    # An i+1 followed later by an i cancels; what is left reads i^a (i+1)^b.
    open_upper: list[tuple[int, int]] = []
    free_lower: list[tuple[int, int]] = []
    for letter, r, c in tableau.reading_word():
        if letter == i + 1:
            open_upper.append((r, c))
        elif letter == i:
            if open_upper:
                open_upper.pop()
            else:
                free_lower.append((r, c))
    return free_lower, open_upper


def tab_phi(tableau: Tableau, i: int) -> int:
    return len(_unpaired(tableau, i)[0])


def tab_eps(tableau: Tableau, i: int) -> int:
    return len(_unpaired(tableau, i)[1])


def tab_f(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Change the rightmost unpaired i into i+1."""
    lower, _ = _unpaired(tableau, i)
    if not lower:
        return None
    r, c = lower[-1]
    return tableau.replace(r, c, i + 1)


def tab_e(tableau: Tableau, i: int) -> Optional[Tableau]:
    """Change the leftmost unpaired i+1 into i."""
    _, upper = _unpaired(tableau, i)
    if not upper:
        return None
    r, c = upper[0]
    return tableau.replace(r, c, i)


def tab_crystal_op(tableau: Tableau, i: int, direction: str) -> Optional[Tableau]:
    if direction == F:
        return tab_f(tableau, i)
    if direction == E:
        return tab_e(tableau, i)
    raise ValueError(f"direction must be {F!r} or {E!r}, got {direction!r}")


def tab_promote(tableau: Tableau, n: int) -> Tableau:
    """
    Delete the letters n+1, add one to the rest, slide the holes to the
    top-left by jeu-de-taquin and fill them with 1.

    Holes are slid one at a time, leftmost first; each slide moves the
    larger of the north and west neighbours into the hole, north on ties.
    """
    top = n + 1
    grid: list[list[Optional[int]]] = [
        [None if x == top else x + 1 for x in row] for row in tableau.rows
    ]
    holes = sorted(
        ((r, c) for r, row in enumerate(grid) for c, x in enumerate(row) if x is None),
        key=lambda rc: (rc[1], rc[0]),
    )
    for r, c in holes:
        while True:
            north = grid[r - 1][c] if r > 0 else None
            west = grid[r][c - 1] if c > 0 else None
            if north is None and west is None:
                break
            if west is None or (north is not None and north >= west):
                grid[r][c], grid[r - 1][c] = north, None
                r -= 1
            else:
                grid[r][c], grid[r][c - 1] = west, None
                c -= 1
    return Tableau.of([[1 if x is None else x for x in row] for row in grid])


def enumerate_ssyt(j: int, m: int, alphabet: int) -> Iterator[Tableau]:
    """All semistandard j x m tableaux over 1..alphabet, in lexicographic order."""
    candidates = list(itertools.combinations_with_replacement(range(1, alphabet + 1), m))

    def extend(rows: list[tuple[int, ...]]) -> Iterator[Tableau]:
        if len(rows) == j:
            yield Tableau(tuple(rows))
            return
        for row in candidates:
            if rows and any(a >= b for a, b in zip(rows[-1], row)):
                continue
            yield from extend(rows + [row])

    yield from extend([])


def highest_weight_tableau(j: int, m: int) -> Tableau:
    return Tableau(tuple((r,) * m for r in range(1, j + 1)))


def tableau_crystal(n: int, j: int, m: int) -> CrystalGraph:
    """SSYT of the j x m rectangle over 1..n+1 with the signature-rule operators."""
    colors = tuple(range(1, n + 1))
    source = highest_weight_tableau(j, m)
    order = [source]
    ids = {source: 0}
    edges = []
    frontier = [source]
    while frontier:
        fresh = set()
        for t in frontier:
            for i in colors:
                image = tab_f(t, i)
                if image is None:
                    continue
                edges.append((t, i, image))
                if image not in ids:
                    fresh.add(image)
        frontier = sorted(fresh)
        for t in frontier:
            ids[t] = len(order)
            order.append(t)

    nodes = [
        CrystalNode(
            key=t,
            weight=t.weight(n),
            eps=tuple(tab_eps(t, i) for i in colors),
            phi=tuple(tab_phi(t, i) for i in colors),
        )
        for t in order
    ]
    cartan = standard_quiver("A", n).cartan
    logger.debug(f"Tableau crystal n={n}, j={j}, m={m}: {len(nodes)} nodes")
    return CrystalGraph(
        colors=colors,
        cartan=tuple(tuple(int(x) for x in row) for row in cartan),
        nodes=nodes,
        edges=sorted((ids[s], i, ids[d]) for s, i, d in edges),
        lam=tuple(m if k == j else 0 for k in colors),
        highest_weight=0,
    )
