"""
Enumeration of knot grid diagrams of a fixed size, one per torus-translation orbit.

Columns are filled left to right. Column c joins the rows of its X and its
O, so a partial diagram is a union of paths through the rows; a choice
that closes one of those paths before the last column would leave a
second component and is rejected at once. The X of column 0 sits in row 0,
which every canonical representative satisfies, and a finished diagram is
emitted only when it is its own canonical form.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.moves import is_destabilizable
from grid_atlas.grids.symmetry import canonical_cells

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PruneFlags:
    """
    ``skip_destabilizable`` drops diagrams holding an adjacent X-O pair that
    destabilize at once under the moves allowed by ``mode``.
    """

    skip_destabilizable: bool = False
    mode: EquivalenceMode = EquivalenceMode.TOPOLOGICAL


NO_PRUNING = PruneFlags()


def has_adjacent_pair(g: GridDiagram) -> bool:
    """Some row or column carries its X and O in cyclically neighbouring cells."""
    n = g.size
    adjacent = {1 % n, (n - 1) % n}
    return any((g.x_row[c] - g.o_row[c]) % n in adjacent for c in range(n)) or any(
        (g.x_col[r] - g.o_col[r]) % n in adjacent for r in range(n)
    )


def _is_canonical(x_row: list[int], o_row: list[int]) -> bool:
    g = GridDiagram(tuple(x_row), tuple(o_row))
    return canonical_cells(g) == g.x_row + g.o_row


def enumerate_diagrams(n: int, prune: PruneFlags = NO_PRUNING) -> Iterator[GridDiagram]:
    if n < 2:  # noqa: PLR2004
        error_message = f"Grid diagrams have size at least 2, got {n}"
        raise ValueError(error_message)

    x_row = [0] * n
    o_row = [0] * n
    x_used = [False] * n
    o_used = [False] * n
    # Rows are path ends: other_end[r] is the far end of the path through r.
    other_end = list(range(n))
    emitted = 0

    def place(column: int, x: int, o: int) -> Iterator[GridDiagram]:
        end_x, end_o = other_end[x], other_end[o]
        closes = end_x == o
        if closes and column != n - 1:
            return
        saved = (other_end[end_x], other_end[end_o])
        if not closes:
            other_end[end_x], other_end[end_o] = end_o, end_x
        x_row[column], o_row[column] = x, o
        x_used[x] = o_used[o] = True

        yield from fill(column + 1)

        x_used[x] = o_used[o] = False
        if not closes:
            other_end[end_x], other_end[end_o] = saved

    def fill(column: int) -> Iterator[GridDiagram]:
        if column == n:
            if _is_canonical(x_row, o_row):
                yield GridDiagram(tuple(x_row), tuple(o_row))
            return
        x_choices = [0] if column == 0 else [row for row in range(n) if not x_used[row]]
        for x in x_choices:
            for o in range(n):
                if o != x and not o_used[o]:
                    yield from place(column, x, o)

    for g in fill(0):
        if prune.skip_destabilizable and has_adjacent_pair(g) and is_destabilizable(g, prune.mode):
            continue
        emitted += 1
        yield g

    logger.info("Enumerated %d canonical knot diagrams of size %d", emitted, n)
