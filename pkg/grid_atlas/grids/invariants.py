"""
Crossings, corners and the classical Legendrian invariants of a grid.

The front of a grid is the 45 degree rotation that turns NE corners into
right cusps and SW corners into left cusps. In that front the horizontal
segments have the smaller slope, so at every crossing the horizontal
segment is the over-strand.
"""

import logging
from dataclasses import dataclass

from grid_atlas.core.exceptions import InternalConsistencyError
from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import components
from grid_atlas.grids.enums import Corner

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Crossing:
    column: int
    row: int
    sign: int


@dataclass(frozen=True)
class CornerCensus:
    ne: int
    nw: int
    se: int
    sw: int
    signed_tally: int
    corners: dict[tuple[str, int, int], Corner]

    @property
    def total(self) -> int:
        return self.ne + self.nw + self.se + self.sw


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    r: int

    @property
    def sl(self) -> int:
        return self.tb - self.r

    def __str__(self) -> str:
        return f"tb={self.tb} r={self.r} sl={self.sl}"


def vertical_direction(g: GridDiagram, column: int) -> int:
    """+1 when the column's segment runs upward from its X to its O."""
    return 1 if g.o_row[column] > g.x_row[column] else -1


def horizontal_direction(g: GridDiagram, row: int) -> int:
    """+1 when the row's segment runs rightward from its O to its X."""
    return 1 if g.x_col[row] > g.o_col[row] else -1


def crossings(g: GridDiagram) -> list[Crossing]:
    result = []
    for column in range(g.size):
        low, high = sorted((g.x_row[column], g.o_row[column]))
        dv = vertical_direction(g, column)
        for row in range(low + 1, high):
            left, right = sorted((g.x_col[row], g.o_col[row]))
            if left < column < right:
                sign = horizontal_direction(g, row) * dv
                result.append(Crossing(column=column, row=row, sign=sign))
    return result


def writhe(g: GridDiagram) -> int:
    return sum(crossing.sign for crossing in crossings(g))


def marker_corner(g: GridDiagram, kind: str, column: int, row: int) -> Corner:
    if kind == "X":
        partner_column = g.o_col[row]
        partner_row = g.o_row[column]
    else:
        partner_column = g.x_col[row]
        partner_row = g.x_row[column]

    east = partner_column > column
    north = partner_row > row
    return {
        (False, False): Corner.NE,
        (True, False): Corner.NW,
        (False, True): Corner.SE,
        (True, True): Corner.SW,
    }[(east, north)]


# An X at a NE corner and an O at a SW corner are passed moving east and
# south; the other two NE/SW cases are passed moving west and north.
_TALLY = {
    ("X", Corner.NE): 1,
    ("O", Corner.NE): -1,
    ("X", Corner.SW): -1,
    ("O", Corner.SW): 1,
}


def corner_census(g: GridDiagram) -> CornerCensus:
    corners = {}
    counts = dict.fromkeys(Corner, 0)
    tally = 0
    for kind, column, row in g.markers():
        corner = marker_corner(g, kind, column, row)
        corners[(kind, column, row)] = corner
        counts[corner] += 1
        tally += _TALLY.get((kind, corner), 0)

    return CornerCensus(
        ne=counts[Corner.NE],
        nw=counts[Corner.NW],
        se=counts[Corner.SE],
        sw=counts[Corner.SW],
        signed_tally=tally,
        corners=corners,
    )


def classical_invariants(g: GridDiagram) -> ClassicalInvariants:
    if components(g) != 1:
        error_message = "Classical invariants are only defined for knots"
        raise MultiComponent(error_message)

    census = corner_census(g)
    if census.signed_tally % 2:
        error_message = f"Odd corner tally {census.signed_tally} for a knot diagram {g.x_row}/{g.o_row}"
        logger.error(error_message)
        raise InternalConsistencyError(error_message)

    return ClassicalInvariants(tb=writhe(g) - census.ne, r=census.signed_tally // 2)
