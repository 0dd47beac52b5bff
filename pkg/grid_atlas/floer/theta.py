"""
A sufficient condition for the transverse invariant theta-hat to be nonzero.

theta-hat is represented by the generator sitting at the upper-right
corners of the X's, in the convention where horizontal strands pass over
vertical ones and the diagram is read after a clockwise quarter turn. If
no empty rectangle on the torus has its NW and SE corners at two points
of that generator, the generator is not hit by the differential and
theta-hat is nonzero. Transverse stabilizations have theta-hat = 0, so a
positive answer shows the transverse knot does not destabilize.
"""

import logging
from dataclasses import dataclass

from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.floer.enums import ThetaVerdict
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import components
from grid_atlas.grids.symmetry import transpose

logger = logging.getLogger(__name__)

Point = tuple[int, int]


@dataclass(frozen=True)
class Rectangle:
    """Cells [left, left + width) x [bottom, bottom + height) on the torus."""

    left: int
    bottom: int
    width: int
    height: int

    def cells(self, size: int) -> list[Point]:
        return [
            ((self.left + i) % size, (self.bottom + j) % size)
            for i in range(self.width)
            for j in range(self.height)
        ]

    def strictly_contains(self, point: Point, size: int) -> bool:
        dx = (point[0] - self.left) % size
        dy = (point[1] - self.bottom) % size
        return 0 < dx < self.width and 0 < dy < self.height


def theta_convention(g: GridDiagram) -> GridDiagram:
    """Reflect in the main diagonal: a clockwise quarter turn with rows read top-down."""
    return transpose(g)


def generator_points(g: GridDiagram) -> list[Point]:
    """Upper-right lattice corners of the X cells; one per column line and row line."""
    n = g.size
    return [((column + 1) % n, (row + 1) % n) for column, row in enumerate(g.x_row)]


def empty_nw_se_rectangles(g: GridDiagram) -> list[Rectangle]:
    """Rectangles of the diagram as given, already in the theta-hat convention."""
    n = g.size
    points = generator_points(g)
    marked = {(c, r) for c, r in enumerate(g.x_row)} | {(c, r) for c, r in enumerate(g.o_row)}

    found = []
    for nw in points:
        for se in points:
            if nw == se:
                continue
            rectangle = Rectangle(
                left=nw[0],
                bottom=se[1],
                width=(se[0] - nw[0]) % n,
                height=(nw[1] - se[1]) % n,
            )
            if marked.intersection(rectangle.cells(n)):
                continue
            if any(rectangle.strictly_contains(point, n) for point in points if point not in (nw, se)):
                continue
            found.append(rectangle)
    return found


def theta_obstruction(g: GridDiagram) -> bool:
    """True when theta-hat is certainly nonzero; False is inconclusive."""
    if components(g) != 1:
        error_message = "The theta-hat obstruction is read off knot diagrams only"
        raise MultiComponent(error_message)

    rectangles = empty_nw_se_rectangles(theta_convention(g))
    logger.debug("Diagram %s/%s has %d empty NW-SE rectangles", g.x_row, g.o_row, len(rectangles))
    return not rectangles


def theta_verdict(g: GridDiagram) -> ThetaVerdict:
    return ThetaVerdict.OBSTRUCTED if theta_obstruction(g) else ThetaVerdict.INCONCLUSIVE


@dataclass(frozen=True)
class FamilyLedger:
    size_t2: int
    sl_t2: int
    sl_t1: int
    gap: int


def family_sl_ledger(n: int) -> FamilyLedger:
    """
    Expected sizes and self-linking numbers for the n-th pair of transverse
    representatives: a non-destabilizable one of size 3n + 7 and sl 2n + 1,
    and one of sl 4n + 1 of the same knot type.
    """
    if n < 1:
        error_message = f"The family is indexed from 1, got {n}"
        raise ValueError(error_message)
    return FamilyLedger(size_t2=3 * n + 7, sl_t2=2 * n + 1, sl_t1=4 * n + 1, gap=2 * n)
