"""
Legendrian fronts read off grid diagrams.

Rotating the grid 45 degrees counter-clockwise puts cell (c, r) at front
abscissa c + r and height r - c. SW corners become left cusps, NE corners
right cusps, NW and SE corners are smoothed, and at every crossing the
horizontal segment (the one falling to the right) is the upper-left strand.
The sweep keeps the active grid segments ordered bottom to top.
"""

import logging
from collections import defaultdict
from collections import deque
from dataclasses import dataclass

from grid_atlas.core.exceptions import InconsistentPotential
from grid_atlas.core.exceptions import InternalConsistencyError
from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import components
from grid_atlas.grids.enums import Axis
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.invariants import corner_census
from grid_atlas.grids.invariants import crossings
from grid_atlas.rulings.enums import FrontEventKind

logger = logging.getLogger(__name__)

Segment = tuple[Axis, int]


@dataclass(frozen=True)
class FrontEvent:
    """
    One step of the sweep. For cusps and crossings ``position`` is the lower
    of the two strands involved; ``upper`` and ``lower`` name the grid
    segments on the left of a crossing, or the two branches of a cusp. A
    smoothed corner records the segment that ends (``lower``) and the one
    that continues it (``upper``).
    """

    kind: FrontEventKind
    position: int
    upper: Segment
    lower: Segment
    sign: int = 0


@dataclass(frozen=True)
class Front:
    events: tuple[FrontEvent, ...]
    components: int
    rotation: int
    writhe: int

    def of_kind(self, kind: FrontEventKind) -> list[FrontEvent]:
        return [event for event in self.events if event.kind == kind]

    @property
    def crossings(self) -> list[FrontEvent]:
        return self.of_kind(FrontEventKind.CROSSING)

    @property
    def right_cusps(self) -> int:
        return len(self.of_kind(FrontEventKind.RIGHT_CUSP))

    @property
    def tb(self) -> int:
        return self.writhe - self.right_cusps


def _height(segment: Segment, abscissa: int) -> int:
    axis, index = segment
    if axis == Axis.ROW:
        return 2 * index - abscissa
    return abscissa - 2 * index


def _adjacent(active: list[Segment], lower: Segment, upper: Segment) -> int:
    position = active.index(lower)
    if position + 1 >= len(active) or active[position + 1] != upper:
        error_message = f"Segments {lower} and {upper} are not adjacent in the sweep {active}"
        logger.error(error_message)
        raise InternalConsistencyError(error_message)
    return position


def grid_to_front(g: GridDiagram) -> Front:
    if components(g) != 1:
        error_message = "Fronts are built for knot diagrams only"
        raise MultiComponent(error_message)

    census = corner_census(g)
    points: list[tuple[int, int, int, int, Corner | None, int]] = []
    for (_, column, row), corner in census.corners.items():
        points.append((column + row, row - column, column, row, corner, 0))
    for crossing in crossings(g):
        c, r = crossing.column, crossing.row
        points.append((c + r, r - c, c, r, None, crossing.sign))
    points.sort(key=lambda point: (point[0], point[1]))

    active: list[Segment] = []
    events: list[FrontEvent] = []
    for abscissa, height, column, row, corner, sign in points:
        horizontal: Segment = (Axis.ROW, row)
        vertical: Segment = (Axis.COL, column)

        if corner is None:
            position = _adjacent(active, vertical, horizontal)
            active[position], active[position + 1] = horizontal, vertical
            events.append(FrontEvent(FrontEventKind.CROSSING, position, upper=horizontal, lower=vertical, sign=sign))
        elif corner == Corner.SW:
            position = sum(1 for segment in active if _height(segment, abscissa) < height)
            active[position:position] = [horizontal, vertical]
            events.append(FrontEvent(FrontEventKind.LEFT_CUSP, position, upper=vertical, lower=horizontal))
        elif corner == Corner.NE:
            position = _adjacent(active, vertical, horizontal)
            del active[position : position + 2]
            events.append(FrontEvent(FrontEventKind.RIGHT_CUSP, position, upper=horizontal, lower=vertical))
        elif corner == Corner.NW:
            position = active.index(vertical)
            active[position] = horizontal
            events.append(FrontEvent(FrontEventKind.SMOOTH, position, upper=horizontal, lower=vertical))
        else:
            position = active.index(horizontal)
            active[position] = vertical
            events.append(FrontEvent(FrontEventKind.SMOOTH, position, upper=vertical, lower=horizontal))

    if active:
        error_message = f"Sweep ended with open strands {active}"
        logger.error(error_message)
        raise InternalConsistencyError(error_message)

    return Front(
        events=tuple(events),
        components=1,
        rotation=classical_invariants(g).r,
        writhe=sum(event.sign for event in events),
    )


# MASLOV POTENTIAL
# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class MaslovData:
    potential: dict[Segment, int]
    modulus: int
    degrees: tuple[int, ...]


def maslov_and_degrees(f: Front) -> MaslovData:
    """
    Potential on grid segments, one higher on the upper branch of every cusp
    and constant through smoothed corners, defined modulo twice the rotation
    number. Crossing degrees are upper-left minus lower-left potential.
    """
    modulus = 2 * abs(f.rotation)
    links: dict[Segment, list[tuple[Segment, int]]] = defaultdict(list)
    for event in f.events:
        if event.kind == FrontEventKind.CROSSING:
            continue
        step = 0 if event.kind == FrontEventKind.SMOOTH else 1
        links[event.lower].append((event.upper, step))
        links[event.upper].append((event.lower, -step))

    potential: dict[Segment, int] = {}
    for start in links:
        if start in potential:
            continue
        potential[start] = 0
        queue = deque([start])
        while queue:
            segment = queue.popleft()
            for other, step in links[segment]:
                expected = potential[segment] + step
                if other not in potential:
                    potential[other] = expected
                    queue.append(other)
                    continue
                drift = expected - potential[other]
                if (modulus == 0 and drift) or (modulus and drift % modulus):
                    error_message = f"Maslov potential drifts by {drift} around the front, modulus {modulus}"
                    logger.error(error_message)
                    raise InconsistentPotential(error_message)

    degrees = []
    for event in f.crossings:
        degree = potential[event.upper] - potential[event.lower]
        degrees.append(degree % modulus if modulus else degree)
    return MaslovData(potential=potential, modulus=modulus, degrees=tuple(degrees))
