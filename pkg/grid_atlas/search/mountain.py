"""
Legendrian mountain ranges.

Classes of one knot type are placed at their (tb, r) points. Starting from
the highest points, every class is stabilized positively and negatively
and its images are matched against the classes one level down; images
that match nothing found so far start new classes. Peaks are the classes
no arrow reaches and none of whose known diagrams destabilizes to a higher
tb; a class table holding only lower levels therefore yields no peaks.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from dataclasses import field

from grid_atlas.floer.theta import theta_obstruction
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.moves import destabilizations
from grid_atlas.grids.moves import stabilize_x
from grid_atlas.grids.symmetry import CanonicalKey
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import diagram_from_key
from grid_atlas.knots.identify import KnotId
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.cluster import ClassTable
from grid_atlas.search.connect import Connected
from grid_atlas.search.connect import connect
from grid_atlas.search.enums import MergeRelation
from grid_atlas.search.enums import StabilizationSign
from grid_atlas.search.enums import ThetaStatus

logger = logging.getLogger(__name__)

Point = tuple[int, int]


@dataclass(frozen=True)
class RangeClass:
    label: str
    point: Point
    representative: GridDiagram
    peak: bool
    theta: ThetaStatus

    @property
    def tb(self) -> int:
        return self.point[0]

    @property
    def r(self) -> int:
        return self.point[1]


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    sign: StabilizationSign


@dataclass(frozen=True)
class MergeRow:
    """How the classes at one point group after one stabilization of the given sign."""

    point: Point
    sign: StabilizationSign
    groups: tuple[tuple[str, ...], ...]
    separators: tuple[MergeRelation, ...]

    @property
    def tb(self) -> int:
        return self.point[0]

    @property
    def r(self) -> int:
        return self.point[1]

    @property
    def persists(self) -> bool:
        return len(self.groups) > 1

    @property
    def text(self) -> str:
        parts = [MergeRelation.MERGED.value.join(self.groups[0])]
        for separator, group in zip(self.separators, self.groups[1:], strict=True):
            parts.append(separator.value)
            parts.append(MergeRelation.MERGED.value.join(group))
        return "".join(parts)


@dataclass(frozen=True)
class MountainRange:
    knot: str
    classes: tuple[RangeClass, ...] = ()
    arrows: tuple[Arrow, ...] = ()
    merges: tuple[MergeRow, ...] = ()

    def points(self) -> dict[Point, list[RangeClass]]:
        result: dict[Point, list[RangeClass]] = {}
        for entry in sorted(self.classes, key=lambda entry: (-entry.tb, entry.r, entry.label)):
            result.setdefault(entry.point, []).append(entry)
        return result

    def peaks(self) -> list[RangeClass]:
        return [entry for entry in self.classes if entry.peak]

    def peak_points(self) -> list[Point]:
        return sorted({entry.point for entry in self.peaks()}, key=lambda point: (-point[0], point[1]))

    def boxes(self) -> list[Point]:
        return [point for point, entries in self.points().items() if len(entries) > 1]

    def persists(self, point: Point) -> bool:
        return any(row.persists for row in self.merges if row.point == point)


@dataclass
class _Entry:
    label: str
    point: Point
    representative: GridDiagram
    members: set[CanonicalKey] = field(default_factory=set)
    incoming: set[StabilizationSign] = field(default_factory=set)


def stabilization_image(g: GridDiagram, sign: StabilizationSign) -> GridDiagram:
    return stabilize_x(g, 0, StabilizationSign(sign).variant)


class _RangeBuilder:
    def __init__(self, probe_budget: SearchBudget):
        self.probe_budget = probe_budget
        self.entries: dict[Point, list[_Entry]] = {}
        self.arrows: list[Arrow] = []
        self._counter = 0

    def add(self, point: Point, g: GridDiagram, members: Iterable[CanonicalKey] = ()) -> _Entry:
        self._counter += 1
        entry = _Entry(f"L{self._counter}", point, g, {canonical_key(g), *members})
        self.entries.setdefault(point, []).append(entry)
        return entry

    def find(self, point: Point, g: GridDiagram) -> _Entry | None:
        key = canonical_key(g)
        candidates = self.entries.get(point, [])
        for entry in candidates:
            if key in entry.members:
                return entry
        budget = self.probe_budget.widened(max(0, g.size - self.probe_budget.max_size + 1))
        for entry in candidates:
            verdict = connect(g, entry.representative, EquivalenceMode.LEGENDRIAN, budget)
            if isinstance(verdict, Connected):
                entry.members.add(key)
                return entry
        return None

    def place(self, point: Point, g: GridDiagram) -> _Entry:
        return self.find(point, g) or self.add(point, g)


def _destabilizes(entry: _Entry) -> bool:
    """Whether some known diagram of the class is a positive or negative stabilization."""
    corners = {sign.variant for sign in StabilizationSign}
    diagrams = [entry.representative, *(diagram_from_key(key) for key in entry.members)]
    return any(move.variant in corners for g in diagrams for move, _ in destabilizations(g))


def _theta_status(entry: _Entry) -> ThetaStatus:
    if StabilizationSign.PLUS in entry.incoming:
        return ThetaStatus.ZERO
    if theta_obstruction(entry.representative):
        return ThetaStatus.NONZERO
    return ThetaStatus.UNKNOWN


def _proven_apart(first: list[_Entry], second: list[_Entry], status: dict[str, ThetaStatus]) -> bool:
    """Negative stabilization preserves theta; a nonzero class never meets a vanishing one."""
    first_states = {status[entry.label] for entry in first}
    second_states = {status[entry.label] for entry in second}
    return (ThetaStatus.NONZERO in first_states and ThetaStatus.ZERO in second_states) or (
        ThetaStatus.ZERO in first_states and ThetaStatus.NONZERO in second_states
    )


def mountain_range(
    knot: KnotId,
    class_tables: Iterable[ClassTable],
    merge_probe_budget: SearchBudget,
    depth: int = 1,
) -> MountainRange:
    """
    ``class_tables`` hold the Legendrian classes found for the knot, one
    table per (tb, r) point. The range is grown ``depth`` levels below the
    highest tb.
    """
    builder = _RangeBuilder(merge_probe_budget)
    for table in class_tables:
        for record in table:
            point = (record.invariants.tb, record.invariants.r)
            builder.add(point, record.representative, record.members)

    if not builder.entries:
        return MountainRange(knot=str(knot))

    floor = max(tb for tb, _ in builder.entries) - depth
    images: dict[tuple[str, StabilizationSign], _Entry] = {}
    level = max(tb for tb, _ in builder.entries)
    while level > floor:
        for point in sorted(point for point in builder.entries if point[0] == level):
            for entry in list(builder.entries[point]):
                for sign in StabilizationSign:
                    dtb, dr = sign.shift
                    target = builder.place(
                        (point[0] + dtb, point[1] + dr),
                        stabilization_image(entry.representative, sign),
                    )
                    target.incoming.add(sign)
                    images[(entry.label, sign)] = target
                    builder.arrows.append(Arrow(entry.label, target.label, sign))
        level -= 1

    all_entries = [entry for entries in builder.entries.values() for entry in entries]
    status = {entry.label: _theta_status(entry) for entry in all_entries}

    merges = []
    for point, entries in sorted(builder.entries.items(), key=lambda item: (-item[0][0], item[0][1])):
        if len(entries) < 2:  # noqa: PLR2004
            continue
        for sign in StabilizationSign:
            grouped: dict[str, list[_Entry]] = {}
            for entry in entries:
                target = images.get((entry.label, sign))
                if target is None:
                    dtb, dr = sign.shift
                    target = builder.find(
                        (point[0] + dtb, point[1] + dr),
                        stabilization_image(entry.representative, sign),
                    )
                grouped.setdefault(target.label if target else entry.label, []).append(entry)

            groups = list(grouped.values())
            separators = []
            for before, after in zip(groups, groups[1:], strict=False):
                apart = sign == StabilizationSign.MINUS and _proven_apart(before, after, status)
                separators.append(MergeRelation.PROVEN if apart else MergeRelation.CONJECTURED)
            merges.append(
                MergeRow(
                    point=point,
                    sign=sign,
                    groups=tuple(tuple(entry.label for entry in group) for group in groups),
                    separators=tuple(separators),
                ),
            )

    classes = tuple(
        RangeClass(
            label=entry.label,
            point=entry.point,
            representative=entry.representative,
            peak=not entry.incoming and not _destabilizes(entry),
            theta=status[entry.label],
        )
        for entry in all_entries
    )
    result = MountainRange(knot=str(knot), classes=classes, arrows=tuple(builder.arrows), merges=tuple(merges))
    logger.info("Mountain range of %s: peaks at %s, %d boxes", knot, result.peak_points(), len(result.boxes()))
    return result
