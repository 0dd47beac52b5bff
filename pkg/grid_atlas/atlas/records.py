"""
Atlas records: everything the atlas states about one knot type.

A record is assembled from the diagrams of the knot at its arc index.
They are clustered into Legendrian classes per (tb, r), the mountain range
is grown below them, and each non-destabilizable class is annotated with
its ruling polynomial, the theta obstruction and its symmetry relations.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field

from grid_atlas.atlas.bounds import mfw_bound
from grid_atlas.atlas.enums import RelationStatus
from grid_atlas.atlas.enums import Symmetry
from grid_atlas.floer.theta import theta_obstruction
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import mirror_mu
from grid_atlas.grids.symmetry import reverse
from grid_atlas.grids.symmetry import transverse_mirror
from grid_atlas.knots.identify import KnotId
from grid_atlas.rulings.rulings import UNDEFINED_RULINGS
from grid_atlas.rulings.rulings import grid_ruling_text
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.cache import ClassCache
from grid_atlas.search.cache import cluster_cached
from grid_atlas.search.cluster import cluster
from grid_atlas.search.connect import Connected
from grid_atlas.search.connect import connect
from grid_atlas.search.mountain import MergeRow
from grid_atlas.search.mountain import MountainRange
from grid_atlas.search.mountain import RangeClass
from grid_atlas.search.mountain import mountain_range

logger = logging.getLogger(__name__)

SYMMETRY_MAPS = {
    Symmetry.REVERSE: reverse,
    Symmetry.MU: mirror_mu,
    Symmetry.MINUS_MU: transverse_mirror,
}


@dataclass(frozen=True)
class ClassEntry:
    label: str
    representative: GridDiagram
    tb: int
    r: int
    ruling: str
    theta: bool
    symmetries: dict[Symmetry, RelationStatus] = field(default_factory=dict)

    @property
    def sl(self) -> int:
        return self.tb - self.r


@dataclass(frozen=True)
class TransverseClass:
    sl: int
    members: tuple[str, ...]
    theta: bool


@dataclass(frozen=True)
class AtlasRecord:
    knot: str
    arc_index: int
    max_tb: int
    classes: tuple[ClassEntry, ...]
    merge_table: tuple[MergeRow, ...] = ()
    transverse_classes: tuple[TransverseClass, ...] = ()
    nonsimple_candidate: bool = False
    mfw_bound: int | None = None

    @property
    def proven_nonsimple(self) -> bool:
        """Two classes at one point whose ruling polynomials differ."""
        by_point: dict[tuple[int, int], set[str]] = {}
        for entry in self.classes:
            if entry.ruling != UNDEFINED_RULINGS:
                by_point.setdefault((entry.tb, entry.r), set()).add(entry.ruling)
        return any(len(rulings) > 1 for rulings in by_point.values())

    def points(self) -> list[tuple[int, int]]:
        return sorted({(entry.tb, entry.r) for entry in self.classes}, key=lambda point: (-point[0], point[1]))


def symmetry_status(
    g: GridDiagram,
    symmetry: Symmetry,
    budget: SearchBudget,
    ruling: str | None = None,
) -> RelationStatus:
    image = SYMMETRY_MAPS[Symmetry(symmetry)](g)
    before, after = classical_invariants(g), classical_invariants(image)
    if (before.tb, before.r) != (after.tb, after.r):
        return RelationStatus.FALSE

    ruling = ruling if ruling is not None else grid_ruling_text(g)
    if ruling != UNDEFINED_RULINGS and grid_ruling_text(image) != ruling:
        return RelationStatus.FALSE

    verdict = connect(g, image, EquivalenceMode.LEGENDRIAN, budget)
    return RelationStatus.PROVEN if isinstance(verdict, Connected) else RelationStatus.CONJECTURED


def transverse_classes(
    mr: MountainRange,
    budget: SearchBudget,
    theta: dict[str, bool],
) -> tuple[TransverseClass, ...]:
    """Classes of the range at the largest self-linking number, merged in transverse mode."""
    if not mr.classes:
        return ()

    top_sl = max(entry.tb - entry.r for entry in mr.classes)
    at_top = [entry for entry in mr.classes if entry.tb - entry.r == top_sl]
    by_key: dict[bytes, list[RangeClass]] = {}
    for entry in at_top:
        by_key.setdefault(canonical_key(entry.representative), []).append(entry)
    table = cluster([entry.representative for entry in at_top], EquivalenceMode.TRANSVERSE, budget)

    result = []
    for record in table:
        members = [entry for key in record.members for entry in by_key.get(key, [])]
        obstructed = any(
            theta[entry.label] if entry.label in theta else theta_obstruction(entry.representative)
            for entry in members
        )
        result.append(TransverseClass(sl=top_sl, members=tuple(sorted(entry.label for entry in members)), theta=obstructed))
    return tuple(result)


def build_record(
    knot: KnotId,
    diagrams: Sequence[GridDiagram],
    budget: SearchBudget,
    probe_budget: SearchBudget | None = None,
    depth: int = 1,
    cache: ClassCache | None = None,
) -> tuple[AtlasRecord, MountainRange]:
    """
    ``diagrams`` are diagrams of the knot, normally all of those at its arc
    index. Clustering goes through the class cache.
    """
    probe_budget = probe_budget or budget
    by_point: dict[tuple[int, int], list[GridDiagram]] = {}
    for g in diagrams:
        invariants = classical_invariants(g)
        by_point.setdefault((invariants.tb, invariants.r), []).append(g)

    tables = [
        cluster_cached(group, EquivalenceMode.LEGENDRIAN, budget, knot, cache)
        for _, group in sorted(by_point.items(), key=lambda item: (-item[0][0], item[0][1]))
    ]
    mr = mountain_range(knot, tables, probe_budget, depth)

    entries = []
    theta = {}
    for peak in mr.peaks():
        ruling = grid_ruling_text(peak.representative)
        theta[peak.label] = theta_obstruction(peak.representative)
        symmetries = {
            symmetry: symmetry_status(peak.representative, symmetry, probe_budget, ruling) for symmetry in Symmetry
        }
        entries.append(
            ClassEntry(
                label=peak.label,
                representative=peak.representative,
                tb=peak.tb,
                r=peak.r,
                ruling=ruling,
                theta=theta[peak.label],
                symmetries=symmetries,
            ),
        )
    entries.sort(key=lambda entry: (-entry.tb, entry.r, entry.label))

    name = str(knot)
    record = AtlasRecord(
        knot=name,
        arc_index=min((entry.representative.size for entry in entries), default=0),
        max_tb=max((entry.tb for entry in entries), default=0),
        classes=tuple(entries),
        merge_table=mr.merges,
        transverse_classes=transverse_classes(mr, probe_budget, theta),
        nonsimple_candidate=bool(mr.boxes()),
        mfw_bound=mfw_bound(name),
    )
    logger.info(
        "Atlas record for %s: arc index %d, max tb %d, %d classes",
        name,
        record.arc_index,
        record.max_tb,
        len(entries),
    )
    return record, mr
