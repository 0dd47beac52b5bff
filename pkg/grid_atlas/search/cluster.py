"""
Clustering diagrams into conjectural isotopy classes.

Diagrams are merged only on evidence: a path found by the bidirectional
search, or a diagram reached by either side of any search. Classes that
stay apart are guessed, never proven, to be distinct.
"""

import logging
from collections import Counter
from collections.abc import Hashable
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass

from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import ClassicalInvariants
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.symmetry import CanonicalKey
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.knots.identify import UNKNOWN
from grid_atlas.knots.identify import KnotId
from grid_atlas.knots.identify import identify
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.connect import BidirectionalSearch
from grid_atlas.search.connect import Connected
from grid_atlas.search.connect import check_classical_invariants
from grid_atlas.search.enums import SearchSide

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets with union by rank and path compression."""

    def __init__(self, items: Iterable[Hashable] = ()):
        self._leader: dict[Hashable, Hashable] = {}
        self._rank: Counter[Hashable] = Counter()
        for item in items:
            self._leader[item] = item

    def __contains__(self, item: Hashable) -> bool:
        return item in self._leader

    def find(self, item: Hashable) -> Hashable:
        self._leader.setdefault(item, item)
        root = item
        while self._leader[root] != root:
            root = self._leader[root]
        while self._leader[item] != root:
            self._leader[item], item = root, self._leader[item]
        return root

    def union(self, first: Hashable, second: Hashable) -> bool:
        """Merge the two sets; False when they were already one."""
        a, b = self.find(first), self.find(second)
        if a == b:
            return False
        if self._rank[a] < self._rank[b]:
            a, b = b, a
        if self._rank[a] == self._rank[b]:
            self._rank[a] += 1
        self._leader[b] = a
        return True

    def groups(self) -> list[list[Hashable]]:
        by_root: dict[Hashable, list[Hashable]] = {}
        for item in self._leader:
            by_root.setdefault(self.find(item), []).append(item)
        return list(by_root.values())


@dataclass(frozen=True)
class ClassRecord:
    class_id: int
    representative: GridDiagram
    invariants: ClassicalInvariants
    knot: KnotId
    size: int
    members: tuple[CanonicalKey, ...]


@dataclass(frozen=True)
class ClassTable:
    mode: EquivalenceMode
    classes: tuple[ClassRecord, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def class_of(self, key: CanonicalKey) -> ClassRecord | None:
        for record in self.classes:
            if key in record.members:
                return record
        return None

    def partition(self) -> frozenset[frozenset[CanonicalKey]]:
        return frozenset(frozenset(record.members) for record in self.classes)


def _ordering(item: tuple[CanonicalKey, GridDiagram]) -> tuple[int, CanonicalKey]:
    key, g = item
    return g.size, key


def _identify_or_unknown(g: GridDiagram) -> KnotId:
    try:
        return identify(g)
    except MultiComponent:
        return UNKNOWN


def distinct_diagrams(diagrams: Iterable[GridDiagram]) -> dict[CanonicalKey, GridDiagram]:
    """One diagram per canonical key, ordered by size then key."""
    by_key: dict[CanonicalKey, GridDiagram] = {}
    for g in diagrams:
        by_key.setdefault(canonical_key(g), g)
    return dict(sorted(by_key.items(), key=_ordering))


def class_table_from_links(
    diagrams: Sequence[GridDiagram],
    mode: EquivalenceMode,
    links: Iterable[tuple[CanonicalKey, CanonicalKey]],
    knot: KnotId | None = None,
) -> ClassTable:
    """Classes generated by the given connections; class ids follow the representatives' order."""
    by_key = distinct_diagrams(diagrams)
    sets = UnionFind(by_key)
    for first, second in links:
        if first in sets and second in sets:
            sets.union(first, second)

    groups = [sorted(group, key=lambda key: _ordering((key, by_key[key]))) for group in sets.groups()]
    groups.sort(key=lambda group: _ordering((group[0], by_key[group[0]])))

    records = []
    for class_id, members in enumerate(groups):
        representative = by_key[members[0]]
        records.append(
            ClassRecord(
                class_id=class_id,
                representative=representative,
                invariants=classical_invariants(representative),
                knot=knot if knot is not None else _identify_or_unknown(representative),
                size=representative.size,
                members=tuple(members),
            ),
        )
    return ClassTable(mode=EquivalenceMode(mode), classes=tuple(records))


def cluster(
    diagrams: Sequence[GridDiagram],
    mode: EquivalenceMode,
    budget: SearchBudget,
    knot: KnotId | None = None,
) -> ClassTable:
    by_key = distinct_diagrams(diagrams)
    keys = list(by_key)
    if keys:
        first = by_key[keys[0]]
        for g in by_key.values():
            check_classical_invariants(first, g, mode)

    sets = UnionFind(keys)
    for i, source in enumerate(keys):
        for target in keys[i + 1 :]:
            if sets.find(source) == sets.find(target):
                continue
            search = BidirectionalSearch(by_key[source], by_key[target], mode, budget)
            if isinstance(search.run(), Connected):
                sets.union(source, target)
            for side, root in ((SearchSide.FORWARD, source), (SearchSide.BACKWARD, target)):
                for key in search.reached(side):
                    if key in sets and sets.union(root, key):
                        logger.debug("Merged a diagram reached while searching")

    links = [(key, sets.find(key)) for key in keys]
    table = class_table_from_links(list(by_key.values()), mode, links, knot)  # type: ignore[arg-type]
    logger.info("Clustered %d diagrams into %d classes (%s)", len(keys), len(table), EquivalenceMode(mode).label)
    return table
