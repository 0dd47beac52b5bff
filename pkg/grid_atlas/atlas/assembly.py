"""
Orchestration shared by the gridatlas subcommands: finding the diagrams
of a knot type, classifying every diagram of one size, and the parallel
pairwise clustering that fans searches out to celery.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from celery import group

from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import format_grid
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.symmetry import key_from_hex
from grid_atlas.knots.identify import KnotId
from grid_atlas.knots.identify import identify
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.cache import ClassCache
from grid_atlas.search.cache import cluster_cached
from grid_atlas.search.cluster import ClassTable
from grid_atlas.search.cluster import class_table_from_links
from grid_atlas.search.cluster import distinct_diagrams
from grid_atlas.search.enumeration import enumerate_diagrams
from grid_atlas.search.tasks import connect_pair

logger = logging.getLogger(__name__)

Point = tuple[int, int]


@dataclass(frozen=True)
class KnotDiagrams:
    knot: KnotId
    arc_index: int
    diagrams: tuple[GridDiagram, ...]


def diagrams_of(name: str, max_arc_index: int) -> KnotDiagrams | None:
    """All diagrams of the named knot at the smallest size that has any."""
    for n in range(2, max_arc_index + 1):
        found = [(g, knot) for g in enumerate_diagrams(n) if str(knot := identify(g)) == name]
        if found:
            logger.info("%s has arc index %d with %d diagrams", name, n, len(found))
            return KnotDiagrams(knot=found[0][1], arc_index=n, diagrams=tuple(g for g, _ in found))
    logger.warning("No diagram of %s up to size %d", name, max_arc_index)
    return None


def group_by_type(diagrams: Sequence[GridDiagram]) -> dict[tuple[str, Point], list[GridDiagram]]:
    """Diagrams keyed by knot name and Legendrian point, in a stable order."""
    grouped: dict[tuple[str, Point], list[GridDiagram]] = {}
    for g in diagrams:
        try:
            invariants = classical_invariants(g)
        except MultiComponent:
            continue
        key = (str(identify(g)), (invariants.tb, invariants.r))
        grouped.setdefault(key, []).append(g)
    return dict(sorted(grouped.items(), key=lambda item: (item[0][0], -item[0][1][0], item[0][1][1])))


def cluster_parallel(
    diagrams: Sequence[GridDiagram],
    mode: EquivalenceMode,
    budget: SearchBudget,
    knot: KnotId | None = None,
) -> ClassTable:
    """Pairwise searches run as one celery group; the connected pairs are merged."""
    distinct = list(distinct_diagrams(diagrams).values())
    pairs = list(combinations(distinct, 2))
    links = []
    if pairs:
        job = group(
            connect_pair.s(format_grid(a), format_grid(b), EquivalenceMode(mode).value, budget.serialize())
            for a, b in pairs
        )
        for result in job.apply_async().get():
            if result["connected"]:
                links.append((key_from_hex(result["source"]), key_from_hex(result["target"])))
    logger.info("%d of %d pairwise searches connected", len(links), len(pairs))
    return class_table_from_links(distinct, mode, links, knot)


def classify(
    n: int,
    budget: SearchBudget,
    *,
    parallel: bool = False,
    cache: ClassCache | None = None,
) -> dict[tuple[str, Point], ClassTable]:
    """Every knot diagram of size n, clustered per knot type and Legendrian point."""
    tables = {}
    for (name, point), group_diagrams in group_by_type(list(enumerate_diagrams(n))).items():
        knot = identify(group_diagrams[0])
        if parallel:
            tables[(name, point)] = cluster_parallel(group_diagrams, EquivalenceMode.LEGENDRIAN, budget, knot)
        else:
            tables[(name, point)] = cluster_cached(group_diagrams, EquivalenceMode.LEGENDRIAN, budget, knot, cache)
    return tables
