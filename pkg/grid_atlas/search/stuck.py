"""
Search for stuck diagrams: non-minimal diagrams whose size-preserving
component (torus translations and commutations) holds no destabilizable
diagram.
"""

import logging
from collections import deque

from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.moves import commute
from grid_atlas.grids.moves import is_destabilizable
from grid_atlas.grids.moves import legal_commutations
from grid_atlas.grids.symmetry import CanonicalKey
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import diagram_from_key
from grid_atlas.knots.identify import identify
from grid_atlas.search.enumeration import enumerate_diagrams

logger = logging.getLogger(__name__)


def commutation_component(g: GridDiagram) -> frozenset[CanonicalKey]:
    """Canonical keys reachable from g by commutations, translations included through the keys."""
    start = canonical_key(g)
    seen = {start}
    queue = deque([start])
    while queue:
        current = diagram_from_key(queue.popleft())
        for move in legal_commutations(current, cyclic=True):
            key = canonical_key(commute(current, move))
            if key not in seen:
                seen.add(key)
                queue.append(key)
    return frozenset(seen)


def knot_types_below(n: int) -> frozenset[str]:
    """Names of every knot type with a diagram of size less than n."""
    names = set()
    for size in range(2, n):
        for g in enumerate_diagrams(size):
            knot = identify(g)
            if not knot.is_unknown:
                names.add(str(knot))
    return frozenset(names)


def find_stuck(n: int) -> list[GridDiagram]:
    """One representative (least canonical key) per stuck component of size n."""
    if n < 3:  # noqa: PLR2004
        error_message = f"Stuck diagrams need size at least 3, got {n}"
        raise ValueError(error_message)

    settled: set[CanonicalKey] = set()
    candidates: list[GridDiagram] = []
    for g in enumerate_diagrams(n):
        key = canonical_key(g)
        if key in settled:
            continue
        component = commutation_component(g)
        settled |= component
        if not any(is_destabilizable(diagram_from_key(member)) for member in component):
            candidates.append(diagram_from_key(min(component)))

    logger.info("%d non-destabilizable components of size %d", len(candidates), n)
    if not candidates:
        return []

    smaller = knot_types_below(n)
    stuck = []
    for representative in candidates:
        knot = identify(representative)
        if knot.is_unknown:
            logger.warning("Could not identify a non-destabilizable diagram of size %d", n)
        elif str(knot) in smaller:
            stuck.append(representative)
    logger.info("Found %d stuck diagrams of size %d", len(stuck), n)
    return stuck
