"""
Class tables on disk: one file per (knot, tb, r, mode).

Each line holds a class id and a member's canonical key in hex. The first
line of each class is its representative and carries a third column with
the representative's own cells, so it reads back untranslated. Tables read
back are used to seed clustering, so a rerun only searches between what is
new.
"""

import logging
import struct
from collections.abc import Sequence
from pathlib import Path

from django.utils.text import slugify

from grid_atlas.core.conf import atlas_setting
from grid_atlas.core.exceptions import AtlasSchemaError
from grid_atlas.core.exceptions import InvalidGrid
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import diagram_from_key
from grid_atlas.grids.symmetry import diagram_key
from grid_atlas.grids.symmetry import key_from_hex
from grid_atlas.grids.symmetry import key_to_hex
from grid_atlas.knots.identify import KnotId
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.cluster import ClassTable
from grid_atlas.search.cluster import class_table_from_links
from grid_atlas.search.cluster import cluster

logger = logging.getLogger(__name__)


class ClassCache:
    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory or atlas_setting("CACHE_DIR"))

    def path_for(self, knot: KnotId | str, tb: int, r: int, mode: EquivalenceMode) -> Path:
        name = slugify(str(knot).replace("|", " or ")) or "unknown"
        return self.directory / f"{name}__tb{tb}__r{r}__{EquivalenceMode(mode).value}.keys"

    def store(self, table: ClassTable, knot: KnotId | str, tb: int, r: int) -> Path:
        path = self.path_for(knot, tb, r, table.mode)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = []
        for record in table:
            leader, *rest = record.members
            lines.append(f"{record.class_id}\t{key_to_hex(leader)}\t{diagram_key(record.representative).hex()}")
            lines.extend(f"{record.class_id}\t{key_to_hex(key)}" for key in rest)
        path.write_text("\n".join(lines) + "\n" if lines else "")
        logger.info("Stored %d classes in %s", len(table), path)
        return path

    def load(self, knot: KnotId, tb: int, r: int, mode: EquivalenceMode) -> ClassTable | None:
        path = self.path_for(knot, tb, r, mode)
        if not path.exists():
            logger.debug("Cache miss for %s", path.name)
            return None

        diagrams: list[GridDiagram] = []
        leaders: dict[str, bytes] = {}
        links = []
        for number, line in enumerate(path.read_text().splitlines(), start=1):
            if not line.strip():
                continue
            try:
                class_id, text, *own = line.split("\t")
                key = key_from_hex(text)
                g = diagram_from_key(key_from_hex(own[0]) if own else key)
                if own and (len(own) > 1 or canonical_key(g) != key):
                    error_message = "representative does not match its key"
                    raise ValueError(error_message)
            except (ValueError, struct.error, InvalidGrid) as exc:
                error_message = f"{path.name}:{number}: malformed cache line"
                raise AtlasSchemaError(error_message) from exc
            diagrams.append(g)
            leaders.setdefault(class_id, key)
            links.append((leaders[class_id], key))

        logger.info("Cache hit for %s", path.name)
        return class_table_from_links(diagrams, mode, links, knot)


def cluster_cached(
    diagrams: Sequence[GridDiagram],
    mode: EquivalenceMode,
    budget: SearchBudget,
    knot: KnotId,
    cache: ClassCache | None = None,
) -> ClassTable:
    """
    Cluster diagrams sharing one (tb, r), reusing and refreshing the cached
    table. Cached classes are merged first; only their representatives and
    new diagrams take part in the search.
    """
    if not diagrams:
        return ClassTable(mode=EquivalenceMode(mode), classes=())

    cache = cache or ClassCache()
    invariants = classical_invariants(diagrams[0])
    tb_r = (invariants.tb, invariants.r)
    cached = cache.load(knot, *tb_r, mode)
    known = {key for record in cached for key in record.members} if cached else set()
    fresh = [g for g in diagrams if canonical_key(g) not in known]
    if cached is not None and not fresh:
        return cached

    seeds = [record.representative for record in cached] if cached else []
    table = cluster([*seeds, *fresh], mode, budget, knot)
    if cached is not None:
        links = [(record.members[0], key) for record in table for key in record.members]
        links += [(record.members[0], key) for record in cached for key in record.members]
        members = [diagram_from_key(key) for key in known | {key for record in table for key in record.members}]
        table = class_table_from_links(members, mode, links, knot)
    cache.store(table, knot, *tb_r)
    return table
