"""
Knot identification by (Jones polynomial, determinant).

The table is built from bundled braid words. Each row is computed from
the closure's grid, checked against its recorded determinant, and paired
with a mirror row whenever the knot is chiral. A generated table file
(``gridatlas table --write``) is preferred when one is configured.
"""

import csv
import logging
from collections import defaultdict
from dataclasses import dataclass
from dataclasses import field
from functools import lru_cache
from pathlib import Path

from grid_atlas.core.conf import atlas_setting
from grid_atlas.core.exceptions import AtlasSchemaError
from grid_atlas.core.exceptions import InternalConsistencyError
from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.core.exceptions import TooManyCrossings
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import components
from grid_atlas.knots.bracket import determinant
from grid_atlas.knots.bracket import jones
from grid_atlas.knots.braids import BraidWord
from grid_atlas.knots.braids import braid_to_grid
from grid_atlas.knots.polynomials import LaurentPolynomial

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"
BRAIDS_FILE = DATA_DIR / "knot_braids.tsv"
UNKNOT = "unknot"


def mirror_name(name: str) -> str:
    if name == UNKNOT:
        return name
    if name.startswith("m(") and name.endswith(")"):
        return name[2:-1]
    return f"m({name})"


@dataclass(frozen=True)
class KnotId:
    name: str | None
    ambiguous: bool = False
    candidates: tuple[str, ...] = ()

    @property
    def is_unknown(self) -> bool:
        return self.name is None

    def __str__(self) -> str:
        if self.ambiguous:
            return "|".join(self.candidates)
        return self.name or "Unknown"


UNKNOWN = KnotId(name=None)


@dataclass(frozen=True)
class KnotTableRow:
    name: str
    jones: LaurentPolynomial
    determinant: int


@dataclass(frozen=True)
class BraidEntry:
    name: str
    braid: BraidWord
    determinant: int


def read_braids(path: Path | str | None = None) -> list[BraidEntry]:
    path = Path(path or atlas_setting("KNOT_BRAIDS_PATH") or BRAIDS_FILE)
    entries = []
    with path.open(newline="") as handle:
        for line_number, row in enumerate(csv.reader(handle, delimiter="\t"), start=1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 4:  # noqa: PLR2004
                error_message = f"{path}:{line_number}: expected 4 tab-separated fields, got {len(row)}"
                raise AtlasSchemaError(error_message)
            name, strands, letters, det = row
            entries.append(BraidEntry(name, BraidWord.parse(int(strands), letters), int(det)))
    return entries


def build_table(entries: list[BraidEntry]) -> list[KnotTableRow]:
    rows = []
    for entry in entries:
        g = braid_to_grid(entry.braid)
        polynomial = jones(g).in_t()
        computed = determinant(g)
        if computed != entry.determinant:
            error_message = (
                f"Closure of {entry.name} braid [{entry.braid}] has determinant {computed}, "
                f"expected {entry.determinant}"
            )
            logger.error(error_message)
            raise InternalConsistencyError(error_message)

        rows.append(KnotTableRow(entry.name, polynomial, computed))
        mirrored = polynomial.substitute_power(-1)
        if mirrored != polynomial:
            rows.append(KnotTableRow(mirror_name(entry.name), mirrored, computed))
    return rows


def write_table(rows: list[KnotTableRow], path: Path | str) -> None:
    with Path(path).open("w", newline="") as handle:
        writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
        for row in rows:
            writer.writerow([row.name, row.jones.serialize(), row.determinant])


def read_table(path: Path | str) -> list[KnotTableRow]:
    rows = []
    with Path(path).open(newline="") as handle:
        for line_number, row in enumerate(csv.reader(handle, delimiter="\t"), start=1):
            if not row:
                continue
            if len(row) != 3:  # noqa: PLR2004
                error_message = f"{path}:{line_number}: expected 3 tab-separated fields, got {len(row)}"
                raise AtlasSchemaError(error_message)
            name, polynomial, det = row
            parsed = LaurentPolynomial.parse(polynomial)
            if abs(int(parsed.evaluate(-1))) != int(det):
                error_message = f"{path}:{line_number}: determinant {det} does not match |V(-1)| for {name}"
                raise AtlasSchemaError(error_message)
            rows.append(KnotTableRow(name, parsed, int(det)))
    return rows


@dataclass
class KnotTable:
    rows: list[KnotTableRow]
    index: dict[tuple[LaurentPolynomial, int], list[str]] = field(init=False)

    def __post_init__(self):
        self.index = defaultdict(list)
        for row in self.rows:
            self.index[(row.jones, row.determinant)].append(row.name)
        for names in self.index.values():
            if len(names) > 1:
                logger.warning("Knot table rows %s share a Jones polynomial and determinant", names)

    def lookup(self, polynomial: LaurentPolynomial, det: int) -> KnotId:
        names = self.index.get((polynomial, det), [])
        if not names:
            return UNKNOWN
        if len(names) > 1:
            return KnotId(name=names[0], ambiguous=True, candidates=tuple(names))
        return KnotId(name=names[0])


@lru_cache(maxsize=1)
def get_knot_table() -> KnotTable:
    table_path = atlas_setting("KNOT_TABLE_PATH")
    if table_path and Path(table_path).exists():
        logger.info("Loading knot table from %s", table_path)
        return KnotTable(read_table(table_path))

    logger.info("Building knot table from bundled braid words")
    return KnotTable(build_table(read_braids()))


def identify(g: GridDiagram) -> KnotId:
    if components(g) != 1:
        error_message = "Only knots can be identified"
        raise MultiComponent(error_message)

    try:
        polynomial = jones(g).in_t()
    except TooManyCrossings:
        logger.warning("Diagram of size %d has too many crossings to identify", g.size)
        return UNKNOWN

    return get_knot_table().lookup(polynomial, abs(int(polynomial.evaluate(-1))))
