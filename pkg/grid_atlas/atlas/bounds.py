"""
External bounds on tb + |r|, read from a data file and never computed here.
"""

import csv
from functools import lru_cache
from pathlib import Path

from grid_atlas.core.conf import atlas_setting
from grid_atlas.core.exceptions import AtlasSchemaError
from grid_atlas.utils.int_utils import to_int

BOUNDS_FILE = Path(__file__).resolve().parent / "data" / "mfw_bounds.tsv"


@lru_cache(maxsize=4)
def read_bounds(path: Path | str | None = None) -> dict[str, int]:
    path = Path(path or atlas_setting("MFW_BOUNDS_PATH") or BOUNDS_FILE)
    bounds = {}
    with path.open(newline="") as handle:
        rows = csv.reader((line for line in handle if not line.startswith("#")), delimiter="\t")
        for number, row in enumerate(rows, start=1):
            if not row:
                continue
            bound = to_int(row[1]) if len(row) == 2 else None  # noqa: PLR2004
            if bound is None:
                error_message = f"{path.name}: row {number} should be '<knot>\\t<bound>'"
                raise AtlasSchemaError(error_message)
            bounds[row[0]] = bound
    return bounds


def mfw_bound(knot: str) -> int | None:
    return read_bounds().get(knot)


def within_bound(tb: int, r: int, bound: int | None) -> bool:
    return bound is None or tb + abs(r) <= bound
