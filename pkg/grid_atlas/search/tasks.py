from celery import shared_task

from grid_atlas.grids.diagram import parse_grid
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import key_to_hex
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.connect import Connected
from grid_atlas.search.connect import connect


@shared_task()
def connect_pair(a_text: str, b_text: str, mode: str, budget: dict) -> dict:
    """Run one search between two diagrams given in the grid file format."""
    a, b = parse_grid(a_text), parse_grid(b_text)
    verdict = connect(a, b, EquivalenceMode(mode), SearchBudget(**budget))
    result = {
        "source": key_to_hex(canonical_key(a)),
        "target": key_to_hex(canonical_key(b)),
        "connected": isinstance(verdict, Connected),
        "stats": verdict.stats.serialize(),
    }
    if isinstance(verdict, Connected):
        result["path"] = verdict.path.serialize()
    return result
