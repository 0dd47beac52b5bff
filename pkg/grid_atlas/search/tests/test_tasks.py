from celery.result import EagerResult

from grid_atlas.grids.diagram import format_grid
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.moves import MovePath
from grid_atlas.grids.moves import stabilize_x
from grid_atlas.search.tasks import connect_pair


def test_connect_pair(settings, trefoil):
    """Run one search through celery and replay the returned path."""
    settings.CELERY_TASK_ALWAYS_EAGER = True
    stabilized = stabilize_x(trefoil, 1, Corner.NE)
    budget = {"max_size": 6, "max_visited": 10_000, "max_millis": 60_000}
    task_result = connect_pair.delay(format_grid(stabilized), format_grid(trefoil), "leg", budget)
    assert isinstance(task_result, EagerResult)
    assert task_result.result["connected"] is True
    assert MovePath.parse(task_result.result["path"]).replay(stabilized) == trefoil
    assert task_result.result["stats"]["stop_reason"] == "met"
