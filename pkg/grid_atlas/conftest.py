import pytest

from grid_atlas.grids.diagram import GridDiagram


@pytest.fixture(autouse=True)
def _atlas_cache(settings, tmp_path) -> None:
    settings.GRID_ATLAS = {**getattr(settings, "GRID_ATLAS", {}), "CACHE_DIR": str(tmp_path / "cache")}


@pytest.fixture
def unknot() -> GridDiagram:
    return GridDiagram((1, 0), (0, 1))


@pytest.fixture
def trefoil() -> GridDiagram:
    """The 5x5 right-handed trefoil with (tb, r) = (1, 0)."""
    return GridDiagram((2, 3, 4, 0, 1), (0, 1, 2, 3, 4))


@pytest.fixture
def split_link() -> GridDiagram:
    return GridDiagram((1, 0, 3, 2), (0, 1, 2, 3))
