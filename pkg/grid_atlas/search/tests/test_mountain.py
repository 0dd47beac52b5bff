import pytest

from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.moves import stabilize_x
from grid_atlas.knots.identify import KnotId
from grid_atlas.knots.identify import identify
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.cluster import cluster
from grid_atlas.search.enumeration import PruneFlags
from grid_atlas.search.enumeration import enumerate_diagrams
from grid_atlas.search.enums import MergeRelation
from grid_atlas.search.enums import StabilizationSign
from grid_atlas.search.mountain import MergeRow
from grid_atlas.search.mountain import MountainRange
from grid_atlas.search.mountain import mountain_range
from grid_atlas.search.mountain import stabilization_image

BUDGET = SearchBudget(7, 50_000, 600_000)


def tables_for(name: str, n: int, budget: SearchBudget):
    by_point: dict[tuple[int, int], list] = {}
    for g in enumerate_diagrams(n):
        if str(identify(g)) == name:
            invariants = classical_invariants(g)
            by_point.setdefault((invariants.tb, invariants.r), []).append(g)
    return [cluster(diagrams, EquivalenceMode.LEGENDRIAN, budget) for diagrams in by_point.values()]


class TestMergeRow:
    def test_text_form(self):
        row = MergeRow(
            point=(1, 0),
            sign=StabilizationSign.PLUS,
            groups=(("L1", "L2"), ("L3",), ("L4",)),
            separators=(MergeRelation.PROVEN, MergeRelation.CONJECTURED),
        )
        assert row.text == "L1,L2|L3:L4"
        assert row.persists

    def test_single_group_does_not_persist(self):
        row = MergeRow(point=(1, 0), sign=StabilizationSign.MINUS, groups=(("L1", "L2"),), separators=())
        assert row.text == "L1,L2"
        assert not row.persists


class TestMountainRange:
    def test_empty(self):
        empty = mountain_range(KnotId("4_1"), [], BUDGET)
        assert empty == MountainRange(knot="4_1")
        assert empty.points() == {}

    @pytest.mark.parametrize(
        ("sign", "shift"),
        [(StabilizationSign.PLUS, (-1, 1)), (StabilizationSign.MINUS, (-1, -1))],
        ids=["plus", "minus"],
    )
    def test_stabilization_image(self, trefoil, sign, shift):
        before = classical_invariants(trefoil)
        after = classical_invariants(stabilization_image(trefoil, sign))
        assert (after.tb - before.tb, after.r - before.r) == shift

    def test_right_trefoil(self, trefoil):
        table = cluster([trefoil], EquivalenceMode.LEGENDRIAN, BUDGET)
        result = mountain_range(KnotId("m(3_1)"), [table], BUDGET)
        assert result.peak_points() == [(1, 0)]
        assert list(result.points()) == [(1, 0), (0, -1), (0, 1)]
        assert result.boxes() == []
        assert {(arrow.source, arrow.sign) for arrow in result.arrows} == {
            ("L1", StabilizationSign.PLUS),
            ("L1", StabilizationSign.MINUS),
        }

    def test_lower_levels_alone_have_no_peaks(self, trefoil):
        stabilized = stabilize_x(trefoil, 0, StabilizationSign.PLUS.variant)
        table = cluster([stabilized], EquivalenceMode.LEGENDRIAN, BUDGET)
        result = mountain_range(KnotId("m(3_1)"), [table], BUDGET, depth=0)
        assert list(result.points()) == [(0, 1)]
        assert result.peak_points() == []

    def test_every_lower_class_is_reached(self, unknot):
        table = cluster([unknot], EquivalenceMode.LEGENDRIAN, BUDGET)
        result = mountain_range(KnotId("unknot"), [table], BUDGET, depth=2)
        targets = {arrow.target for arrow in result.arrows}
        for entry in result.classes:
            assert entry.peak or entry.label in targets
        assert [len(entries) for entries in result.points().values()] == [1, 1, 1, 1, 1, 1]
        assert list(result.points()) == [(-1, 0), (-2, -1), (-2, 1), (-3, -2), (-3, 0), (-3, 2)]


def arc_index_range(name: str, tb: int, n: int, budget: SearchBudget) -> MountainRange:
    """The range of a knot of arc index n, built from all its size-n diagrams; these all sit at tb."""
    by_point: dict[tuple[int, int], list] = {}
    for g in enumerate_diagrams(n, PruneFlags(skip_destabilizable=True)):
        invariants = classical_invariants(g)
        if invariants.tb != tb or str(identify(g)) != name:
            continue
        by_point.setdefault((invariants.tb, invariants.r), []).append(g)
    tables = [cluster(diagrams, EquivalenceMode.LEGENDRIAN, budget) for diagrams in by_point.values()]
    return mountain_range(KnotId(name), tables, budget, depth=0)


@pytest.mark.slow
class TestAtlasRanges:
    def test_left_trefoil(self):
        result = mountain_range(KnotId("3_1"), tables_for("3_1", 5, BUDGET), BUDGET)
        assert result.peak_points() == [(-6, -1), (-6, 1)]
        assert list(result.points()) == [(-6, -1), (-6, 1), (-7, -2), (-7, 0), (-7, 2)]
        assert all(len(entries) == 1 for entries in result.points().values())

    def test_right_trefoil(self):
        result = mountain_range(KnotId("m(3_1)"), tables_for("m(3_1)", 5, BUDGET), BUDGET, depth=0)
        assert result.peak_points() == [(1, 0)]

    def test_figure_eight(self):
        budget = SearchBudget(8, 200_000, 600_000)
        result = mountain_range(KnotId("4_1"), tables_for("4_1", 6, budget), budget, depth=0)
        assert result.peak_points() == [(-3, 0)]
        assert len(result.points()[(-3, 0)]) == 1

    @pytest.mark.parametrize(
        ("name", "tb", "peaks"),
        [
            ("m(5_1)", 3, [(3, 0)]),
            ("5_1", -10, [(-10, -3), (-10, -1), (-10, 1), (-10, 3)]),
            ("5_2", -8, [(-8, -1), (-8, 1)]),
        ],
        ids=["right-torus-2-5", "left-torus-2-5", "5-2"],
    )
    def test_arc_index_seven_peaks(self, settings, name, tb, peaks):
        settings.GRID_ATLAS = {**settings.GRID_ATLAS, "BRACKET_MAX_CROSSINGS": 49}
        result = arc_index_range(name, tb, 7, SearchBudget(9, 20_000, 600_000))
        assert result.peak_points() == peaks
        assert all(entry.peak for entry in result.classes)
