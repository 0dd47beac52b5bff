import pytest

from grid_atlas.atlas.enums import RelationStatus
from grid_atlas.atlas.enums import Symmetry
from grid_atlas.atlas.records import AtlasRecord
from grid_atlas.atlas.records import ClassEntry
from grid_atlas.atlas.records import build_record
from grid_atlas.atlas.records import symmetry_status
from grid_atlas.atlas.tests.factories import trefoil_record
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.moves import stabilize_x
from grid_atlas.knots.identify import KnotId
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.cache import ClassCache

SMALL = SearchBudget(4, 10_000, 60_000)


def entry(label: str, tb: int, r: int, ruling: str) -> ClassEntry:
    return ClassEntry(
        label=label,
        representative=GridDiagram((1, 0), (0, 1)),
        tb=tb,
        r=r,
        ruling=ruling,
        theta=False,
    )


class TestAtlasRecord:
    def test_sl(self):
        assert entry("L1", 1, -2, "1").sl == 3

    def test_proven_nonsimple_needs_different_rulings(self):
        record = AtlasRecord(
            knot="m(5_2)",
            arc_index=7,
            max_tb=1,
            classes=(entry("L1", 1, 0, "1"), entry("L2", 1, 0, "1+z^2")),
            nonsimple_candidate=True,
        )
        assert record.proven_nonsimple
        assert record.points() == [(1, 0)]

    def test_equal_rulings_are_only_a_candidate(self):
        record = AtlasRecord(
            knot="K",
            arc_index=7,
            max_tb=1,
            classes=(entry("L1", 1, 0, "1"), entry("L2", 1, 0, "1")),
            nonsimple_candidate=True,
        )
        assert not record.proven_nonsimple

    def test_undefined_rulings_prove_nothing(self):
        record = AtlasRecord(
            knot="K",
            arc_index=7,
            max_tb=1,
            classes=(entry("L1", 1, 1, "-"), entry("L2", 1, 1, "1")),
        )
        assert not record.proven_nonsimple

    def test_points_order(self):
        record = AtlasRecord(
            knot="3_1",
            arc_index=5,
            max_tb=-6,
            classes=(entry("L2", -6, 1, "-"), entry("L1", -6, -1, "-")),
        )
        assert record.points() == [(-6, -1), (-6, 1)]


class TestSymmetryStatus:
    @pytest.mark.parametrize("symmetry", list(Symmetry), ids=[s.name for s in Symmetry])
    def test_unknot_is_symmetric(self, unknot, symmetry):
        assert symmetry_status(unknot, symmetry, SMALL) == RelationStatus.PROVEN

    def test_rotation_flip_is_false(self, unknot):
        stabilized = stabilize_x(unknot, 0, Corner.NW)
        assert symmetry_status(stabilized, Symmetry.MU, SMALL) == RelationStatus.FALSE
        assert symmetry_status(stabilized, Symmetry.REVERSE, SMALL) == RelationStatus.FALSE


class TestBuildRecord:
    def test_unknot(self, unknot):
        record, mr = build_record(KnotId("unknot"), [unknot], SMALL)
        assert record.knot == "unknot"
        assert record.arc_index == 2
        assert record.max_tb == -1
        assert [(c.label, c.tb, c.r) for c in record.classes] == [("L1", -1, 0)]
        assert record.classes[0].ruling == "1"
        assert record.classes[0].theta is True
        assert set(record.classes[0].symmetries.values()) == {RelationStatus.PROVEN}
        assert not record.nonsimple_candidate
        assert record.merge_table == ()
        assert record.mfw_bound is None
        assert mr.peak_points() == [(-1, 0)]

    def test_unknot_transverse_classes(self, unknot):
        record, _ = build_record(KnotId("unknot"), [unknot], SMALL)
        assert len(record.transverse_classes) == 1
        top = record.transverse_classes[0]
        assert top.sl == -1
        assert top.members == ("L1", "L3")
        assert top.theta is True

    def test_right_trefoil(self, trefoil):
        record, _ = build_record(KnotId("m(3_1)"), [trefoil], SearchBudget(6, 5_000, 60_000))
        expected = trefoil_record()
        assert (record.arc_index, record.max_tb) == (expected.arc_index, expected.max_tb)
        assert len(record.classes) == 1
        assert record.classes[0].ruling == "2+z^2"
        assert record.classes[0].theta is True

    def test_classes_come_from_the_cache(self, unknot, tmp_path):
        cache = ClassCache(tmp_path / "classes")
        build_record(KnotId("unknot"), [unknot], SMALL, cache=cache)
        assert cache.path_for("unknot", -1, 0, "leg").exists()
