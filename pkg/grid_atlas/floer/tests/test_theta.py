import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.floer.enums import ThetaVerdict
from grid_atlas.floer.theta import FamilyLedger
from grid_atlas.floer.theta import Rectangle
from grid_atlas.floer.theta import family_sl_ledger
from grid_atlas.floer.theta import generator_points
from grid_atlas.floer.theta import theta_convention
from grid_atlas.floer.theta import theta_obstruction
from grid_atlas.floer.theta import theta_verdict
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.moves import stabilize_x
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import transpose
from grid_atlas.grids.symmetry import translate
from grid_atlas.grids.tests.strategies import knot_diagrams


class TestConvention:
    def test_unknot_stays_valid(self, unknot):
        assert theta_convention(unknot).size == 2

    @given(knot_diagrams())
    def test_twice_is_identity(self, g):
        assert theta_convention(theta_convention(g)) == g

    @given(knot_diagrams())
    def test_self_linking_preserved(self, g):
        assert classical_invariants(transpose(theta_convention(g))).sl == classical_invariants(g).sl


class TestRectangle:
    def test_wrapped_cells(self):
        rectangle = Rectangle(left=4, bottom=3, width=2, height=2)
        assert sorted(rectangle.cells(5)) == [(0, 3), (0, 4), (4, 3), (4, 4)]

    def test_strict_interior(self):
        rectangle = Rectangle(left=0, bottom=0, width=3, height=3)
        assert rectangle.strictly_contains((1, 2), 5)
        assert not rectangle.strictly_contains((0, 1), 5)
        assert not rectangle.strictly_contains((3, 1), 5)


class TestObstruction:
    def test_generator_is_one_point_per_line(self, trefoil):
        points = generator_points(trefoil)
        assert sorted(x for x, _ in points) == list(range(5))
        assert sorted(y for _, y in points) == list(range(5))

    def test_unknot(self, unknot):
        assert theta_obstruction(unknot)

    def test_max_self_linking_trefoil(self, trefoil):
        assert theta_obstruction(trefoil)
        assert theta_verdict(trefoil) == ThetaVerdict.OBSTRUCTED
        assert theta_verdict(trefoil).label == "OBSTRUCTED (theta nonzero)"

    def test_stabilized_unknot_is_inconclusive(self, unknot):
        assert theta_verdict(stabilize_x(unknot, 0, Corner.NW)) == ThetaVerdict.INCONCLUSIVE

    @given(knot_diagrams(max_size=6), st.integers(0, 5))
    @hypothesis_settings(max_examples=200)
    def test_vanishes_under_positive_stabilization(self, g, column):
        assert not theta_obstruction(stabilize_x(g, column % g.size, Corner.NW))

    @given(knot_diagrams(max_size=6), st.integers(0, 5), st.integers(0, 5))
    def test_translation_invariant(self, g, dc, dr):
        moved = translate(g, dc, dr)
        assert canonical_key(moved) == canonical_key(g)
        assert theta_obstruction(moved) == theta_obstruction(g)

    def test_links_rejected(self, split_link):
        with pytest.raises(MultiComponent):
            theta_obstruction(split_link)

    def test_explicit_five_by_five(self):
        assert theta_obstruction(GridDiagram((2, 3, 4, 0, 1), (0, 1, 2, 3, 4)))


class TestFamilyLedger:
    @pytest.mark.parametrize(
        ("n", "expected"),
        [(1, FamilyLedger(10, 3, 5, 2)), (2, FamilyLedger(13, 5, 9, 4))],
        ids=["n1", "n2"],
    )
    def test_values(self, n, expected):
        assert family_sl_ledger(n) == expected

    @given(st.integers(1, 50))
    def test_gap(self, n):
        ledger = family_sl_ledger(n)
        assert ledger.gap == ledger.sl_t1 - ledger.sl_t2

    def test_index_starts_at_one(self):
        with pytest.raises(ValueError, match="indexed from 1"):
            family_sl_ledger(0)
