import pytest
from hypothesis import given
from hypothesis import settings as hypothesis_settings
from hypothesis import strategies as st

from grid_atlas.core.exceptions import IllegalCommutation
from grid_atlas.core.exceptions import IllegalMove
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import Axis
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.enums import Direction
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.moves import Commute
from grid_atlas.grids.moves import DestabilizeX
from grid_atlas.grids.moves import MovePath
from grid_atlas.grids.moves import StabilizeX
from grid_atlas.grids.moves import TorusTranslate
from grid_atlas.grids.moves import commute
from grid_atlas.grids.moves import destabilizations
from grid_atlas.grids.moves import legal_commutations
from grid_atlas.grids.moves import neighbors
from grid_atlas.grids.moves import parse_move
from grid_atlas.grids.moves import spans_commute
from grid_atlas.grids.moves import stabilize_x
from grid_atlas.grids.moves import torus_translate
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.tests.strategies import corners
from grid_atlas.grids.tests.strategies import knot_diagrams

EXPECTED_DELTAS = {
    Corner.NE: (0, 0),
    Corner.SW: (0, 0),
    Corner.NW: (-1, 1),
    Corner.SE: (-1, -1),
}


def assert_invariant_deltas(g: GridDiagram, data) -> None:
    column = data.draw(st.integers(min_value=0, max_value=g.size - 1))
    variant = data.draw(corners)
    base = classical_invariants(g)
    stabilized = stabilize_x(g, column, variant)
    after = classical_invariants(stabilized)
    assert stabilized.size == g.size + 1
    assert (after.tb - base.tb, after.r - base.r) == EXPECTED_DELTAS[variant]
    if variant == Corner.NW:
        assert after.sl == base.sl - 2
    else:
        assert after.sl == base.sl


def assert_commutations_keep_invariants(g: GridDiagram) -> None:
    base = classical_invariants(g)
    for move in legal_commutations(g, cyclic=True):
        assert classical_invariants(commute(g, move)) == base


class TestTorusTranslate:
    @given(knot_diagrams(), st.sampled_from(list(Direction)))
    def test_order_n(self, g, direction):
        moved = g
        for _ in range(g.size):
            moved = torus_translate(moved, direction)
        assert moved == g

    @given(knot_diagrams(), st.sampled_from(list(Direction)))
    def test_preserves_invariants(self, g, direction):
        assert classical_invariants(torus_translate(g, direction)) == classical_invariants(g)

    def test_up_wraps_top_row(self, unknot):
        assert torus_translate(unknot, Direction.UP) == GridDiagram((0, 1), (1, 0))


class TestCommutation:
    @pytest.mark.parametrize(
        ("first", "second", "legal"),
        [
            ((0, 1), (2, 4), True),
            ((0, 4), (1, 3), True),
            ((0, 3), (2, 4), False),
            ((0, 2), (2, 4), False),
            ((1, 3), (1, 4), False),
        ],
        ids=["disjoint", "nested", "interleaved", "touching", "shared_endpoint"],
    )
    def test_span_rule(self, first, second, legal):
        assert spans_commute(first, second) is legal
        assert spans_commute(second, first) is legal

    def test_unknot_has_none(self, unknot):
        assert legal_commutations(unknot) == []
        assert legal_commutations(unknot, cyclic=True) == []

    def test_illegal_commutation_raises(self, unknot):
        with pytest.raises(IllegalCommutation):
            commute(unknot, Commute(Axis.ROW, 0))

    @given(knot_diagrams(min_size=3))
    def test_involution_and_invariance(self, g):
        for move in legal_commutations(g, cyclic=True):
            swapped = commute(g, move)
            assert commute(swapped, move) == g
            assert classical_invariants(swapped) == classical_invariants(g)

    def test_cyclic_pair_is_listed_last(self):
        g = GridDiagram((2, 3, 0, 1, 4), (0, 1, 3, 4, 2))
        plain = set(legal_commutations(g))
        cyclic = set(legal_commutations(g, cyclic=True))
        assert plain <= cyclic
        assert all(move.index == g.size - 1 for move in cyclic - plain)


class TestStabilization:
    @pytest.mark.parametrize(
        ("variant", "expected"),
        [
            (Corner.NW, GridDiagram((2, 1, 0), (1, 0, 2))),
            (Corner.SE, GridDiagram((2, 1, 0), (0, 2, 1))),
            (Corner.NE, GridDiagram((1, 2, 0), (2, 0, 1))),
        ],
        ids=["nw", "se", "ne"],
    )
    def test_unknot_images(self, unknot, variant, expected):
        assert stabilize_x(unknot, 0, variant) == expected

    @hypothesis_settings(max_examples=300)
    @given(knot_diagrams(max_size=6), st.data())
    def test_invariant_deltas(self, g, data):
        assert_invariant_deltas(g, data)

    @pytest.mark.slow
    @hypothesis_settings(max_examples=1500, deadline=None)
    @given(knot_diagrams(min_size=5, max_size=7), st.data())
    def test_invariant_deltas_up_to_size_seven(self, g, data):
        assert_invariant_deltas(g, data)
        assert_commutations_keep_invariants(g)

    @given(knot_diagrams(max_size=6), st.data())
    def test_destabilization_undoes_stabilization(self, g, data):
        column = data.draw(st.integers(min_value=0, max_value=g.size - 1))
        variant = data.draw(corners)
        results = destabilizations(stabilize_x(g, column, variant))
        target = canonical_key(g)
        assert any(canonical_key(result) == target for _, result in results)

    def test_column_out_of_range(self, unknot):
        with pytest.raises(IllegalMove):
            stabilize_x(unknot, 2, Corner.NE)


class TestDestabilizations:
    def test_floor_at_size_two(self, unknot):
        assert destabilizations(unknot) == []

    def test_minimal_trefoil_has_none(self, trefoil):
        assert destabilizations(trefoil) == []

    def test_mode_filters_variants(self, unknot):
        stabilized = stabilize_x(unknot, 0, Corner.NW)
        legendrian = destabilizations(stabilized, EquivalenceMode.LEGENDRIAN)
        assert all(move.variant in {Corner.NE, Corner.SW} for move, _ in legendrian)
        topological = destabilizations(stabilized, EquivalenceMode.TOPOLOGICAL)
        assert any(move.variant == Corner.NW for move, _ in topological)

    @given(knot_diagrams(min_size=3, max_size=6))
    def test_destabilizations_drop_size(self, g):
        for _, result in destabilizations(g):
            assert result.size == g.size - 1


class TestNeighbors:
    def test_no_stabilizations_at_ceiling(self, trefoil):
        edges = neighbors(trefoil, EquivalenceMode.TOPOLOGICAL, max_size=trefoil.size)
        assert not any(isinstance(move, StabilizeX) for move, _ in edges)

    def test_counts_per_move_type(self, trefoil):
        edges = neighbors(trefoil, EquivalenceMode.LEGENDRIAN, max_size=6)
        stabilizations = [move for move, _ in edges if isinstance(move, StabilizeX)]
        commutations = [move for move, _ in edges if isinstance(move, Commute)]
        assert len(stabilizations) == 2 * trefoil.size
        assert commutations == legal_commutations(trefoil, cyclic=True)

    @hypothesis_settings(max_examples=50)
    @given(knot_diagrams(max_size=5), st.sampled_from(list(EquivalenceMode)))
    def test_edges_are_reversible(self, g, mode):
        source = canonical_key(g)
        for _, neighbor in neighbors(g, mode, max_size=g.size + 1):
            back = {canonical_key(result) for _, result in neighbors(neighbor, mode, max_size=g.size + 1)}
            assert source in back


class TestMovePath:
    def test_serialization_round_trip(self):
        path = MovePath(
            (
                TorusTranslate(Direction.UP),
                Commute(Axis.ROW, 3),
                StabilizeX(2, Corner.NW),
                DestabilizeX(4, 1, Corner.SE),
            ),
        )
        assert path.serialize().splitlines() == [
            "TRANSLATE up",
            "COMMUTE row 3",
            "STAB X NW col 2",
            "DESTAB X SE at (4,1)",
        ]
        assert MovePath.parse(path.serialize()) == path

    def test_rejects_unknown_lines(self):
        with pytest.raises(IllegalMove):
            parse_move("FLYPE row 2")

    def test_replay(self, unknot):
        path = MovePath((StabilizeX(0, Corner.NE), TorusTranslate(Direction.RIGHT)))
        assert path.replay(unknot) == torus_translate(stabilize_x(unknot, 0, Corner.NE), Direction.RIGHT)
