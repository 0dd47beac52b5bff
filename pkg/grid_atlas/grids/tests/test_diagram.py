import pytest

from grid_atlas.core.exceptions import GridParseError
from grid_atlas.core.exceptions import NotPermutation
from grid_atlas.core.exceptions import SharedSquare
from grid_atlas.core.exceptions import SizeMismatch
from grid_atlas.grids.diagram import components
from grid_atlas.grids.diagram import format_grid
from grid_atlas.grids.diagram import parse_grid
from grid_atlas.grids.diagram import validate


class TestValidate:
    def test_minimal_unknot(self):
        g = validate([1, 0], [0, 1])
        assert g.size == 2  # noqa: PLR2004
        assert g.x_col == (1, 0)
        assert g.o_col == (0, 1)

    @pytest.mark.parametrize(
        ("x_row", "o_row", "error"),
        [
            ([0, 1], [0, 1], SharedSquare),
            ([2, 4, 1, 3, 0], [0, 1, 2, 3, 4], SharedSquare),
            ([0, 0], [1, 1], NotPermutation),
            ([0, 2], [1, 0], NotPermutation),
            ([1, 0], [0, 1, 2], SizeMismatch),
            ([], [], SizeMismatch),
        ],
        ids=["shared_square", "shared_in_column_3", "repeated_row", "row_out_of_range", "lengths", "empty"],
    )
    def test_rejects_invalid(self, x_row, o_row, error):
        with pytest.raises(error):
            validate(x_row, o_row)

    def test_errors_are_validation_errors(self):
        """Grid errors surface through serializers as Django validation errors."""
        from django.core.exceptions import ValidationError

        with pytest.raises(ValidationError):
            validate([0, 1], [0, 1])


class TestComponents:
    def test_unknot(self, unknot):
        assert components(unknot) == 1

    def test_split_link(self, split_link):
        assert components(split_link) == 2  # noqa: PLR2004

    def test_trefoil(self, trefoil):
        assert components(trefoil) == 1


class TestTextFormat:
    def test_round_trip(self, trefoil):
        assert parse_grid(format_grid(trefoil)) == trefoil

    def test_parses_with_blank_lines(self):
        g = parse_grid("\nn=2\nX=1 0\n\nO=0 1\n")
        assert g.x_row == (1, 0)

    @pytest.mark.parametrize(
        "text",
        [
            "n=2\nX=1 0 1\nO=0 1",
            "n=2\nX=1 0\nO=0 1\nextra",
            "n=two\nX=1 0\nO=0 1",
            "n=2\nO=0 1\nX=1 0",
            "n=2\nX=1 a\nO=0 1",
        ],
        ids=["trailing_token", "trailing_line", "bad_size", "swapped_lines", "bad_token"],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(GridParseError):
            parse_grid(text)
