import pytest

from grid_atlas.utils.string_utils import count_phrase
from grid_atlas.utils.string_utils import pluralize


class TestPluralize:
    @pytest.mark.parametrize(
        ("word", "count", "expected"),
        [
            ("class", 1, "class"),
            ("class", 2, "classes"),
            ("class", 0, "classes"),
            ("diagram", 1, "diagram"),
            ("diagram", 3, "diagrams"),
        ],
        ids=["one-class", "two-classes", "no-classes", "one-diagram", "three-diagrams"],
    )
    def test_agrees_with_count(self, word, count, expected):
        assert pluralize(word, count) == expected

    def test_count_phrase(self):
        assert count_phrase(2, "class") == "2 classes"
        assert count_phrase(1, "stuck diagram") == "1 stuck diagram"
