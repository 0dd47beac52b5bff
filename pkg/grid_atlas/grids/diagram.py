"""
Grid diagrams: validated storage, component count and the plain-text format.

Columns run left to right and rows bottom to top. ``x_row[c]`` and
``o_row[c]`` hold the rows of the X and the O in column ``c``. Horizontal
segments are oriented from O to X and vertical segments from X to O.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

from grid_atlas.core.exceptions import GridParseError
from grid_atlas.core.exceptions import NotPermutation
from grid_atlas.core.exceptions import SharedSquare
from grid_atlas.core.exceptions import SizeMismatch
from grid_atlas.utils.int_utils import int_tokens
from grid_atlas.utils.int_utils import to_int


def _inverse(permutation: Sequence[int]) -> tuple[int, ...]:
    inverse = [0] * len(permutation)
    for index, value in enumerate(permutation):
        inverse[value] = index
    return tuple(inverse)


@dataclass(frozen=True)
class GridDiagram:
    x_row: tuple[int, ...]
    o_row: tuple[int, ...]
    size: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "x_row", tuple(self.x_row))
        object.__setattr__(self, "o_row", tuple(self.o_row))
        object.__setattr__(self, "size", len(self.x_row))
        self._check()

    def _check(self):
        n = len(self.x_row)
        if n == 0 or len(self.o_row) != n:
            error_message = (
                f"X and O arrays must have the same positive length, "
                f"got {len(self.x_row)} and {len(self.o_row)}"
            )
            raise SizeMismatch(error_message)

        expected = set(range(n))
        for label, rows in (("X", self.x_row), ("O", self.o_row)):
            if set(rows) != expected:
                error_message = f"{label} rows {list(rows)} are not a permutation of 0..{n - 1}"
                raise NotPermutation(error_message)

        for column, (x, o) in enumerate(zip(self.x_row, self.o_row, strict=True)):
            if x == o:
                error_message = f"X and O share the square (column {column}, row {x})"
                raise SharedSquare(error_message)

    @cached_property
    def x_col(self) -> tuple[int, ...]:
        """Column of the X in each row."""
        return _inverse(self.x_row)

    @cached_property
    def o_col(self) -> tuple[int, ...]:
        """Column of the O in each row."""
        return _inverse(self.o_row)

    def markers(self) -> list[tuple[str, int, int]]:
        return [("X", c, r) for c, r in enumerate(self.x_row)] + [
            ("O", c, r) for c, r in enumerate(self.o_row)
        ]

    def __str__(self) -> str:
        return format_grid(self)


def validate(x_row: Sequence[int], o_row: Sequence[int]) -> GridDiagram:
    """Build a diagram, raising an InvalidGrid subclass when the arrays are not one."""
    if len(x_row) != len(o_row):
        error_message = f"X has {len(x_row)} entries but O has {len(o_row)}"
        raise SizeMismatch(error_message)
    return GridDiagram(tuple(x_row), tuple(o_row))


def component_cycles(g: GridDiagram) -> list[list[int]]:
    """
    Columns grouped by link component.

    Following the vertical segment of column c from its X to its O and then
    the horizontal segment of that row from the O to the next X lands on the
    column holding that X, so components are cycles of c -> x_col[o_row[c]].
    """
    seen = [False] * g.size
    cycles = []
    for start in range(g.size):
        if seen[start]:
            continue
        cycle = []
        column = start
        while not seen[column]:
            seen[column] = True
            cycle.append(column)
            column = g.x_col[g.o_row[column]]
        cycles.append(cycle)
    return cycles


def components(g: GridDiagram) -> int:
    return len(component_cycles(g))


def format_grid(g: GridDiagram) -> str:
    return "\n".join(
        [
            f"n={g.size}",
            "X=" + " ".join(str(r) for r in g.x_row),
            "O=" + " ".join(str(r) for r in g.o_row),
        ],
    )


def _parse_line(line: str, key: str) -> str:
    prefix = f"{key}="
    if not line.startswith(prefix):
        error_message = f"Expected a line starting with '{prefix}', got '{line}'"
        raise GridParseError(error_message)
    return line[len(prefix) :]


def _parse_rows(value: str, key: str) -> list[int]:
    rows = int_tokens(value)
    if rows is None:
        error_message = f"{key} must list integer row indices, got '{value}'"
        raise GridParseError(error_message)
    return rows


def parse_grid(text: str) -> GridDiagram:
    """
    Parse the three-line text format::

        n=2
        X=1 0
        O=0 1
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    expected_lines = 3
    if len(lines) != expected_lines:
        error_message = f"A grid file has exactly {expected_lines} lines, got {len(lines)}"
        raise GridParseError(error_message)

    size_text = _parse_line(lines[0], "n")
    size = to_int(size_text)
    if size is None:
        error_message = f"Grid size must be an integer, got '{size_text}'"
        raise GridParseError(error_message)

    x_row = _parse_rows(_parse_line(lines[1], "X"), "X")
    o_row = _parse_rows(_parse_line(lines[2], "O"), "O")
    for key, rows in (("X", x_row), ("O", o_row)):
        if len(rows) != size:
            error_message = f"{key} lists {len(rows)} rows but n={size}"
            raise GridParseError(error_message)

    return validate(x_row, o_row)
