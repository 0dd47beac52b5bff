"""
Cromwell moves on grid diagrams and replayable move paths.

Stabilization variants are named by the empty cell of the new 2x2 block:
NW leaves the top-right cell empty, NE the bottom-right, SE the
bottom-left and SW the top-left. With these names X:NW changes (tb, r)
by (-1, +1), X:SE by (-1, -1), and X:NE and X:SW preserve both.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass

from grid_atlas.core.exceptions import IllegalCommutation
from grid_atlas.core.exceptions import IllegalMove
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import Axis
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.enums import Direction
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.symmetry import translate


@dataclass(frozen=True)
class TorusTranslate:
    direction: Direction

    def serialize(self) -> str:
        return f"TRANSLATE {self.direction.value}"


@dataclass(frozen=True)
class Commute:
    axis: Axis
    index: int

    def serialize(self) -> str:
        return f"COMMUTE {self.axis.value} {self.index}"


@dataclass(frozen=True)
class StabilizeX:
    column: int
    variant: Corner

    def serialize(self) -> str:
        return f"STAB X {self.variant.value} col {self.column}"


@dataclass(frozen=True)
class DestabilizeX:
    """Collapse the 2x2 block whose bottom-left cell is (column, row), wrapping on the torus."""

    column: int
    row: int
    variant: Corner

    def serialize(self) -> str:
        return f"DESTAB X {self.variant.value} at ({self.column},{self.row})"


MoveKind = TorusTranslate | Commute | StabilizeX | DestabilizeX


def torus_translate(g: GridDiagram, direction: Direction) -> GridDiagram:
    dc, dr = Direction(direction).offset
    return translate(g, dc, dr)


# COMMUTATION
# ------------------------------------------------------------------------------
def _row_span(g: GridDiagram, row: int) -> tuple[int, int]:
    return tuple(sorted((g.x_col[row], g.o_col[row])))  # type: ignore[return-value]


def _column_span(g: GridDiagram, column: int) -> tuple[int, int]:
    return tuple(sorted((g.x_row[column], g.o_row[column])))  # type: ignore[return-value]


def spans_commute(first: tuple[int, int], second: tuple[int, int]) -> bool:
    """Disjoint or strictly nested closed intervals; a shared endpoint is illegal."""
    (a_low, a_high), (b_low, b_high) = first, second
    disjoint = a_high < b_low or b_high < a_low
    nested = (a_low < b_low and b_high < a_high) or (b_low < a_low and a_high < b_high)
    return disjoint or nested


def legal_commutations(g: GridDiagram, *, cyclic: bool = False) -> list[Commute]:
    """
    Legal swaps of adjacent rows and columns.

    Index i swaps i with i + 1. With cyclic=True the wrapped pair (n-1, 0)
    is included as index n-1; it is the commutation seen after a torus
    translation.
    """
    n = g.size
    last = n if cyclic and n > 2 else n - 1  # noqa: PLR2004
    moves = []
    for axis, span in ((Axis.ROW, _row_span), (Axis.COL, _column_span)):
        for index in range(last):
            if spans_commute(span(g, index), span(g, (index + 1) % n)):
                moves.append(Commute(axis=axis, index=index))
    return moves


def commute(g: GridDiagram, m: Commute) -> GridDiagram:
    n = g.size
    first, second = m.index, (m.index + 1) % n
    span = _row_span if m.axis == Axis.ROW else _column_span
    if not 0 <= m.index < n or n < 2 or not spans_commute(span(g, first), span(g, second)):  # noqa: PLR2004
        error_message = f"Cannot commute {m.axis.label.lower()}s {first} and {second}"
        raise IllegalCommutation(error_message)

    if m.axis == Axis.ROW:
        swap = {first: second, second: first}
        return GridDiagram(
            tuple(swap.get(r, r) for r in g.x_row),
            tuple(swap.get(r, r) for r in g.o_row),
        )

    x_row, o_row = list(g.x_row), list(g.o_row)
    x_row[first], x_row[second] = x_row[second], x_row[first]
    o_row[first], o_row[second] = o_row[second], o_row[first]
    return GridDiagram(tuple(x_row), tuple(o_row))


# STABILIZATION
# ------------------------------------------------------------------------------
def stabilize_x(g: GridDiagram, c: int, v: Corner) -> GridDiagram:
    """Replace the X in column c by a 2x2 block; rows above it and columns right of it shift by one."""
    n = g.size
    if not 0 <= c < n:
        error_message = f"Column {c} is outside a grid of size {n}"
        raise IllegalMove(error_message)

    r = g.x_row[c]
    ro = g.o_row[c]
    row_o_column = g.o_col[r]
    ro_new = ro if ro < r else ro + 1

    def shift_row(row: int) -> int:
        return row + 1 if row > r else row

    x_row = [0] * (n + 1)
    o_row = [0] * (n + 1)
    for column in range(n):
        if column == c:
            continue
        target = column + 1 if column > c else column
        x_row[target] = shift_row(g.x_row[column])
        o_row[target] = shift_row(g.o_row[column])

    outer_target = row_o_column + 1 if row_o_column > c else row_o_column
    variant = Corner(v)
    if variant == Corner.NW:
        x_row[c], o_row[c] = r + 1, r
        x_row[c + 1], o_row[c + 1] = r, ro_new
        o_row[outer_target] = r + 1
    elif variant == Corner.NE:
        x_row[c], o_row[c] = r, r + 1
        x_row[c + 1], o_row[c + 1] = r + 1, ro_new
        o_row[outer_target] = r
    elif variant == Corner.SE:
        x_row[c], o_row[c] = r + 1, ro_new
        x_row[c + 1], o_row[c + 1] = r, r + 1
        o_row[outer_target] = r
    else:
        x_row[c], o_row[c] = r, ro_new
        x_row[c + 1], o_row[c + 1] = r + 1, r
        o_row[outer_target] = r + 1

    return GridDiagram(tuple(x_row), tuple(o_row))


def block_variant(g: GridDiagram, column: int, row: int) -> Corner | None:
    """
    The stabilization variant of the 2x2 block with bottom-left cell (column, row),
    or None when the block is not the image of an X stabilization.
    """
    n = g.size
    right, top = (column + 1) % n, (row + 1) % n

    def marker(c: int, r: int) -> str | None:
        if g.x_row[c] == r:
            return "X"
        if g.o_row[c] == r:
            return "O"
        return None

    bl, br = marker(column, row), marker(right, row)
    tl, tr = marker(column, top), marker(right, top)
    return {
        ("X", None, "O", "X"): Corner.NW,
        ("O", "X", "X", None): Corner.NE,
        ("X", "O", None, "X"): Corner.SE,
        (None, "X", "X", "O"): Corner.SW,
    }.get((tl, tr, bl, br))


def destabilize_x(g: GridDiagram, m: DestabilizeX) -> GridDiagram:
    n = g.size
    if n <= 2 or block_variant(g, m.column, m.row) != m.variant:  # noqa: PLR2004
        error_message = f"No X:{m.variant} block at ({m.column},{m.row})"
        raise IllegalMove(error_message)

    # Bring a wrapped block into the interior first.
    dc = -1 if m.column == n - 1 else 0
    dr = -1 if m.row == n - 1 else 0
    work = translate(g, dc, dr) if dc or dr else g
    c, r = m.column + dc, m.row + dr

    block_rows = (r, r + 1)
    outer_column_o = next(
        work.o_row[column] for column in (c, c + 1) if work.o_row[column] not in block_rows
    )
    outer_row_o_column = next(
        work.o_col[row] for row in block_rows if work.o_col[row] not in (c, c + 1)
    )

    def shift_row(row: int) -> int:
        return row - 1 if row > r + 1 else row

    x_row = [0] * (n - 1)
    o_row = [0] * (n - 1)
    for column in range(n):
        if column in (c, c + 1):
            continue
        target = column - 1 if column > c + 1 else column
        x_row[target] = shift_row(work.x_row[column])
        o_row[target] = shift_row(work.o_row[column])

    x_row[c] = r
    o_row[c] = shift_row(outer_column_o)
    o_row[outer_row_o_column - 1 if outer_row_o_column > c + 1 else outer_row_o_column] = r
    return GridDiagram(tuple(x_row), tuple(o_row))


def destabilizations(
    g: GridDiagram,
    mode: EquivalenceMode = EquivalenceMode.TOPOLOGICAL,
) -> list[tuple[DestabilizeX, GridDiagram]]:
    n = g.size
    if n <= 2:  # noqa: PLR2004
        return []

    allowed = EquivalenceMode(mode).stabilizations
    results = []
    for column in range(n):
        for row in range(n):
            variant = block_variant(g, column, row)
            if variant is not None and variant in allowed:
                move = DestabilizeX(column=column, row=row, variant=variant)
                results.append((move, destabilize_x(g, move)))
    return results


def is_destabilizable(g: GridDiagram, mode: EquivalenceMode = EquivalenceMode.TOPOLOGICAL) -> bool:
    if g.size <= 2:  # noqa: PLR2004
        return False
    allowed = EquivalenceMode(mode).stabilizations
    return any(
        block_variant(g, column, row) in allowed
        for column in range(g.size)
        for row in range(g.size)
    )


def neighbors(
    g: GridDiagram,
    mode: EquivalenceMode,
    max_size: int,
) -> list[tuple[MoveKind, GridDiagram]]:
    """Edges of the move graph at g: commutations, allowed (de)stabilizations."""
    result: list[tuple[MoveKind, GridDiagram]] = [
        (move, commute(g, move)) for move in legal_commutations(g, cyclic=True)
    ]
    if g.size < max_size:
        for column in range(g.size):
            for variant in sorted(EquivalenceMode(mode).stabilizations):
                move = StabilizeX(column=column, variant=variant)
                result.append((move, stabilize_x(g, column, variant)))
    result.extend(destabilizations(g, mode))
    return result


def apply_move(g: GridDiagram, move: MoveKind) -> GridDiagram:
    match move:
        case TorusTranslate(direction=direction):
            return torus_translate(g, direction)
        case Commute():
            return commute(g, move)
        case StabilizeX(column=column, variant=variant):
            return stabilize_x(g, column, variant)
        case DestabilizeX():
            return destabilize_x(g, move)
    error_message = f"Unknown move {move!r}"
    raise IllegalMove(error_message)


# MOVE PATHS
# ------------------------------------------------------------------------------
_TRANSLATE_RE = re.compile(r"^TRANSLATE (up|down|left|right)$")
_COMMUTE_RE = re.compile(r"^COMMUTE (row|col) (\d+)$")
_STAB_RE = re.compile(r"^STAB X (NE|NW|SE|SW) col (\d+)$")
_DESTAB_RE = re.compile(r"^DESTAB X (NE|NW|SE|SW) at \((\d+),\s*(\d+)\)$")


def parse_move(line: str) -> MoveKind:
    text = line.strip()
    if match := _TRANSLATE_RE.match(text):
        return TorusTranslate(Direction(match.group(1)))
    if match := _COMMUTE_RE.match(text):
        return Commute(Axis(match.group(1)), int(match.group(2)))
    if match := _STAB_RE.match(text):
        return StabilizeX(int(match.group(2)), Corner(match.group(1)))
    if match := _DESTAB_RE.match(text):
        return DestabilizeX(int(match.group(2)), int(match.group(3)), Corner(match.group(1)))
    error_message = f"Unrecognised move '{text}'"
    raise IllegalMove(error_message)


@dataclass(frozen=True)
class MovePath:
    moves: tuple[MoveKind, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def serialize(self) -> str:
        return "\n".join(move.serialize() for move in self.moves)

    @classmethod
    def parse(cls, text: str) -> "MovePath":
        return cls(tuple(parse_move(line) for line in text.splitlines() if line.strip()))

    def replay(self, g: GridDiagram) -> GridDiagram:
        for move in self.moves:
            g = apply_move(g, move)
        return g

    def then(self, moves: Iterable[MoveKind]) -> "MovePath":
        return MovePath(self.moves + tuple(moves))


def translation_moves(dc: int, dr: int, size: int) -> list[TorusTranslate]:
    """Shortest run of unit translations realising the shift (dc, dr) on a size-n torus."""
    dc, dr = dc % size, dr % size
    moves = []
    if dc <= size - dc:
        moves += [TorusTranslate(Direction.RIGHT)] * dc
    else:
        moves += [TorusTranslate(Direction.LEFT)] * (size - dc)
    if dr <= size - dr:
        moves += [TorusTranslate(Direction.UP)] * dr
    else:
        moves += [TorusTranslate(Direction.DOWN)] * (size - dr)
    return moves
