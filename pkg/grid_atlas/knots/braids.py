"""
Braid words and grid diagrams of their closures.

Strands run upward. Every strand segment is a column with its X at the
bottom and its O at the top. A letter is one new row in which a strand
leaves its column sideways: for a positive letter the lower strand jumps
right over its neighbour, for a negative letter the upper strand jumps
left, so the horizontal jump is the over-strand and the crossing sign
matches the letter. The strands are closed up on the right.
"""

from dataclasses import dataclass

from grid_atlas.core.exceptions import InvalidLetter
from grid_atlas.grids.diagram import GridDiagram


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            error_message = f"A braid needs at least one strand, got {self.strands}"
            raise InvalidLetter(error_message)
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                error_message = f"Letter {letter} is not a generator of B_{self.strands}"
                raise InvalidLetter(error_message)

    @property
    def writhe(self) -> int:
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    @property
    def self_linking(self) -> int:
        """sl of the transverse closure: writhe minus strands."""
        return self.writhe - self.strands

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-letter for letter in self.letters))

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        tokens = text.replace(",", " ").split()
        try:
            letters = tuple(int(token) for token in tokens)
        except ValueError as exc:
            error_message = f"Braid letters must be integers, got '{text}'"
            raise InvalidLetter(error_message) from exc
        return cls(strands, letters)


def braid_to_grid(b: BraidWord) -> GridDiagram:
    """
    Grid of the braid closure, of size letters + 2 * strands.

    Rows from the bottom: one start row per strand, one row per letter, then
    one top row per strand with the last strand lowest. Each top row carries
    its strand to a return column at the far right, which runs down to the
    strand's start row and back left to the strand's first column.
    """
    k = len(b.letters)
    strands = b.strands

    # column id -> [x_row, o_row]; ``order`` keeps columns left to right
    columns: dict[int, list[int]] = {}
    order: list[int] = []
    current: list[int] = []

    for level in range(strands):
        columns[level] = [level, -1]
        order.append(level)
        current.append(level)

    next_id = strands
    for index, letter in enumerate(b.letters):
        row = strands + index
        lower = abs(letter) - 1
        left, right = current[lower], current[lower + 1]
        if letter > 0:
            leaving, anchor = left, right
            position = order.index(anchor) + 1
        else:
            leaving, anchor = right, left
            position = order.index(anchor)

        columns[leaving][1] = row
        columns[next_id] = [row, -1]
        order.insert(position, next_id)
        current[lower], current[lower + 1] = (anchor, next_id) if letter > 0 else (next_id, anchor)
        next_id += 1

    def top_row(level: int) -> int:
        return strands + k + (strands - 1 - level)

    for level, column in enumerate(current):
        columns[column][1] = top_row(level)

    for level in reversed(range(strands)):
        columns[next_id] = [top_row(level), level]
        order.append(next_id)
        next_id += 1

    return GridDiagram(
        tuple(columns[column][0] for column in order),
        tuple(columns[column][1] for column in order),
    )


def prop_family_words(n: int) -> tuple[BraidWord, BraidWord]:
    """
    The two braid words of the non-destabilizable transverse family at index n.

    The first, in B_{n+3}, is the braided form of the grid family; the second
    is a 3-braid with the same closure.
    """
    if n < 1:
        error_message = f"The family is indexed from 1, got {n}"
        raise InvalidLetter(error_message)

    ascending = list(range(1, n + 3))
    descending = list(range(n, 0, -1))
    wide = ascending + [n + 2] + [-(n + 1)] * 3 + descending + ascending + descending + ascending
    narrow = [-2, -2, 1] + [2, 2, 1, 1] * (n + 1) + [2]
    return BraidWord(n + 3, tuple(wide)), BraidWord(3, tuple(narrow))
