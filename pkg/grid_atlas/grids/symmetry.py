import struct

from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import KeyMode

CanonicalKey = bytes


def translate(g: GridDiagram, dc: int, dr: int) -> GridDiagram:
    """Shift every marker dc columns right and dr rows up on the torus."""
    n = g.size
    x_row = [0] * n
    o_row = [0] * n
    for column in range(n):
        target = (column + dc) % n
        x_row[target] = (g.x_row[column] + dr) % n
        o_row[target] = (g.o_row[column] + dr) % n
    return GridDiagram(tuple(x_row), tuple(o_row))


def reverse(g: GridDiagram) -> GridDiagram:
    """Swap X's and O's, reversing the orientation: (tb, r) -> (tb, -r)."""
    return GridDiagram(g.o_row, g.x_row)


def mirror_mu(g: GridDiagram) -> GridDiagram:
    """Legendrian mirror: rotate the grid by 180 degrees."""
    top = g.size - 1
    return GridDiagram(
        tuple(top - r for r in reversed(g.x_row)),
        tuple(top - r for r in reversed(g.o_row)),
    )


def transverse_mirror(g: GridDiagram) -> GridDiagram:
    return reverse(mirror_mu(g))


def topological_mirror(g: GridDiagram) -> GridDiagram:
    """Reflect in a vertical axis; the knot type becomes its mirror image."""
    return GridDiagram(tuple(reversed(g.x_row)), tuple(reversed(g.o_row)))


def transpose(g: GridDiagram) -> GridDiagram:
    """Reflect in the main diagonal; markers keep their type."""
    return GridDiagram(g.x_col, g.o_col)


def _oriented_cells(g: GridDiagram) -> tuple[int, ...]:
    n = g.size
    best = None
    for dc in range(n):
        base = g.x_row[dc]
        cells = tuple((g.x_row[(j + dc) % n] - base) % n for j in range(n)) + tuple(
            (g.o_row[(j + dc) % n] - base) % n for j in range(n)
        )
        if best is None or cells < best:
            best = cells
    return best


def canonical_cells(g: GridDiagram, mode: KeyMode = KeyMode.ORIENTED) -> tuple[int, ...]:
    """
    Lexicographically least (x_row + o_row) over all torus translations.

    A translation whose column shift is fixed is minimised by moving the
    first X to row 0, so only n candidates need comparing.
    """
    cells = _oriented_cells(g)
    if mode == KeyMode.UNORIENTED:
        cells = min(cells, _oriented_cells(reverse(g)))
    return cells


def canonical_key(g: GridDiagram, mode: KeyMode = KeyMode.ORIENTED) -> CanonicalKey:
    cells = canonical_cells(g, mode)
    return struct.pack(f">{len(cells) + 1}H", g.size, *cells)


def canonical_form(g: GridDiagram, mode: KeyMode = KeyMode.ORIENTED) -> GridDiagram:
    return diagram_from_key(canonical_key(g, mode))


def diagram_key(g: GridDiagram) -> bytes:
    """The cells of g itself, packed like a canonical key."""
    cells = g.x_row + g.o_row
    return struct.pack(f">{len(cells) + 1}H", g.size, *cells)


def diagram_from_key(key: CanonicalKey) -> GridDiagram:
    (n,) = struct.unpack_from(">H", key)
    cells = struct.unpack_from(f">{2 * n}H", key, 2)
    return GridDiagram(cells[:n], cells[n:])


def key_to_hex(key: CanonicalKey) -> str:
    return key.hex()


def key_from_hex(text: str) -> CanonicalKey:
    return bytes.fromhex(text.strip())


def translation_between(source: GridDiagram, target: GridDiagram) -> tuple[int, int] | None:
    """The (dc, dr) with translate(source, dc, dr) == target, if any."""
    if source.size != target.size:
        return None
    n = source.size
    for dc in range(n):
        dr = (target.x_row[dc % n] - source.x_row[0]) % n
        if translate(source, dc, dr) == target:
            return dc, dr
    return None
