from hypothesis import strategies as st

from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import Corner


@st.composite
def knot_diagrams(draw, min_size: int = 2, max_size: int = 7) -> GridDiagram:
    """
    Random single-component diagrams.

    A knot diagram is fixed by its O rows and the n-cycle c -> x_col[o_row[c]]
    that walks the components, and every such pair gives a valid diagram.
    """
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    o_row = draw(st.permutations(range(n)))
    order = [0, *draw(st.permutations(range(1, n)))]
    x_row = [0] * n
    for index, column in enumerate(order):
        successor = order[(index + 1) % n]
        x_row[successor] = o_row[column]
    return GridDiagram(tuple(x_row), tuple(o_row))


corners = st.sampled_from(list(Corner))
