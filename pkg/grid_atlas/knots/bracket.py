"""
Kauffman bracket, Jones polynomial and determinant of a grid diagram.

The diagram is first read off as a planar code: walking every component
labels the arcs between consecutive crossings, and each crossing becomes a
4-tuple (a, b, c, d) listing its arcs counter-clockwise starting at the
incoming under-arc. Horizontal segments are the over-strands.

Bracket values are polynomials in A; the Jones polynomial substitutes
A = t^(-1/4) and is stored in powers of t^(1/2).
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

import sympy as sp

from grid_atlas.core.conf import atlas_setting
from grid_atlas.core.exceptions import InternalConsistencyError
from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.core.exceptions import TooManyCrossings
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import component_cycles
from grid_atlas.grids.invariants import crossings
from grid_atlas.grids.invariants import horizontal_direction
from grid_atlas.grids.invariants import vertical_direction
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import diagram_from_key
from grid_atlas.grids.symmetry import translate
from grid_atlas.knots.enums import BracketMethod
from grid_atlas.knots.polynomials import LaurentPolynomial

logger = logging.getLogger(__name__)

A = LaurentPolynomial.monomial(1)
A_INVERSE = LaurentPolynomial.monomial(-1)
LOOP = LaurentPolynomial({2: -1, -2: -1})

PDCrossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarCode:
    crossings: tuple[PDCrossing, ...]
    free_loops: int
    writhe: int
    components: int

    @property
    def arcs(self) -> int:
        return 2 * len(self.crossings)


def planar_code(g: GridDiagram) -> PlanarCode:
    grid_crossings = {(c.column, c.row): c for c in crossings(g)}
    passages: dict[tuple[int, int], dict[str, int]] = defaultdict(dict)
    next_label = 0
    free_loops = 0
    cycles = component_cycles(g)

    for cycle in cycles:
        events: list[tuple[tuple[int, int], str]] = []
        for column in cycle:
            x, o = g.x_row[column], g.o_row[column]
            step = 1 if o > x else -1
            events.extend(
                ((column, row), "v") for row in range(x + step, o, step) if (column, row) in grid_crossings
            )
            target = g.x_col[o]
            step = 1 if target > column else -1
            events.extend(
                ((other, o), "h") for other in range(column + step, target, step) if (other, o) in grid_crossings
            )

        if not events:
            free_loops += 1
            continue

        count = len(events)
        for index, (key, strand) in enumerate(events):
            passages[key][f"{strand}_in"] = next_label + index
            passages[key][f"{strand}_out"] = next_label + (index + 1) % count
        next_label += count

    code = []
    for (column, row), labels in sorted(passages.items()):
        dv = vertical_direction(g, column)
        dh = horizontal_direction(g, row)
        if dh == dv:
            b, d = labels["h_out"], labels["h_in"]
        else:
            b, d = labels["h_in"], labels["h_out"]
        code.append((labels["v_in"], b, labels["v_out"], d))

    return PlanarCode(
        crossings=tuple(code),
        free_loops=free_loops,
        writhe=sum(c.sign for c in grid_crossings.values()),
        components=len(cycles),
    )


# STATE SUM
# ------------------------------------------------------------------------------
def _find(parent: list[int], label: int) -> int:
    while parent[label] != label:
        parent[label] = parent[parent[label]]
        label = parent[label]
    return label


def _state_sum(code: PlanarCode) -> LaurentPolynomial:
    """Sum over all 2^k smoothings; each loop contributes a factor -A^2 - A^-2."""
    arcs = code.arcs
    total = LaurentPolynomial()
    loop_powers = [LOOP**power for power in range(arcs + 1)]
    for state in range(1 << len(code.crossings)):
        parent = list(range(arcs))
        a_smoothings = 0
        for index, (a, b, c, d) in enumerate(code.crossings):
            if state >> index & 1:
                pairs = ((a, d), (b, c))
            else:
                pairs = ((a, b), (c, d))
                a_smoothings += 1
            for p, q in pairs:
                parent[_find(parent, p)] = _find(parent, q)
        loops = len({_find(parent, label) for label in range(arcs)})
        b_smoothings = len(code.crossings) - a_smoothings
        total = total + loop_powers[loops].shift(a_smoothings - b_smoothings)
    return total


# CONTRACTION
# ------------------------------------------------------------------------------
def _join(matching: dict[int, int], p: int, q: int) -> int:
    """Add the arc p-q to a pairing of open arc ends; returns the number of loops closed."""
    if p == q:
        return 1

    p_open, q_open = p in matching, q in matching
    if p_open and q_open:
        p_end, q_end = matching.pop(p), matching.pop(q)
        if p_end == q:
            return 1
        matching[p_end], matching[q_end] = q_end, p_end
    elif p_open:
        p_end = matching.pop(p)
        matching[p_end], matching[q] = q, p_end
    elif q_open:
        q_end = matching.pop(q)
        matching[q_end], matching[p] = p, q_end
    else:
        matching[p], matching[q] = q, p
    return 0


def _contraction_order(code: PlanarCode) -> list[PDCrossing]:
    remaining = list(code.crossings)
    seen: set[int] = set()
    order = []
    while remaining:
        best = max(range(len(remaining)), key=lambda i: (sum(label in seen for label in remaining[i]), -i))
        crossing = remaining.pop(best)
        order.append(crossing)
        seen.update(crossing)
    return order


def _contract(code: PlanarCode) -> LaurentPolynomial:
    """
    Process crossings one at a time, keeping for each pairing of the open arc
    ends the weighted sum of all partial states that produce it.
    """
    loop_powers = [LOOP**power for power in range(3)]
    states: dict[tuple[tuple[int, int], ...], LaurentPolynomial] = {(): LaurentPolynomial.constant(1)}

    for a, b, c, d in _contraction_order(code):
        updated: dict[tuple[tuple[int, int], ...], LaurentPolynomial] = defaultdict(LaurentPolynomial)
        for pairing, weight in states.items():
            for pairs, factor in ((((a, b), (c, d)), A), (((a, d), (b, c)), A_INVERSE)):
                matching = {}
                for p, q in pairing:
                    matching[p], matching[q] = q, p
                loops = sum(_join(matching, p, q) for p, q in pairs)
                key = tuple(sorted((p, q) for p, q in matching.items() if p < q))
                updated[key] = updated[key] + weight * factor * loop_powers[loops]
        states = {key: value for key, value in updated.items() if value}

    leftover = [key for key in states if key]
    if leftover:
        error_message = f"Open arcs {leftover[0]} left after contracting every crossing"
        logger.error(error_message)
        raise InternalConsistencyError(error_message)
    return states.get((), LaurentPolynomial())


def kauffman_bracket(g: GridDiagram, method: BracketMethod = BracketMethod.AUTO) -> LaurentPolynomial:
    """Normalised bracket in A, with the unknot equal to 1."""
    code = planar_code(g)
    count = len(code.crossings)
    ceiling = atlas_setting("BRACKET_MAX_CROSSINGS")
    if count > ceiling:
        error_message = f"Diagram has {count} crossings, above the bracket ceiling of {ceiling}"
        raise TooManyCrossings(error_message)

    method = BracketMethod(method)
    if method == BracketMethod.AUTO:
        naive = count <= atlas_setting("BRACKET_NAIVE_MAX_CROSSINGS")
        method = BracketMethod.STATES if naive else BracketMethod.CONTRACTION

    raw = _state_sum(code) if method == BracketMethod.STATES else _contract(code)
    raw = raw * LOOP**code.free_loops
    return raw.divide_exact(LOOP)


# JONES
# ------------------------------------------------------------------------------
@dataclass(frozen=True)
class JonesPolynomial:
    """Jones polynomial in powers of t^(1/2)."""

    half_steps: LaurentPolynomial

    @property
    def half_integral(self) -> bool:
        return any(exponent % 2 for exponent, _ in self.half_steps.items())

    def in_t(self) -> LaurentPolynomial:
        if self.half_integral:
            error_message = f"Jones polynomial {self} has half-integral exponents"
            raise ValueError(error_message)
        return LaurentPolynomial({e // 2: c for e, c in self.half_steps.items()})

    def mirror(self) -> "JonesPolynomial":
        return JonesPolynomial(self.half_steps.substitute_power(-1))

    def as_expr(self) -> sp.Expr:
        return self.half_steps.to_expr(sp.Symbol("t"), scale=2)

    def __str__(self) -> str:
        if self.half_integral:
            return sp.sstr(self.as_expr())
        return self.in_t().format("t")


def jones_from_bracket(bracket: LaurentPolynomial, writhe: int) -> JonesPolynomial:
    normalized = bracket.shift(-3 * writhe) * (-1) ** (writhe % 2)
    half_steps = {}
    for exponent, coefficient in normalized.items():
        if exponent % 2:
            error_message = f"Odd power A^{exponent} in a normalised bracket"
            logger.error(error_message)
            raise InternalConsistencyError(error_message)
        half_steps[-exponent // 2] = coefficient
    return JonesPolynomial(LaurentPolynomial(half_steps))


def fewest_crossings_translate(g: GridDiagram) -> GridDiagram:
    """The torus translate of g with the fewest crossings; ties go to the smallest shift."""
    n = g.size
    translates = (translate(g, dc, dr) for dc in range(n) for dr in range(n))
    return min(translates, key=lambda candidate: len(crossings(candidate)))


@lru_cache(maxsize=65536)
def _jones_for_key(key: bytes) -> JonesPolynomial:
    # every translate of the key diagram is a translate of the caller's diagram
    g = fewest_crossings_translate(diagram_from_key(key))
    return jones_from_bracket(kauffman_bracket(g), planar_code(g).writhe)


def jones(g: GridDiagram) -> JonesPolynomial:
    return _jones_for_key(canonical_key(g))


def determinant(g: GridDiagram) -> int:
    """|V(-1)|, which equals |Alexander(-1)| for knots."""
    if len(component_cycles(g)) != 1:
        error_message = "The determinant is computed for knots only"
        raise MultiComponent(error_message)
    return abs(int(jones(g).in_t().evaluate(-1)))
