"""
Normal rulings of a front and the ruling polynomial.

A ruling pairs the strands of every vertical slice. Cusps create and
close pairs, and at each crossing the ruling either passes (pairs follow
the strands) or switches (pairs stay on their side). A switch is normal
when the two pairs meeting there are disjoint or nested. Each ruling
contributes z^(switches - right cusps + 1).
"""

import logging
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from grid_atlas.core.exceptions import Disconnected
from grid_atlas.core.exceptions import NonZeroRotation
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.knots.polynomials import LaurentPolynomial
from grid_atlas.rulings.enums import FrontEventKind
from grid_atlas.rulings.enums import RulingMode
from grid_atlas.rulings.fronts import Front
from grid_atlas.rulings.fronts import grid_to_front
from grid_atlas.rulings.fronts import maslov_and_degrees

logger = logging.getLogger(__name__)

EMPTY_RULINGS = "∅"
UNDEFINED_RULINGS = "-"

Pairing = tuple[int, ...]


@dataclass(frozen=True)
class RulingPolynomial:
    polynomial: LaurentPolynomial
    mode: RulingMode

    @property
    def is_empty(self) -> bool:
        return not self.polynomial

    def __str__(self) -> str:
        return EMPTY_RULINGS if self.is_empty else self.polynomial.format("z")


def is_normal_switch(pairing: Pairing, position: int) -> bool:
    """
    The pairs through strands k = position and k + 1, with companions a and
    b, must be disjoint (a < k, b > k + 1) or nested (b < a < k, or
    k + 1 < b < a).
    """
    k = position
    a, b = pairing[k], pairing[k + 1]
    return (a < k and b > k + 1) or (b < a < k) or (k + 1 < b < a)


def _insert_pair(pairing: Pairing, position: int) -> Pairing:
    def shift(index: int) -> int:
        return index + 2 if index >= position else index

    result = [shift(partner) for partner in pairing]
    result[position:position] = [position + 1, position]
    return tuple(result)


def _close_pair(pairing: Pairing, position: int) -> Pairing | None:
    if pairing[position] != position + 1:
        return None

    def shift(index: int) -> int:
        return index - 2 if index > position + 1 else index

    return tuple(shift(partner) for i, partner in enumerate(pairing) if i not in (position, position + 1))


def _pass(pairing: Pairing, position: int) -> Pairing:
    def swap(index: int) -> int:
        if index == position:
            return position + 1
        if index == position + 1:
            return position
        return index

    result = list(pairing)
    for index, partner in enumerate(pairing):
        result[swap(index)] = swap(partner)
    return tuple(result)


def _switchable(f: Front, mode: RulingMode) -> list[bool]:
    if RulingMode(mode) == RulingMode.UNGRADED:
        return [True] * len(f.crossings)
    if f.rotation != 0:
        error_message = f"Zero-graded rulings need rotation number 0, got {f.rotation}"
        raise NonZeroRotation(error_message)
    return [degree == 0 for degree in maslov_and_degrees(f).degrees]


def _check_connected(f: Front) -> None:
    if f.components != 1:
        error_message = f"Front has {f.components} components"
        raise Disconnected(error_message)


def rulings(f: Front, mode: RulingMode = RulingMode.ZERO_GRADED) -> Iterator[frozenset[int]]:
    """Every normal ruling as its set of switched crossings (indices into ``f.crossings``)."""
    _check_connected(f)
    switchable = _switchable(f, mode)
    events = f.events

    def walk(step: int, pairing: Pairing, crossing: int, switches: frozenset[int]) -> Iterator[frozenset[int]]:
        if step == len(events):
            yield switches
            return

        event = events[step]
        p = event.position
        if event.kind == FrontEventKind.LEFT_CUSP:
            yield from walk(step + 1, _insert_pair(pairing, p), crossing, switches)
        elif event.kind == FrontEventKind.RIGHT_CUSP:
            closed = _close_pair(pairing, p)
            if closed is not None:
                yield from walk(step + 1, closed, crossing, switches)
        elif event.kind == FrontEventKind.CROSSING:
            if pairing[p] == p + 1:
                return
            yield from walk(step + 1, _pass(pairing, p), crossing + 1, switches)
            if switchable[crossing] and is_normal_switch(pairing, p):
                yield from walk(step + 1, pairing, crossing + 1, switches | {crossing})
        else:
            yield from walk(step + 1, pairing, crossing, switches)

    yield from walk(0, (), 0, frozenset())


def _accumulate(states: dict[Pairing, Counter[int]], pairing: Pairing, counts: Counter[int], extra: int = 0) -> None:
    bucket = states.setdefault(pairing, Counter())
    for switches, count in counts.items():
        bucket[switches + extra] += count


def ruling_polynomial(f: Front, mode: RulingMode = RulingMode.ZERO_GRADED) -> RulingPolynomial:
    """
    Sweep the front once, merging partial rulings that reach the same pairing
    and counting them by number of switches.
    """
    _check_connected(f)
    switchable = _switchable(f, mode)
    states: dict[Pairing, Counter[int]] = {(): Counter({0: 1})}
    crossing = 0

    for event in f.events:
        p = event.position
        updated: dict[Pairing, Counter[int]] = {}
        for pairing, counts in states.items():
            if event.kind == FrontEventKind.LEFT_CUSP:
                _accumulate(updated, _insert_pair(pairing, p), counts)
            elif event.kind == FrontEventKind.RIGHT_CUSP:
                closed = _close_pair(pairing, p)
                if closed is not None:
                    _accumulate(updated, closed, counts)
            elif event.kind == FrontEventKind.CROSSING:
                if pairing[p] == p + 1:
                    continue
                _accumulate(updated, _pass(pairing, p), counts)
                if switchable[crossing] and is_normal_switch(pairing, p):
                    _accumulate(updated, pairing, counts, extra=1)
            else:
                _accumulate(updated, pairing, counts)

        if event.kind == FrontEventKind.CROSSING:
            crossing += 1
        states = updated

    shift = 1 - f.right_cusps
    terms: dict[int, int] = {}
    for switches, count in states.get((), Counter()).items():
        terms[switches + shift] = terms.get(switches + shift, 0) + count

    result = RulingPolynomial(LaurentPolynomial(terms), RulingMode(mode))
    logger.debug("Ruling polynomial (%s): %s", mode, result)
    return result


def grid_ruling_text(g: GridDiagram, mode: RulingMode = RulingMode.ZERO_GRADED) -> str:
    """The ruling column of the atlas: the polynomial, ∅ when there are no rulings, - when undefined."""
    try:
        return str(ruling_polynomial(grid_to_front(g), mode))
    except NonZeroRotation:
        return UNDEFINED_RULINGS
