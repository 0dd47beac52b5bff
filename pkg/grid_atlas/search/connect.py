"""
Bidirectional breadth-first search in the move graph.

Vertices are diagrams modulo torus translation, identified by canonical
key, restricted to sizes up to the budget's ``max_size``. Each side keeps
the exact diagram it reached for every key together with the move that
produced it, so a meeting of the two frontiers yields a path that replays
from the source to the target itself.
"""

import logging
import time
from dataclasses import dataclass
from dataclasses import field

from grid_atlas.core.exceptions import InternalConsistencyError
from grid_atlas.core.exceptions import InvariantMismatch
from grid_atlas.core.exceptions import TooManyCrossings
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.moves import Commute
from grid_atlas.grids.moves import DestabilizeX
from grid_atlas.grids.moves import MoveKind
from grid_atlas.grids.moves import MovePath
from grid_atlas.grids.moves import StabilizeX
from grid_atlas.grids.moves import apply_move
from grid_atlas.grids.moves import destabilizations
from grid_atlas.grids.moves import neighbors
from grid_atlas.grids.moves import translation_moves
from grid_atlas.grids.symmetry import CanonicalKey
from grid_atlas.grids.symmetry import canonical_key
from grid_atlas.grids.symmetry import translation_between
from grid_atlas.knots.bracket import jones
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.enums import SearchSide
from grid_atlas.search.enums import StopReason

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchStats:
    visited_forward: int
    visited_backward: int
    frontier_forward: int
    frontier_backward: int
    elapsed_millis: int
    stop_reason: StopReason

    def serialize(self) -> dict:
        return {
            "visited_forward": self.visited_forward,
            "visited_backward": self.visited_backward,
            "frontier_forward": self.frontier_forward,
            "frontier_backward": self.frontier_backward,
            "elapsed_millis": self.elapsed_millis,
            "stop_reason": self.stop_reason.value,
        }

    def __str__(self) -> str:
        return (
            f"visited={self.visited_forward}+{self.visited_backward} "
            f"frontier={self.frontier_forward}+{self.frontier_backward} "
            f"stop={self.stop_reason.value}"
        )


@dataclass(frozen=True)
class Connected:
    path: MovePath
    stats: SearchStats


@dataclass(frozen=True)
class Exhausted:
    """No path was found inside the budget. This is never a proof of distinctness."""

    stats: SearchStats


IsotopyVerdict = Connected | Exhausted


@dataclass(frozen=True)
class _Node:
    diagram: GridDiagram
    parent: CanonicalKey | None = None
    move: MoveKind | None = None


@dataclass
class _Side:
    name: SearchSide
    nodes: dict[CanonicalKey, _Node] = field(default_factory=dict)
    frontier: list[CanonicalKey] = field(default_factory=list)

    @classmethod
    def rooted_at(cls, name: SearchSide, g: GridDiagram) -> "_Side":
        key = canonical_key(g)
        return cls(name=name, nodes={key: _Node(g)}, frontier=[key])

    def chain(self, key: CanonicalKey) -> list[tuple[_Node, _Node]]:
        """(child, parent) pairs from ``key`` back to the root."""
        steps = []
        node = self.nodes[key]
        while node.parent is not None:
            parent = self.nodes[node.parent]
            steps.append((node, parent))
            node = parent
        return steps


class _BudgetSpent(Exception):  # noqa: N818
    def __init__(self, reason: StopReason):
        super().__init__(reason)
        self.reason = reason


def check_classical_invariants(a: GridDiagram, b: GridDiagram, mode: EquivalenceMode) -> None:
    mode = EquivalenceMode(mode)
    if mode == EquivalenceMode.TOPOLOGICAL:
        return
    first, second = classical_invariants(a), classical_invariants(b)
    if mode == EquivalenceMode.LEGENDRIAN and (first.tb, first.r) != (second.tb, second.r):
        error_message = f"Legendrian invariants differ: ({first.tb}, {first.r}) and ({second.tb}, {second.r})"
        raise InvariantMismatch(error_message)
    if mode == EquivalenceMode.TRANSVERSE and first.sl != second.sl:
        error_message = f"Self-linking numbers differ: {first.sl} and {second.sl}"
        raise InvariantMismatch(error_message)


def _warn_if_types_differ(a: GridDiagram, b: GridDiagram) -> None:
    try:
        differ = jones(a) != jones(b)
    except TooManyCrossings:
        return
    if differ:
        logger.warning("Searching between diagrams of different knot types; no path can exist")


def _inverse_moves(child: GridDiagram, parent: GridDiagram, move: MoveKind) -> list[MoveKind]:
    """Moves taking ``child`` back to exactly ``parent``, where ``child`` was reached from ``parent`` by ``move``."""
    candidates: list[MoveKind]
    match move:
        case Commute():
            candidates = [move]
        case StabilizeX(variant=variant):
            candidates = [m for m, _ in destabilizations(child) if m.variant == variant]
        case DestabilizeX(variant=variant):
            candidates = [StabilizeX(column, variant) for column in range(child.size)]
        case _:
            candidates = []

    for candidate in candidates:
        result = apply_move(child, candidate)
        shift = translation_between(result, parent)
        if shift is not None:
            return [candidate, *translation_moves(*shift, parent.size)]

    error_message = f"Cannot invert {move.serialize()}"
    logger.error(error_message)
    raise InternalConsistencyError(error_message)


class BidirectionalSearch:
    """
    One search between two diagrams. After :meth:`run` the keys reached by
    each side stay available through :meth:`reached`.
    """

    def __init__(self, a: GridDiagram, b: GridDiagram, mode: EquivalenceMode, budget: SearchBudget):
        self.a = a
        self.b = b
        self.mode = EquivalenceMode(mode)
        self.budget = budget
        self.forward = _Side.rooted_at(SearchSide.FORWARD, a)
        self.backward = _Side.rooted_at(SearchSide.BACKWARD, b)
        self._started = 0.0

    def reached(self, side: SearchSide) -> frozenset[CanonicalKey]:
        return frozenset((self.forward if side == SearchSide.FORWARD else self.backward).nodes)

    def _elapsed_millis(self) -> int:
        return int((time.monotonic() - self._started) * 1000)

    def _stats(self, reason: StopReason) -> SearchStats:
        return SearchStats(
            visited_forward=len(self.forward.nodes),
            visited_backward=len(self.backward.nodes),
            frontier_forward=len(self.forward.frontier),
            frontier_backward=len(self.backward.frontier),
            elapsed_millis=self._elapsed_millis(),
            stop_reason=reason,
        )

    def _check_time(self) -> None:
        if self._elapsed_millis() >= self.budget.max_millis:
            raise _BudgetSpent(StopReason.MAX_MILLIS)

    def _check_room(self) -> None:
        if len(self.forward.nodes) + len(self.backward.nodes) >= self.budget.max_visited:
            raise _BudgetSpent(StopReason.MAX_VISITED)

    def _expand_layer(self, side: _Side, other: _Side) -> CanonicalKey | None:
        layer, side.frontier = side.frontier, []
        for index, key in enumerate(layer):
            self._check_time()
            for move, child in neighbors(side.nodes[key].diagram, self.mode, self.budget.max_size):
                child_key = canonical_key(child)
                if child_key in side.nodes:
                    continue
                self._check_room()
                side.nodes[child_key] = _Node(child, key, move)
                side.frontier.append(child_key)
                if child_key in other.nodes:
                    side.frontier.extend(layer[index + 1 :])
                    return child_key
        logger.debug(
            "%s layer done: %d visited, %d on the frontier",
            side.name.label,
            len(side.nodes),
            len(side.frontier),
        )
        return None

    def _path(self, meeting: CanonicalKey) -> MovePath:
        moves: list[MoveKind] = []
        for node, _ in reversed(self.forward.chain(meeting)):
            moves.append(node.move)  # type: ignore[arg-type]

        here = self.forward.nodes[meeting].diagram
        there = self.backward.nodes[meeting].diagram
        shift = translation_between(here, there)
        if shift is None:
            error_message = "Diagrams sharing a canonical key are not translates"
            logger.error(error_message)
            raise InternalConsistencyError(error_message)
        moves.extend(translation_moves(*shift, here.size))

        for node, parent in self.backward.chain(meeting):
            moves.extend(_inverse_moves(node.diagram, parent.diagram, node.move))  # type: ignore[arg-type]
        return MovePath(tuple(moves))

    def run(self) -> IsotopyVerdict:
        self._started = time.monotonic()
        if self.a.size > self.budget.max_size or self.b.size > self.budget.max_size:
            logger.info("Endpoint larger than max_size %d; nothing to search", self.budget.max_size)
            return Exhausted(self._stats(StopReason.EXHAUSTED))

        if self.forward.nodes.keys() == self.backward.nodes.keys():
            return Connected(MovePath(), self._stats(StopReason.MET))

        meeting = None
        try:
            while meeting is None and self.forward.frontier and self.backward.frontier:
                if len(self.forward.frontier) <= len(self.backward.frontier):
                    meeting = self._expand_layer(self.forward, self.backward)
                else:
                    meeting = self._expand_layer(self.backward, self.forward)
        except _BudgetSpent as spent:
            stats = self._stats(spent.reason)
            logger.info("Search stopped without a path: %s", stats)
            return Exhausted(stats)

        if meeting is None:
            stats = self._stats(StopReason.EXHAUSTED)
            logger.info("Search exhausted a component: %s", stats)
            return Exhausted(stats)

        path = self._path(meeting)
        stats = self._stats(StopReason.MET)
        logger.info("Connected by %d moves: %s", len(path), stats)
        return Connected(path, stats)


def connect(
    a: GridDiagram,
    b: GridDiagram,
    mode: EquivalenceMode,
    budget: SearchBudget,
) -> IsotopyVerdict:
    check_classical_invariants(a, b, mode)
    _warn_if_types_differ(a, b)
    return BidirectionalSearch(a, b, mode, budget).run()
