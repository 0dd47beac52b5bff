"""
gridatlas: command-line access to grid diagrams, isotopy searches and the
Legendrian atlas.

Results go to stdout and diagnostics to stderr. Domain errors exit with
status 1 and usage errors with status 2.
"""

import logging
from pathlib import Path

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from grid_atlas.atlas.assembly import classify
from grid_atlas.atlas.assembly import diagrams_of
from grid_atlas.atlas.enums import RenderFormat
from grid_atlas.atlas.export import records_to_json
from grid_atlas.atlas.models import AtlasEntry
from grid_atlas.atlas.records import build_record
from grid_atlas.atlas.render import render_mountain_range
from grid_atlas.core.exceptions import GridAtlasError
from grid_atlas.core.exceptions import TooManyCrossings
from grid_atlas.floer.theta import family_sl_ledger
from grid_atlas.floer.theta import theta_verdict
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import format_grid
from grid_atlas.grids.diagram import parse_grid
from grid_atlas.grids.enums import EquivalenceMode
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.grids.moves import MovePath
from grid_atlas.grids.moves import neighbors
from grid_atlas.knots.braids import braid_to_grid
from grid_atlas.knots.braids import prop_family_words
from grid_atlas.knots.bracket import jones
from grid_atlas.knots.identify import build_table
from grid_atlas.knots.identify import identify
from grid_atlas.knots.identify import read_braids
from grid_atlas.knots.identify import write_table
from grid_atlas.rulings.enums import RulingMode
from grid_atlas.rulings.rulings import grid_ruling_text
from grid_atlas.search.budget import SearchBudget
from grid_atlas.search.connect import Connected
from grid_atlas.search.connect import connect
from grid_atlas.search.enumeration import PruneFlags
from grid_atlas.search.enumeration import enumerate_diagrams
from grid_atlas.search.stuck import find_stuck
from grid_atlas.utils.string_utils import count_phrase

logger = logging.getLogger(__name__)

DEFAULT_MAX_ARC_INDEX = 9


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        error_message = f"Cannot read {path}: {exc.strerror}"
        raise CommandError(error_message, returncode=2) from exc


def _read_grid(path: str) -> GridDiagram:
    return parse_grid(_read_text(path))


def _add_budget_arguments(parser: CommandParser) -> None:
    parser.add_argument("--max-size", type=int, help="Largest grid size the search may visit")
    parser.add_argument("--max-visited", type=int, help="Ceiling on visited diagrams")
    parser.add_argument("--max-millis", type=int, help="Ceiling on wall-clock milliseconds")


def _budget(options: dict, arc_index: int) -> SearchBudget:
    return SearchBudget.default(
        arc_index,
        max_size=options["max_size"],
        max_visited=options["max_visited"],
        max_millis=options["max_millis"],
    )


def _mode_argument(parser: CommandParser, default: EquivalenceMode = EquivalenceMode.LEGENDRIAN) -> None:
    parser.add_argument(
        "--mode",
        choices=EquivalenceMode.values,
        default=default.value,
        help="Equivalence to search in: leg, trans or top",
    )


class Command(BaseCommand):
    help = "Grid diagrams, isotopy searches and the Legendrian knot atlas"

    def add_arguments(self, parser: CommandParser) -> None:
        subcommands = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

        invariants = subcommands.add_parser("invariants", help="tb, r and sl of a grid")
        invariants.add_argument("grid")
        invariants.add_argument("--jones", action="store_true", help="Also print the Jones polynomial and knot type")

        moves = subcommands.add_parser("moves", help="List the moves out of a grid, or replay a move file")
        moves.add_argument("grid")
        moves.add_argument("--apply", metavar="PATH_FILE", help="Replay the moves in this file and print the result")
        moves.add_argument("--max-size", type=int, help="Largest grid size a stabilization may produce")
        _mode_argument(moves)

        connect_parser = subcommands.add_parser("connect", help="Search for a path between two grids")
        connect_parser.add_argument("source")
        connect_parser.add_argument("target")
        _mode_argument(connect_parser)
        _add_budget_arguments(connect_parser)

        enumerate_parser = subcommands.add_parser("enumerate", help="Knot grids of one size up to translation")
        enumerate_parser.add_argument("size", type=int)
        enumerate_parser.add_argument("--prune", action="store_true", help="Skip diagrams that destabilize at once")
        enumerate_parser.add_argument("--count", action="store_true", help="Print only the number of diagrams")
        _mode_argument(enumerate_parser, EquivalenceMode.TOPOLOGICAL)

        classify_parser = subcommands.add_parser("classify", help="Legendrian classes of every grid of one size")
        classify_parser.add_argument("size", type=int)
        classify_parser.add_argument("--parallel", action="store_true", help="Run pairwise searches through celery")
        _add_budget_arguments(classify_parser)

        atlas = subcommands.add_parser("atlas", help="Assemble the atlas record of a knot type")
        atlas.add_argument("--knot", required=True)
        atlas.add_argument("--max-arc-index", type=int, default=DEFAULT_MAX_ARC_INDEX)
        atlas.add_argument("--depth", type=int, default=1, help="Levels of the mountain range below the peaks")
        atlas.add_argument("--store", action="store_true", help="Save the record in the database")
        atlas.add_argument("--output", help="Write the JSON document to this file instead of stdout")
        _add_budget_arguments(atlas)

        render = subcommands.add_parser("render", help="Draw the mountain range of a knot type")
        render.add_argument("--knot", required=True)
        render.add_argument("--format", choices=RenderFormat.values, default=RenderFormat.TXT.value)
        render.add_argument("--max-arc-index", type=int, default=DEFAULT_MAX_ARC_INDEX)
        render.add_argument("--depth", type=int, default=1)
        render.add_argument("--output", help="Write the drawing to this file instead of stdout")
        _add_budget_arguments(render)

        theta = subcommands.add_parser("theta", help="Combinatorial theta-hat obstruction of a grid")
        theta.add_argument("grid")

        ruling = subcommands.add_parser("ruling", help="Ruling polynomial of the front of a grid")
        ruling.add_argument("grid")
        graded = ruling.add_mutually_exclusive_group()
        graded.add_argument("--graded", dest="ruling_mode", action="store_const", const=RulingMode.ZERO_GRADED)
        graded.add_argument("--ungraded", dest="ruling_mode", action="store_const", const=RulingMode.UNGRADED)
        ruling.set_defaults(ruling_mode=RulingMode.ZERO_GRADED)

        stuck = subcommands.add_parser("stuck", help="Non-minimal grids no commutation can destabilize")
        stuck.add_argument("size", type=int)

        table = subcommands.add_parser("table", help="Rebuild the Jones and determinant knot table")
        table.add_argument("--write", metavar="PATH", help="Write the table to this file")

        family = subcommands.add_parser("family", help="Sizes and sl of the non-simple transverse family")
        family.add_argument("index", type=int)

    def handle(self, *args, **options) -> None:
        handler = getattr(self, f"handle_{options['subcommand']}")
        try:
            handler(options)
        except GridAtlasError as exc:
            raise CommandError(str(exc), returncode=1) from exc
        except ValueError as exc:
            raise CommandError(str(exc), returncode=2) from exc

    def _emit(self, text: str, output: str | None = None) -> None:
        if output:
            Path(output).write_text(text)
            self.stderr.write(f"Wrote {output}")
        else:
            self.stdout.write(text, ending="" if text.endswith("\n") else "\n")

    def handle_invariants(self, options: dict) -> None:
        g = _read_grid(options["grid"])
        self.stdout.write(str(classical_invariants(g)))
        if options["jones"]:
            self.stdout.write(f"jones={jones(g)}")
            self.stdout.write(f"knot={identify(g)}")

    def handle_moves(self, options: dict) -> None:
        g = _read_grid(options["grid"])
        if options["apply"]:
            path = MovePath.parse(_read_text(options["apply"]))
            self._emit(format_grid(path.replay(g)))
            return

        max_size = options["max_size"] or g.size + 1
        for move, _ in neighbors(g, EquivalenceMode(options["mode"]), max_size):
            self.stdout.write(move.serialize())

    def handle_connect(self, options: dict) -> None:
        a, b = _read_grid(options["source"]), _read_grid(options["target"])
        budget = _budget(options, max(a.size, b.size))
        verdict = connect(a, b, EquivalenceMode(options["mode"]), budget)
        if isinstance(verdict, Connected):
            self.stdout.write("CONNECTED")
            if verdict.path:
                self.stdout.write(verdict.path.serialize())
        else:
            self.stdout.write("EXHAUSTED")
            self.stdout.write(str(verdict.stats))

    def handle_enumerate(self, options: dict) -> None:
        prune = PruneFlags(skip_destabilizable=options["prune"], mode=EquivalenceMode(options["mode"]))
        diagrams = list(enumerate_diagrams(options["size"], prune))
        if options["count"]:
            self.stdout.write(str(len(diagrams)))
            return
        self._emit("\n\n".join(format_grid(g) for g in diagrams))

    def handle_classify(self, options: dict) -> None:
        budget = _budget(options, options["size"])
        tables = classify(options["size"], budget, parallel=options["parallel"])
        for (name, (tb, r)), table in tables.items():
            self.stdout.write(f"{name} ({tb},{r}): {count_phrase(len(table), 'class')}")

    def _record(self, options: dict):
        found = diagrams_of(options["knot"], options["max_arc_index"])
        if found is None:
            error_message = f"No diagram of {options['knot']} up to size {options['max_arc_index']}"
            raise CommandError(error_message, returncode=1)
        budget = _budget(options, found.arc_index)
        return build_record(found.knot, found.diagrams, budget, depth=options["depth"])

    def handle_atlas(self, options: dict) -> None:
        record, _ = self._record(options)
        if options["store"]:
            AtlasEntry.objects.store_record(record)
        self._emit(records_to_json([record]), options["output"])

    def handle_render(self, options: dict) -> None:
        _, mr = self._record(options)
        self._emit(render_mountain_range(mr, RenderFormat(options["format"])), options["output"])

    def handle_theta(self, options: dict) -> None:
        self.stdout.write(theta_verdict(_read_grid(options["grid"])).label)

    def handle_ruling(self, options: dict) -> None:
        self.stdout.write(grid_ruling_text(_read_grid(options["grid"]), options["ruling_mode"]))

    def handle_stuck(self, options: dict) -> None:
        stuck = find_stuck(options["size"])
        self.stdout.write(f"{count_phrase(len(stuck), 'stuck diagram')} of size {options['size']}")
        for g in stuck:
            self.stdout.write(format_grid(g))

    def handle_table(self, options: dict) -> None:
        rows = build_table(read_braids())
        if options["write"]:
            write_table(rows, options["write"])
            self.stderr.write(f"Wrote {len(rows)} rows to {options['write']}")
            return
        for row in rows:
            self.stdout.write(f"{row.name}\t{row.jones.serialize()}\t{row.determinant}")

    def handle_family(self, options: dict) -> None:
        n = options["index"]
        wide, narrow = prop_family_words(n)
        ledger = family_sl_ledger(n)
        wide_grid, narrow_grid = braid_to_grid(wide), braid_to_grid(narrow)
        self.stdout.write(f"B_{wide.strands}: [{wide}] size={wide_grid.size} sl={wide.self_linking}")
        self.stdout.write(f"B_{narrow.strands}: [{narrow}] size={narrow_grid.size} sl={narrow.self_linking}")
        self.stdout.write(f"expected sl={ledger.sl_t1} non-destabilizable size={ledger.size_t2} sl={ledger.sl_t2}")
        try:
            same = "yes" if jones(wide_grid) == jones(narrow_grid) else "no"
        except TooManyCrossings:
            same = "unknown (too many crossings)"
        self.stdout.write(f"same jones: {same}")
