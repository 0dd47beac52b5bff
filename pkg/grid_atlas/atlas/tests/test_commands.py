import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from grid_atlas.atlas.models import AtlasEntry
from grid_atlas.grids.diagram import format_grid
from grid_atlas.grids.diagram import parse_grid
from grid_atlas.grids.enums import Corner
from grid_atlas.grids.moves import MovePath
from grid_atlas.grids.moves import stabilize_x


def run(*args) -> str:
    stdout, stderr = StringIO(), StringIO()
    call_command("gridatlas", *args, stdout=stdout, stderr=stderr)
    return stdout.getvalue()


@pytest.fixture
def grid_file(tmp_path):
    def _grid_file(g, name="diagram.grid"):
        path = tmp_path / name
        path.write_text(format_grid(g) + "\n")
        return str(path)

    return _grid_file


class TestGridCommands:
    def test_invariants(self, grid_file, unknot):
        assert run("invariants", grid_file(unknot)) == "tb=-1 r=0 sl=-1\n"

    def test_invariants_with_jones(self, grid_file, trefoil):
        output = run("invariants", "--jones", grid_file(trefoil))
        assert output.splitlines()[0] == "tb=1 r=0 sl=1"
        assert "knot=m(3_1)" in output

    def test_moves_lists_neighbours(self, grid_file, unknot):
        lines = run("moves", grid_file(unknot), "--mode", "top").splitlines()
        assert any(line.startswith("STAB X") for line in lines)

    def test_moves_replays_a_path(self, grid_file, tmp_path, trefoil):
        path_file = tmp_path / "path.moves"
        path_file.write_text("TRANSLATE up\nTRANSLATE down\n")
        assert parse_grid(run("moves", grid_file(trefoil), "--apply", str(path_file))) == trefoil

    def test_theta(self, grid_file, trefoil):
        assert run("theta", grid_file(trefoil)) == "OBSTRUCTED (theta nonzero)\n"

    def test_theta_inconclusive(self, grid_file, unknot):
        assert run("theta", grid_file(stabilize_x(unknot, 0, Corner.NW))) == "INCONCLUSIVE\n"

    @pytest.mark.parametrize(("flag", "expected"), [("--graded", "2+z^2"), ("--ungraded", None)], ids=["graded", "ungraded"])
    def test_ruling(self, grid_file, trefoil, flag, expected):
        output = run("ruling", grid_file(trefoil), flag).strip()
        assert output
        if expected:
            assert output == expected

    def test_missing_file_is_a_usage_error(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            run("invariants", str(tmp_path / "missing.grid"))
        assert excinfo.value.returncode == 2

    def test_malformed_grid_is_a_domain_error(self, tmp_path):
        path = tmp_path / "bad.grid"
        path.write_text("n=2\nX=0 1\nO=0 1\n")
        with pytest.raises(CommandError) as excinfo:
            run("invariants", str(path))
        assert excinfo.value.returncode == 1

    def test_unknown_subcommand(self):
        with pytest.raises(CommandError):
            run("frobnicate")


class TestSearchCommands:
    def test_connect_translates(self, grid_file, unknot):
        other = parse_grid("n=2\nX=0 1\nO=1 0")
        assert run("connect", grid_file(unknot, "a.grid"), grid_file(other, "b.grid")) == "CONNECTED\n"

    def test_connect_prints_a_path(self, grid_file, trefoil):
        stabilized = stabilize_x(trefoil, 1, Corner.NE)
        output = run("connect", grid_file(stabilized, "a.grid"), grid_file(trefoil, "b.grid"), "--max-size", "6")
        verdict, _, moves = output.partition("\n")
        assert verdict == "CONNECTED"
        assert MovePath.parse(moves).replay(stabilized) == trefoil

    def test_connect_exhausted(self, grid_file, unknot, trefoil):
        output = run(
            "connect",
            grid_file(unknot, "a.grid"),
            grid_file(trefoil, "b.grid"),
            "--mode",
            "top",
            "--max-size",
            "5",
            "--max-visited",
            "200",
        )
        assert output.splitlines()[0] == "EXHAUSTED"
        assert "stop=" in output

    def test_connect_invariant_mismatch(self, grid_file, unknot, trefoil):
        with pytest.raises(CommandError) as excinfo:
            run("connect", grid_file(unknot, "a.grid"), grid_file(trefoil, "b.grid"))
        assert excinfo.value.returncode == 1

    def test_enumerate(self):
        assert run("enumerate", "2") == "n=2\nX=0 1\nO=1 0\n"
        blocks = run("enumerate", "4").strip().split("\n\n")
        assert run("enumerate", "4", "--count") == f"{len(blocks)}\n"

    def test_enumerate_too_small(self):
        with pytest.raises(CommandError) as excinfo:
            run("enumerate", "1")
        assert excinfo.value.returncode == 2

    @pytest.mark.parametrize("parallel", [False, True], ids=["serial", "parallel"])
    def test_classify(self, settings, parallel):
        settings.CELERY_TASK_ALWAYS_EAGER = True
        args = ["classify", "3", "--max-size", "4", "--max-visited", "5000"]
        lines = run(*args, *(["--parallel"] if parallel else [])).splitlines()
        assert lines
        assert all(line.startswith("unknot (") for line in lines)
        assert all(line.endswith(": 1 class") for line in lines)

    def test_stuck(self):
        assert run("stuck", "3") == "0 stuck diagrams of size 3\n"


class TestAtlasCommands:
    @pytest.mark.django_db(transaction=True)
    def test_atlas_stores_the_record(self):
        output = run("atlas", "--knot", "unknot", "--max-arc-index", "3", "--max-size", "4", "--store")
        document = json.loads(output)
        assert [record["knot"] for record in document["records"]] == ["unknot"]
        assert document["records"][0]["max_tb"] == -1
        assert AtlasEntry.objects.by_knot("unknot").exists()

    def test_atlas_writes_a_file(self, tmp_path):
        target = tmp_path / "atlas.json"
        run("atlas", "--knot", "unknot", "--max-arc-index", "2", "--max-size", "4", "--output", str(target))
        assert json.loads(target.read_text())["records"][0]["arc_index"] == 2

    def test_atlas_unknown_knot(self):
        with pytest.raises(CommandError) as excinfo:
            run("atlas", "--knot", "4_1", "--max-arc-index", "3")
        assert excinfo.value.returncode == 1

    @pytest.mark.parametrize("output_format", ["txt", "svg"])
    def test_render(self, output_format):
        output = run("render", "--knot", "unknot", "--max-arc-index", "2", "--max-size", "4", "--format", output_format)
        assert "Legendrian mountain range: unknot" in output

    def test_table(self):
        lines = run("table").splitlines()
        assert any(line.startswith("3_1\t") for line in lines)
        assert any(line.startswith("m(3_1)\t") for line in lines)

    def test_table_write(self, tmp_path):
        target = tmp_path / "table.tsv"
        assert run("table", "--write", str(target)) == ""
        assert target.read_text().count("\n") > 1

    def test_family(self, settings):
        settings.GRID_ATLAS = {**settings.GRID_ATLAS, "BRACKET_MAX_CROSSINGS": 4}
        lines = run("family", "1").splitlines()
        assert lines[0].startswith("B_4:")
        assert lines[0].endswith("sl=5")
        assert lines[2] == "expected sl=5 non-destabilizable size=10 sl=3"
        assert lines[-1] == "same jones: unknown (too many crossings)"

    @pytest.mark.slow
    def test_family_closures_share_jones(self, settings):
        settings.GRID_ATLAS = {**settings.GRID_ATLAS, "BRACKET_MAX_CROSSINGS": 30}
        assert run("family", "1").splitlines()[-1] == "same jones: yes"
