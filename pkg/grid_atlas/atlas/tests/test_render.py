import xml.etree.ElementTree as ET

import pytest

from grid_atlas.atlas.enums import RenderFormat
from grid_atlas.atlas.render import render_mountain_range
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.search.enums import MergeRelation
from grid_atlas.search.enums import StabilizationSign
from grid_atlas.search.enums import ThetaStatus
from grid_atlas.search.mountain import Arrow
from grid_atlas.search.mountain import MergeRow
from grid_atlas.search.mountain import MountainRange
from grid_atlas.search.mountain import RangeClass

SVG = "{http://www.w3.org/2000/svg}"
PLACEHOLDER = GridDiagram((1, 0), (0, 1))


def range_class(label, point, *, peak=False):
    return RangeClass(label, point, PLACEHOLDER, peak, ThetaStatus.UNKNOWN)


@pytest.fixture
def left_trefoil_range() -> MountainRange:
    plus, minus = StabilizationSign.PLUS, StabilizationSign.MINUS
    return MountainRange(
        knot="3_1",
        classes=(
            range_class("L1", (-6, -1), peak=True),
            range_class("L2", (-6, 1), peak=True),
            range_class("L3", (-7, 0)),
            range_class("L4", (-7, -2)),
            range_class("L5", (-7, 2)),
        ),
        arrows=(
            Arrow("L1", "L3", plus),
            Arrow("L1", "L4", minus),
            Arrow("L2", "L5", plus),
            Arrow("L2", "L3", minus),
        ),
    )


@pytest.fixture
def boxed_range() -> MountainRange:
    return MountainRange(
        knot="m(5_2)",
        classes=(range_class("L1", (1, 0), peak=True), range_class("L2", (1, 0), peak=True)),
        merges=(
            MergeRow((1, 0), StabilizationSign.PLUS, (("L1", "L2"),), ()),
            MergeRow((1, 0), StabilizationSign.MINUS, (("L1",), ("L2",)), (MergeRelation.CONJECTURED,)),
        ),
    )


class TestTextRender:
    def test_empty_range_is_just_the_header(self):
        assert render_mountain_range(MountainRange(knot="4_1")) == "# Legendrian mountain range: 4_1\n"

    def test_rows_run_down_in_tb(self, left_trefoil_range):
        lines = render_mountain_range(left_trefoil_range, RenderFormat.TXT).splitlines()
        assert lines[0] == "# Legendrian mountain range: 3_1"
        assert "tb=-6: (-6,-1)^ (-6,1)^" in lines
        assert "tb=-7: (-7,-2) (-7,0) (-7,2)" in lines
        assert lines.index("tb=-6: (-6,-1)^ (-6,1)^") < lines.index("tb=-7: (-7,-2) (-7,0) (-7,2)")

    def test_arrows_and_classes_are_listed(self, left_trefoil_range):
        text = render_mountain_range(left_trefoil_range)
        assert "L1 (-6,-1) peak theta=unknown" in text
        assert "L3 (-7,0) theta=unknown" in text
        assert "L1 -S+-> L3" in text
        assert "L2 -S--> L3" in text

    def test_box_and_merge_rows(self, boxed_range):
        text = render_mountain_range(boxed_range)
        assert "tb=1: [(1,0)x2]!^" in text
        assert "merge (1,0) S+: L1,L2" in text
        assert "merge (1,0) S-: L1:L2" in text

    def test_deterministic(self, left_trefoil_range):
        assert render_mountain_range(left_trefoil_range) == render_mountain_range(left_trefoil_range)


class TestSvgRender:
    def parse(self, mr):
        return ET.fromstring(render_mountain_range(mr, RenderFormat.SVG).encode())

    def test_empty_range(self):
        root = self.parse(MountainRange(knot="4_1"))
        assert root.find(f"{SVG}title").text == "Legendrian mountain range: 4_1"
        assert list(root.iter(f"{SVG}circle")) == []

    def test_arrow_directions(self, left_trefoil_range):
        root = self.parse(left_trefoil_range)
        lines = list(root.iter(f"{SVG}line"))
        assert len(lines) == 4
        for line in lines:
            dx = int(line.get("x2")) - int(line.get("x1"))
            dy = int(line.get("y2")) - int(line.get("y1"))
            assert dy > 0
            assert (dx > 0) == (line.get("class") == "plus")

    def test_peaks_are_filled(self, left_trefoil_range):
        root = self.parse(left_trefoil_range)
        fills = [circle.get("fill") for circle in root.iter(f"{SVG}circle")]
        assert fills.count("#000") == 2
        assert fills.count("#fff") == 3

    def test_one_box_around_two_dots(self, boxed_range):
        root = self.parse(boxed_range)
        boxes = list(root.iter(f"{SVG}rect"))
        dots = list(root.iter(f"{SVG}circle"))
        assert len(boxes) == 1
        assert len(dots) == 2
        left, width = int(boxes[0].get("x")), int(boxes[0].get("width"))
        assert all(left < int(dot.get("cx")) < left + width for dot in dots)

    def test_deterministic(self, boxed_range):
        first = render_mountain_range(boxed_range, RenderFormat.SVG)
        assert first == render_mountain_range(boxed_range, RenderFormat.SVG)
