"""
Mountain range renderings.

Both formats put tb on the vertical axis (highest first) and r on the
horizontal axis. Positive stabilizations point down and to the right,
negative ones down and to the left; points carrying more than one class
are boxed.
"""

import logging
from dataclasses import dataclass

from django.template.loader import render_to_string

from grid_atlas.atlas.enums import RenderFormat
from grid_atlas.search.mountain import MountainRange
from grid_atlas.search.mountain import Point

logger = logging.getLogger(__name__)

SVG_STEP = 48
SVG_MARGIN = 40
SVG_DOT_GAP = 10


@dataclass(frozen=True)
class _Dot:
    label: str
    tb: int
    r: int
    x: int
    y: int
    peak: bool
    theta: str


@dataclass(frozen=True)
class _Box:
    x: int
    y: int
    width: int
    height: int
    persists: bool


@dataclass(frozen=True)
class _Line:
    sign: str
    x1: int
    y1: int
    x2: int
    y2: int


def _cell(mr: MountainRange, point: Point, count: int, peaks: set[Point]) -> str:
    text = f"({point[0]},{point[1]})"
    if count > 1:
        text = f"[{text}x{count}]"
    if mr.persists(point):
        text += "!"
    if point in peaks:
        text += "^"
    return text


def render_text(mr: MountainRange) -> str:
    lines = [f"# Legendrian mountain range: {mr.knot}"]
    points = mr.points()
    if not points:
        return "\n".join(lines) + "\n"

    lines.append("# ^ peak, [..xN] N classes at one point, ! classes stay apart after stabilization")
    peaks = set(mr.peak_points())
    rows: dict[int, list[str]] = {}
    for point, entries in points.items():
        rows.setdefault(point[0], []).append(_cell(mr, point, len(entries), peaks))
    for tb in sorted(rows, reverse=True):
        lines.append(f"tb={tb}: {' '.join(rows[tb])}")

    lines.append("")
    for entries in points.values():
        for entry in entries:
            flag = " peak" if entry.peak else ""
            lines.append(f"{entry.label} ({entry.tb},{entry.r}){flag} theta={entry.theta.value}")

    if mr.arrows:
        lines.append("")
        for arrow in sorted(mr.arrows, key=lambda arrow: (int(arrow.source[1:]), arrow.sign.value)):
            lines.append(f"{arrow.source} -S{arrow.sign.value}-> {arrow.target}")

    if mr.merges:
        lines.append("")
        for row in mr.merges:
            lines.append(f"merge ({row.point[0]},{row.point[1]}) S{row.sign.value}: {row.text}")
    return "\n".join(lines) + "\n"


def render_svg(mr: MountainRange) -> str:
    points = mr.points()
    context: dict = {"knot": mr.knot, "dots": [], "boxes": [], "arrows": [], "axis": []}
    if not points:
        context.update(width=2 * SVG_MARGIN, height=2 * SVG_MARGIN)
        return render_to_string("atlas/mountain_range.svg", context)

    top = max(tb for tb, _ in points)
    bottom = min(tb for tb, _ in points)
    left = min(r for _, r in points)
    right = max(r for _, r in points)

    def centre(point: Point) -> tuple[int, int]:
        return SVG_MARGIN + (point[1] - left) * SVG_STEP, SVG_MARGIN + (top - point[0]) * SVG_STEP

    positions: dict[str, tuple[int, int]] = {}
    for point, entries in points.items():
        x, y = centre(point)
        offset = -(len(entries) - 1) * SVG_DOT_GAP // 2
        for index, entry in enumerate(entries):
            dot = _Dot(
                label=entry.label,
                tb=entry.tb,
                r=entry.r,
                x=x + offset + index * SVG_DOT_GAP,
                y=y,
                peak=entry.peak,
                theta=entry.theta.value,
            )
            positions[entry.label] = (dot.x, dot.y)
            context["dots"].append(dot)
        if len(entries) > 1:
            half = (len(entries) - 1) * SVG_DOT_GAP // 2 + SVG_DOT_GAP
            context["boxes"].append(
                _Box(x=x - half, y=y - SVG_DOT_GAP, width=2 * half, height=2 * SVG_DOT_GAP, persists=mr.persists(point)),
            )

    for arrow in mr.arrows:
        (x1, y1), (x2, y2) = positions[arrow.source], positions[arrow.target]
        context["arrows"].append(_Line(sign=arrow.sign.name.lower(), x1=x1, y1=y1, x2=x2, y2=y2))

    context["axis"] = [{"tb": tb, "y": centre((tb, left))[1]} for tb in range(top, bottom - 1, -1)]
    context.update(
        width=2 * SVG_MARGIN + (right - left) * SVG_STEP,
        height=2 * SVG_MARGIN + (top - bottom) * SVG_STEP,
    )
    return render_to_string("atlas/mountain_range.svg", context)


def render_mountain_range(mr: MountainRange, output_format: RenderFormat = RenderFormat.TXT) -> str:
    output_format = RenderFormat(output_format)
    logger.debug("Rendering the mountain range of %s as %s", mr.knot, output_format.label)
    if output_format == RenderFormat.SVG:
        return render_svg(mr)
    return render_text(mr)
