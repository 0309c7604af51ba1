"""Deterministic SVG diagrams of instances, depth regions, and partitions.

Output is a pure function of its inputs: geometry is scaled into a fixed
1000x1000 viewBox and every coordinate is printed with exactly six decimals,
so identical inputs yield byte-identical files.
"""

from __future__ import annotations

from .geometry import Point, PointSet, RegionKind, convex_hull
from .serialization import ResultDocument

SIZE = 1000
PAD = 60

_PALETTE = ("#d95f02", "#7570b3", "#1b9e77", "#e7298a",
            "#66a61e", "#e6ab02", "#a6761d", "#666666")
_DASHES = ("none", "8,4", "2,3", "10,3,2,3", "5,5", "1,4", "12,2", "4,2,1,2")


def _fmt(v: float) -> str:
    return f"{v:.6f}"


class _Mapper:
    """Affine map from instance coordinates into the viewBox, y flipped."""

    def __init__(self, points: list[Point]):
        xs = [float(p.x) for p in points]
        ys = [float(p.y) for p in points]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
        extent = max(hi_x - lo_x, hi_y - lo_y)
        self.scale = (SIZE - 2 * PAD) / extent if extent > 0 else 1.0
        self.off_x = PAD + ((SIZE - 2 * PAD) - (hi_x - lo_x) * self.scale) / 2 - lo_x * self.scale
        self.off_y = PAD + ((SIZE - 2 * PAD) - (hi_y - lo_y) * self.scale) / 2 + hi_y * self.scale

    def map(self, p: Point) -> tuple[float, float]:
        return (float(p.x) * self.scale + self.off_x,
                -float(p.y) * self.scale + self.off_y)


def _xy(mapper: _Mapper, p: Point) -> tuple[str, str]:
    x, y = mapper.map(p)
    return _fmt(x), _fmt(y)


def _poly_points(mapper: _Mapper, pts) -> str:
    return " ".join(",".join(_xy(mapper, p)) for p in pts)


def render_svg(ps: PointSet, result: ResultDocument, path: str) -> None:
    """Write the diagram for an instance and its result document: the depth
    region shaded, each partition in its own stroke style, witnesses marked,
    points labeled by index."""
    anchor_points = list(ps.points)
    if result.c3 is not None:
        anchor_points.extend(result.c3.region.vertices)
    for rec in result.partitions:
        if rec.witness is not None:
            anchor_points.append(rec.witness)
    mapper = _Mapper(anchor_points)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    if result.c3 is not None:
        lines.extend(_region_markup(mapper, result.c3.region))
    for i, rec in enumerate(result.partitions):
        lines.extend(_partition_markup(mapper, ps, rec, i))
    for i, p in enumerate(ps):
        x, y = mapper.map(p)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="#000000"/>')
        lines.append(f'<text x="{_fmt(x + 8)}" y="{_fmt(y - 8)}" '
                     f'font-family="monospace" font-size="22" fill="#000000">{i}</text>')
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _region_markup(mapper: _Mapper, region) -> list[str]:
    if region.kind is RegionKind.EMPTY:
        return []
    if region.kind is RegionKind.POINT:
        x, y = _xy(mapper, region.vertices[0])
        return [f'<circle cx="{x}" cy="{y}" r="9" fill="#bdd7ee" '
                f'stroke="#2e75b6" stroke-width="2"/>']
    if region.kind is RegionKind.SEGMENT:
        (x1, y1), (x2, y2) = (_xy(mapper, v) for v in region.vertices)
        return [f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="#2e75b6" stroke-width="6" stroke-opacity="0.6"/>']
    return [f'<polygon points="{_poly_points(mapper, region.vertices)}" '
            f'fill="#bdd7ee" fill-opacity="0.6" stroke="#2e75b6" stroke-width="2"/>']


def _partition_markup(mapper: _Mapper, ps: PointSet, rec, index: int) -> list[str]:
    color = _PALETTE[index % len(_PALETTE)]
    dash = _DASHES[index % len(_DASHES)]
    style = f'stroke="{color}" stroke-width="2.5" fill="none"'
    if dash != "none":
        style += f' stroke-dasharray="{dash}"'
    out = []
    for part in rec.parts:
        pts = [ps[i] for i in part]
        if len(pts) == 1:
            x, y = _xy(mapper, pts[0])
            out.append(f'<circle cx="{x}" cy="{y}" r="11" {style}/>')
        elif len(pts) == 2:
            (x1, y1), (x2, y2) = (_xy(mapper, p) for p in pts)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')
        else:
            ordered = convex_hull(pts).vertices
            out.append(f'<polygon points="{_poly_points(mapper, ordered)}" {style}/>')
    if rec.witness is not None:
        x, y = mapper.map(rec.witness)
        out.append(f'<path d="M {_fmt(x - 7)} {_fmt(y - 7)} L {_fmt(x + 7)} {_fmt(y + 7)} '
                   f'M {_fmt(x - 7)} {_fmt(y + 7)} L {_fmt(x + 7)} {_fmt(y - 7)}" '
                   f'stroke="{color}" stroke-width="3" fill="none"/>')
    return out
