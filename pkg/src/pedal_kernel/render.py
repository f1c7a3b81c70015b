"""Schematic SVG drawings of the eleven-point configuration.

The scene is first collected as plain primitives in world coordinates, then
fitted into a fixed 1000-unit viewBox.  Output is a pure function of the
triangle and the layer set, so identical input gives identical bytes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .geom_core import Circle, GeometryError, Line, Point, Triangle, line_intersection
from .notable_points import basic_apollonius_circles, eleven_points, symmedian_lines

LAYERS = (
    "triangle",
    "circumcircle",
    "brocard-circle",
    "axis",
    "interior-points",
    "exterior-points",
    "apollonius",
    "symmedians",
)
VIEW = 1000.0
MARGIN = 0.15

DISPLAY = {
    "O": "O",
    "Omega1": "Ω₁",
    "Omega2": "Ω₂",
    "L1": "L₁",
    "L2": "L₂",
    "L3": "L₃",
    "Omega1p": "Ω′₁",
    "Omega2p": "Ω′₂",
    "L1p": "L′₁",
    "L2p": "L′₂",
    "L3p": "L′₃",
}

STYLE = """
.tri { fill: none; stroke: #222; stroke-width: 2.5 }
.circ { fill: none; stroke: #555; stroke-width: 1.5 }
.brocard { fill: none; stroke: #1f6fb4; stroke-width: 2 }
.apol { fill: none; stroke: #999; stroke-width: 1; stroke-dasharray: 6 4 }
.sym { fill: none; stroke: #2a9d4b; stroke-width: 1.2 }
.axis { stroke: #c0392b; stroke-width: 2 }
.point-marker { fill: #1f6fb4; stroke: none }
.point-marker.exterior { fill: #c0392b }
.aux-marker { fill: #222 }
text { font-family: sans-serif; font-size: 18px; fill: #111 }
"""


@dataclass
class Scene:
    layers: frozenset
    circles: list = field(default_factory=list)   # (Circle, css class)
    polygons: list = field(default_factory=list)  # ([Point], css class)
    segments: list = field(default_factory=list)  # (Point, Point, css class)
    lines: list = field(default_factory=list)     # (Line, css class, id)
    markers: list = field(default_factory=list)   # (Point, label, css class)
    warnings: list = field(default_factory=list)

    def bbox(self):
        xs, ys = [], []
        for c, _ in self.circles:
            xs += [c.center.x - c.radius, c.center.x + c.radius]
            ys += [c.center.y - c.radius, c.center.y + c.radius]
        for pts, _ in self.polygons:
            xs += [p.x for p in pts]
            ys += [p.y for p in pts]
        for p, q, _ in self.segments:
            xs += [p.x, q.x]
            ys += [p.y, q.y]
        for p, _, _ in self.markers:
            xs.append(p.x)
            ys.append(p.y)
        return min(xs), min(ys), max(xs), max(ys)


def parse_layers(text: str) -> frozenset:
    if text.strip() == "all":
        return frozenset(LAYERS)
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [n for n in names if n not in LAYERS]
    if bad:
        raise ValueError(f"unknown layer(s): {', '.join(bad)}")
    return frozenset(names)


def build_scene(tri: Triangle, layers) -> Scene:
    layers = frozenset(layers)
    sc = Scene(layers)
    s = eleven_points(tri)
    A, B, C = tri.vertices

    if "triangle" in layers:
        sc.polygons.append(([A, B, C], "tri"))
        for v, name in zip(tri.vertices, "ABC"):
            sc.markers.append((v, name, "aux-marker"))
    if "circumcircle" in layers:
        sc.circles.append((tri.circumcircle, "circ"))
    if "brocard-circle" in layers:
        if s.brocard_circle is None:
            sc.warnings.append("brocard-circle skipped: equilateral triangle")
        else:
            sc.circles.append((s.brocard_circle, "brocard"))
            sc.markers.append((s.lemoine, "L", "aux-marker"))
    if "symmedians" in layers:
        sides = (Line.through(B, C), Line.through(C, A), Line.through(A, B))
        for v, sym, side in zip(tri.vertices, symmedian_lines(tri), sides):
            foot = line_intersection(sym, side)
            if foot is not None:
                sc.segments.append((v, foot, "sym"))
    if "apollonius" in layers:
        for k in basic_apollonius_circles(tri):
            if isinstance(k, Circle):
                sc.circles.append((k, "apol"))
            else:
                sc.lines.append((k, "apol", None))
    if "interior-points" in layers:
        for name, p in s.interior().items():
            sc.markers.append((p, name, "point-marker"))
    if "axis" in layers:
        if s.axis_g is None:
            sc.warnings.append("axis skipped: equilateral triangle")
        else:
            sc.lines.append((s.axis_g, "axis", "g"))
    if "exterior-points" in layers:
        if s.equilateral:
            sc.warnings.append("exterior-points skipped: equilateral triangle")
        for name, p in s.exterior().items():
            if isinstance(p, Point):
                sc.markers.append((p, name, "point-marker exterior"))
            elif p is not None:
                sc.warnings.append(f"{name} is at infinity")
    return sc


def _clip(line: Line, box) -> tuple[Point, Point] | None:
    """Clip an infinite line to an axis-aligned box (Liang-Barsky)."""
    x0, y0, x1, y1 = box
    t_lo, t_hi = -math.inf, math.inf
    for p0, d, lo, hi in ((line.anchor.x, line.direction.x, x0, x1), (line.anchor.y, line.direction.y, y0, y1)):
        if d == 0.0:
            if not lo <= p0 <= hi:
                return None
            continue
        ta, tb = (lo - p0) / d, (hi - p0) / d
        t_lo = max(t_lo, min(ta, tb))
        t_hi = min(t_hi, max(ta, tb))
    if t_lo >= t_hi:
        return None
    return line.at(t_lo), line.at(t_hi)


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def to_svg(sc: Scene) -> str:
    x0, y0, x1, y1 = sc.bbox()
    span = max(x1 - x0, y1 - y0, 1e-12)
    world = span * (1.0 + 2.0 * MARGIN)
    k = VIEW / world
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    half = 0.5 * world
    box = (cx - half, cy - half, cx + half, cy + half)

    def tx(p: Point) -> tuple[str, str]:
        return _f((p.x - cx) * k + VIEW / 2), _f(VIEW / 2 - (p.y - cy) * k)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {VIEW:.0f} {VIEW:.0f}" '
        f'width="{VIEW:.0f}" height="{VIEW:.0f}">',
        f"<style>{STYLE}</style>",
    ]
    for w in sc.warnings:
        out.append(f"<!-- warning: {escape(w)} -->")
    for pts, cls in sc.polygons:
        coords = " ".join(",".join(tx(p)) for p in pts)
        out.append(f'<polygon class="{cls}" points="{coords}"/>')
    for c, cls in sc.circles:
        x, y = tx(c.center)
        out.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{_f(c.radius * k)}"/>')
    for p, q, cls in sc.segments:
        (ax, ay), (bx, by) = tx(p), tx(q)
        out.append(f'<path class="{cls}" d="M {ax} {ay} L {bx} {by}"/>')
    for line, cls, ident in sc.lines:
        seg = _clip(line, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = tx(seg[0]), tx(seg[1])
        if ident is None:
            out.append(f'<path class="{cls}" d="M {ax} {ay} L {bx} {by}"/>')
        else:
            out.append(f'<line id="{ident}" class="{cls}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
            lx, ly = tx(seg[0] + (seg[1] - seg[0]) * 0.1)
            out.append(f'<text x="{lx}" y="{ly}" dx="8" dy="-8">{ident}</text>')
    for p, name, cls in sc.markers:
        x, y = tx(p)
        label = DISPLAY.get(name, name)
        out.append(f'<circle class="{cls}" data-label="{name}" cx="{x}" cy="{y}" r="5"/>')
        out.append(f'<text x="{x}" y="{y}" dx="7" dy="-7">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(tri: Triangle, layers=LAYERS) -> str:
    sc = build_scene(tri, layers)
    if not (sc.circles or sc.polygons or sc.segments or sc.markers):
        raise GeometryError("nothing to draw for the selected layers")
    return to_svg(sc)


def scene_dict(tri: Triangle, layers=LAYERS) -> dict:
    """Drawable primitives in world coordinates, for external renderers."""
    sc = build_scene(tri, layers)
    return {
        "circles": [{"center": list(c.center), "radius": c.radius, "class": cls} for c, cls in sc.circles],
        "polygons": [{"points": [list(p) for p in pts], "class": cls} for pts, cls in sc.polygons],
        "segments": [{"from": list(p), "to": list(q), "class": cls} for p, q, cls in sc.segments],
        "lines": [{"anchor": list(l.anchor), "direction": list(l.direction), "class": cls, "id": i}
                  for l, cls, i in sc.lines],
        "markers": [{"at": list(p), "label": name, "class": cls} for p, name, cls in sc.markers],
        "warnings": list(sc.warnings),
    }
