"""Pedal triangles and the angle map M -> (alpha1, beta1, gamma1)."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .geom_core import (
    AngleTriple,
    GeometryError,
    Inversion,
    Line,
    Point,
    Triangle,
    collinear,
    dist,
    fit_line,
    invert_point,
    orientation_sign,
    project_point_on_line,
    triangle_angles,
)

TWO_PI = 2.0 * math.pi


class OnCircumcircle(GeometryError):
    pass


class AtVertex(GeometryError):
    pass


class OutsideCircle(GeometryError):
    pass


class Orientation(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PedalResult:
    feet: tuple[Point, Point, Point]
    orientation: Orientation
    angles: Optional[AngleTriple] = None
    simson_line: Optional[Line] = None

    @property
    def is_degenerate(self) -> bool:
        return self.orientation is Orientation.DEGENERATE


class PedalAngles(NamedTuple):
    angles: AngleTriple
    orientation: Orientation


class VertexAngles(NamedTuple):
    bmc: float
    cma: float
    amb: float


def side_lines(tri: Triangle) -> tuple[Line, Line, Line]:
    A, B, C = tri.vertices
    return (Line.through(B, C), Line.through(C, A), Line.through(A, B))


def pedal_feet(tri: Triangle, m: Point) -> tuple[Point, Point, Point]:
    """Feet of the perpendiculars from m to BC, CA, AB (in that order)."""
    la, lb, lc = side_lines(tri)
    return (project_point_on_line(m, la), project_point_on_line(m, lb), project_point_on_line(m, lc))


def circle_position(tri: Triangle, m: Point) -> Orientation:
    """Inside / outside / on the circumcircle, using the band |OM/R - 1| <= eps."""
    rel = dist(m, tri.circumcenter) / tri.R - 1.0
    eps = tri.tol.eps_rel
    if rel < -eps:
        return Orientation.POSITIVE
    if rel > eps:
        return Orientation.NEGATIVE
    return Orientation.DEGENERATE


def pedal_triangle(tri: Triangle, m: Point) -> PedalResult:
    feet = pedal_feet(tri, m)
    kind = circle_position(tri, m)
    if kind is Orientation.DEGENERATE:
        return PedalResult(feet, kind, simson_line=_simson_line(feet))
    al, be, ga = triangle_angles(*feet)
    # the three angles come from independent atan2 calls; renormalize the
    # rounding so the triple satisfies its own invariant exactly
    return PedalResult(feet, kind, angles=AngleTriple.normalized(al, be, ga, tol=tri.tol))


def _simson_line(feet) -> Line:
    pts = list(feet)
    return fit_line(pts)


def _check_vertex(tri: Triangle, m: Point) -> None:
    eps = tri.tol.eps_rel * tri.scale
    for name, v in zip("ABC", tri.vertices):
        if dist(m, v) <= eps:
            raise AtVertex(f"point coincides with vertex {name}")


def f_of(tri: Triangle, m: Point) -> PedalAngles:
    """Angles of the pedal triangle of m, tagged with its orientation."""
    _check_vertex(tri, m)
    res = pedal_triangle(tri, m)
    if res.is_degenerate:
        raise OnCircumcircle("point lies on the circumcircle; its pedal triangle is a Simson line")
    return PedalAngles(res.angles, res.orientation)


def feet_orientation(tri: Triangle, m: Point) -> int:
    """Orientation sign of the feet relative to the triangle: +1 same, -1 opposite."""
    s = orientation_sign(*pedal_feet(tri, m), tri.tol)
    return s * tri.orientation


def directed_angle(m: Point, p: Point, q: Point, sense: int) -> float:
    """Angle from ray m->p to ray m->q turning in ``sense`` (+1 ccw), in [0, 2pi)."""
    u = p - m
    v = q - m
    return math.atan2(sense * u.cross(v), u.dot(v)) % TWO_PI


def vertex_angles(tri: Triangle, m: Point) -> VertexAngles:
    """Angles BMC, CMA, AMB with the reflex convention for interior points.

    A value exceeds pi exactly when m sits on the other side of the
    corresponding side-line from the opposite vertex; on the side itself
    it is pi.
    """
    if circle_position(tri, m) is not Orientation.POSITIVE:
        raise OutsideCircle("vertex angles are defined only strictly inside the circumcircle")
    _check_vertex(tri, m)
    A, B, C = tri.vertices
    s = tri.orientation
    return VertexAngles(directed_angle(m, B, C, s), directed_angle(m, C, A, s), directed_angle(m, A, B, s))


def angles_from_vertex_angles(tri: Triangle, m: Point) -> tuple[float, float, float]:
    va = vertex_angles(tri, m)
    return tuple(v - t for v, t in zip(va, tri.angles))  # type: ignore[return-value]


def side_ratio_residual(tri: Triangle, m: Point) -> float:
    """max |B1C1 * 2R / (a * MA) - 1| over the three pedal sides."""
    A1, B1, C1 = pedal_feet(tri, m)
    two_r = tri.scale
    pedal_sides = (dist(B1, C1), dist(C1, A1), dist(A1, B1))
    res = 0.0
    for ps, side, v in zip(pedal_sides, tri.sides, tri.vertices):
        res = max(res, abs(ps * two_r / (side * dist(m, v)) - 1.0))
    return res


def simson_residual(tri: Triangle, m: Point) -> float:
    return collinear(list(pedal_feet(tri, m)), tri.tol).residual


def inverse_pair_consistency(tri: Triangle, m: Point) -> float:
    """Angle residual between f(m) and f(m') where m' is m inverted in the circumcircle.

    Raises GeometryError if the two orientations are not opposite.
    """
    if circle_position(tri, m) is not Orientation.POSITIVE:
        raise OutsideCircle("m must lie strictly inside the circumcircle")
    n = invert_point(Inversion.in_circle(tri.circumcircle, tri.tol), m)
    fm = f_of(tri, m)
    fn = f_of(tri, n)
    if fm.orientation is fn.orientation:
        raise GeometryError("inverse points produced pedal triangles of equal orientation")
    return fm.angles.max_diff(fn.angles)
