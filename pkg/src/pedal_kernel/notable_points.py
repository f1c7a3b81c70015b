"""The eleven points whose pedal triangles are similar to the base triangle.

Six of them lie inside the circumcircle (O, the two Brocard points and the
projections L1, L2, L3 of O on the symmedians) and sit on the Brocard circle
with diameter OL.  Their inverses in the circumcircle are the five exterior
points, which sit on the line g, the image of the Brocard circle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .geom_core import (
    AngleTriple,
    Circle,
    GeneralizedCircle,
    GeometryError,
    Inversion,
    Line,
    Point,
    Triangle,
    angle_at,
    apollonius,
    circle_through,
    dist,
    intersect_gcircles,
    invert_gcircle,
    invert_point,
    line_intersection,
    midpoint,
    orientation_sign,
    project_point_on_line,
)
from .inverse_pedal import solve
from .pedal_map import Orientation, f_of, vertex_angles


class EquilateralDegenerate(GeometryError):
    pass


class AtInfinity(NamedTuple):
    direction: Point


MaybeInfinitePoint = Union[Point, AtInfinity]

INTERIOR = ("O", "Omega1", "Omega2", "L1", "L2", "L3")
EXTERIOR = ("Omega1p", "Omega2p", "L1p", "L2p", "L3p")

# permutation of ABC whose angles the pedal triangle of each point carries
LABELS = {
    "O": "ABC",
    "Omega1": "BCA",
    "Omega2": "CAB",
    "L1": "ACB",
    "L2": "CBA",
    "L3": "BAC",
    "Omega1p": "BCA",
    "Omega2p": "CAB",
    "L1p": "ACB",
    "L2p": "CBA",
    "L3p": "BAC",
}


def permuted_angles(tri: Triangle, perm: str) -> AngleTriple:
    base = tri.angles
    vals = [base["ABC".index(ch)] for ch in perm]
    return AngleTriple(*vals, tol=tri.tol)


# ---------------------------------------------------------------------------
# barycentrics
# ---------------------------------------------------------------------------


class Barycentric(NamedTuple):
    u: float
    v: float
    w: float

    def normalized(self) -> "Barycentric":
        s = self.u + self.v + self.w
        if s == 0.0:
            raise GeometryError("zero weight sum: point at infinity")
        return Barycentric(self.u / s, self.v / s, self.w / s)


def barycentric_of(tri: Triangle, p: Point) -> Barycentric:
    A, B, C = tri.vertices
    area = tri.doubled_area
    return Barycentric(
        (B - p).cross(C - p) / area,
        (C - p).cross(A - p) / area,
        (A - p).cross(B - p) / area,
    )


def point_of(tri: Triangle, bc: Barycentric) -> Point:
    """Cartesian point of (possibly unnormalized) barycentric weights.

    Evaluated relative to the circumcenter, the way the weights are written
    as combinations of OA, OB, OC.
    """
    u, v, w = bc.normalized()
    O = tri.circumcenter
    A, B, C = (x - O for x in tri.vertices)
    return Point(O.x + u * A.x + v * B.x + w * C.x, O.y + u * A.y + v * B.y + w * C.y)


def _squares(tri: Triangle):
    a, b, c = tri.sides
    return a * a, b * b, c * c


def symmedian_formula_points(tri: Triangle) -> tuple[Point, Point, Point]:
    """L1, L2, L3 from their closed-form barycentric weights."""
    a2, b2, c2 = _squares(tri)
    return (
        point_of(tri, Barycentric(b2 + c2 - a2, b2, c2)),
        point_of(tri, Barycentric(a2, c2 + a2 - b2, c2)),
        point_of(tri, Barycentric(a2, b2, a2 + b2 - c2)),
    )


def _exterior_brocard_weights(a2, b2, c2):
    den = a2 * a2 + b2 * b2 + c2 * c2 - a2 * b2 - b2 * c2 - c2 * a2
    if den == 0.0:
        raise EquilateralDegenerate("exterior Brocard points are undefined for an equilateral triangle")
    w1 = Barycentric(a2 * (a2 - b2) / den, b2 * (b2 - c2) / den, c2 * (c2 - a2) / den)
    w2 = Barycentric(a2 * (a2 - c2) / den, b2 * (b2 - a2) / den, c2 * (c2 - b2) / den)
    return w1, w2, den


def exterior_brocard_formula_points(tri: Triangle) -> tuple[Point, Point]:
    w1, w2, _ = _exterior_brocard_weights(*_squares(tri))
    return point_of(tri, w1), point_of(tri, w2)


def asymmetric_midpoint_formula(tri: Triangle) -> Point:
    """Variant of the midpoint formula whose OC weight lacks the c^2 factor.

    It does not give the midpoint of the exterior Brocard points; it is kept
    so the verification report can show by how much.  Use
    ``midpoint_formula`` for the correct, symmetric version.
    """
    a2, b2, c2 = _squares(tri)
    den = 2.0 * (a2 * a2 + b2 * b2 + c2 * c2 - a2 * b2 - b2 * c2 - c2 * a2)
    O = tri.circumcenter
    ws = (a2 * (2 * a2 - b2 - c2), b2 * (2 * b2 - c2 - a2), 2 * c2 - a2 - b2)
    out = O
    for wi, v in zip(ws, tri.vertices):
        out = out + (v - O) * (wi / den)
    return out


def midpoint_formula(tri: Triangle) -> Point:
    a2, b2, c2 = _squares(tri)
    return point_of(
        tri,
        Barycentric(a2 * (2 * a2 - b2 - c2), b2 * (2 * b2 - c2 - a2), c2 * (2 * c2 - a2 - b2)),
    )


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def brocard_points(tri: Triangle) -> tuple[Point, Point]:
    """(Omega1, Omega2) as the interior solutions for the cyclic permutations."""
    om1 = solve(tri, permuted_angles(tri, "BCA")).inside
    om2 = solve(tri, permuted_angles(tri, "CAB")).inside
    return om1, om2


def _tangent_circle(p: Point, q: Point, tangent: Line) -> Circle:
    """Circle through p and q, tangent at q to the given line through q."""
    normal = Line(q, tangent.normal)
    bis = Line(midpoint(p, q), (q - p).unit().perp())
    c = line_intersection(normal, bis)
    if c is None:
        raise GeometryError("tangent circle is undefined")
    return Circle(c, dist(c, q))


def _other_intersection(c1: Circle, c2: Circle, known: Point) -> Point:
    pts = intersect_gcircles(c1, c2)
    return max(pts, key=lambda p: dist(p, known))


def brocard_points_by_tangent_circles(tri: Triangle) -> tuple[Point, Point]:
    """Classical construction, independent of the pedal solver.

    Omega1 is on the circle through A, B tangent to BC at B and on the circle
    through B, C tangent to CA at C; Omega2 mirrors this.
    """
    A, B, C = tri.vertices
    om1 = _other_intersection(
        _tangent_circle(A, B, Line.through(B, C)), _tangent_circle(B, C, Line.through(C, A)), B
    )
    om2 = _other_intersection(
        _tangent_circle(B, A, Line.through(A, C)), _tangent_circle(C, B, Line.through(B, A)), B
    )
    return om1, om2


def brocard_angle(tri: Triangle, omega1: Optional[Point] = None) -> float:
    """Common angle at Omega1, measured on the constructed point."""
    A, B, C = tri.vertices
    om = brocard_points(tri)[0] if omega1 is None else omega1
    if dist(om, A) == 0.0 or dist(om, B) == 0.0 or dist(om, C) == 0.0:
        raise GeometryError("Brocard point collapsed onto a vertex")
    return (angle_at(A, om, B) + angle_at(B, om, C) + angle_at(C, om, A)) / 3.0


def brocard_angle_cot(tri: Triangle) -> float:
    """cot w = cot A + cot B + cot C; cross-check only."""
    return math.atan(1.0 / sum(1.0 / math.tan(t) for t in tri.angles))


def symmedian_lines(tri: Triangle) -> tuple[Line, Line, Line]:
    """Median through each vertex reflected in the internal angle bisector."""
    v = tri.vertices
    out = []
    for i in range(3):
        P, Q, S = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
        m = midpoint(Q, S) - P
        u = ((Q - P).unit() + (S - P).unit()).unit()
        s = u * (2.0 * m.dot(u)) - m
        out.append(Line(P, s.unit()))
    return tuple(out)  # type: ignore[return-value]


def lemoine_point(tri: Triangle) -> Point:
    sa, sb, sc = symmedian_lines(tri)
    L = line_intersection(sa, sb)
    if L is None:
        raise GeometryError("symmedians are parallel")
    if abs(sc.signed_distance(L)) > tri.tol.eps_rel * tri.scale:
        raise GeometryError("symmedians fail to concur")
    return L


def symmedian_projections(tri: Triangle) -> tuple[Point, Point, Point]:
    """Feet of the perpendiculars from O to the three symmedians."""
    O = tri.circumcenter
    return tuple(project_point_on_line(O, s) for s in symmedian_lines(tri))  # type: ignore[return-value]


def is_equilateral(tri: Triangle, lemoine: Optional[Point] = None) -> bool:
    L = lemoine_point(tri) if lemoine is None else lemoine
    return dist(L, tri.circumcenter) <= tri.tol.eps_rel * tri.R


def brocard_circle(tri: Triangle, lemoine: Optional[Point] = None) -> Circle:
    L = lemoine_point(tri) if lemoine is None else lemoine
    O = tri.circumcenter
    if is_equilateral(tri, L):
        raise EquilateralDegenerate("Brocard circle collapses to the circumcenter")
    return Circle(midpoint(O, L), 0.5 * dist(O, L))


def _canonical(d: Point) -> Point:
    return d if (d.x > 0 or (d.x == 0 and d.y > 0)) else -d


def axis_g(tri: Triangle, brocard: Optional[Circle] = None) -> Line:
    k0 = brocard_circle(tri) if brocard is None else brocard
    img = invert_gcircle(Inversion.in_circle(tri.circumcircle, tri.tol), k0)
    if not isinstance(img, Line):
        raise GeometryError("image of the Brocard circle is not a line")
    return Line(img.anchor, _canonical(img.direction))


def exterior_points(tri: Triangle, interior=None, g: Optional[Line] = None) -> dict[str, MaybeInfinitePoint]:
    """Inverses of Omega1, Omega2, L1, L2, L3 in the circumcircle."""
    if interior is None:
        om1, om2 = brocard_points(tri)
        interior = (om1, om2) + symmedian_projections(tri)
    if g is None:
        g = axis_g(tri)
    O = tri.circumcenter
    inv = Inversion.in_circle(tri.circumcircle, tri.tol)
    out: dict[str, MaybeInfinitePoint] = {}
    for name, p in zip(EXTERIOR, interior):
        if dist(p, O) <= tri.tol.eps_rel * tri.R:
            out[name] = AtInfinity(g.direction)
        else:
            out[name] = invert_point(inv, p)
    return out


def basic_apollonius_circles(tri: Triangle) -> tuple[GeneralizedCircle, GeneralizedCircle, GeneralizedCircle]:
    """k1 on base (B, C) through A, k2 on (C, A) through B, k3 on (A, B) through C."""
    A, B, C = tri.vertices
    a, b, c = tri.sides
    return (
        apollonius(B, C, c / b, tri.tol),
        apollonius(C, A, a / c, tri.tol),
        apollonius(A, B, b / a, tri.tol),
    )


# ---------------------------------------------------------------------------
# the assembled set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NotablePointSet:
    triangle: Triangle
    o: Point
    omega1: Point
    omega2: Point
    l1: Point
    l2: Point
    l3: Point
    lemoine: Point
    brocard_angle: float
    omega1p: Optional[MaybeInfinitePoint] = None
    omega2p: Optional[MaybeInfinitePoint] = None
    l1p: Optional[MaybeInfinitePoint] = None
    l2p: Optional[MaybeInfinitePoint] = None
    l3p: Optional[MaybeInfinitePoint] = None
    brocard_circle: Optional[Circle] = None
    axis_g: Optional[Line] = None
    similarity_labels: dict = field(default_factory=lambda: dict(LABELS))
    label_residuals: dict = field(default_factory=dict)

    @property
    def equilateral(self) -> bool:
        return self.axis_g is None

    def interior(self) -> dict[str, Point]:
        return dict(zip(INTERIOR, (self.o, self.omega1, self.omega2, self.l1, self.l2, self.l3)))

    def exterior(self) -> dict[str, Optional[MaybeInfinitePoint]]:
        return dict(zip(EXTERIOR, (self.omega1p, self.omega2p, self.l1p, self.l2p, self.l3p)))

    def finite_exterior(self) -> dict[str, Point]:
        return {k: v for k, v in self.exterior().items() if isinstance(v, Point)}

    def all_points(self) -> dict[str, Optional[MaybeInfinitePoint]]:
        out: dict[str, Optional[MaybeInfinitePoint]] = dict(self.interior())
        out.update(self.exterior())
        return out


def label_residual(tri: Triangle, p: Point, label: str, expect: Orientation) -> float:
    """Angle mismatch between f(p) and the labeled permutation; inf on wrong orientation."""
    if dist(p, tri.circumcenter) <= tri.tol.eps_rel * tri.R and label == "ABC":
        return 0.0
    fa = f_of(tri, p)
    if fa.orientation is not expect:
        return math.inf
    return fa.angles.max_diff(permuted_angles(tri, label))


def eleven_points(tri: Triangle) -> NotablePointSet:
    O = tri.circumcenter
    L = lemoine_point(tri)
    om1, om2 = brocard_points(tri)
    l1, l2, l3 = symmedian_projections(tri)
    omega = math.pi / 6 if is_equilateral(tri, L) else brocard_angle(tri, om1)
    interior = (om1, om2, l1, l2, l3)

    residuals = {}
    for name, p in zip(INTERIOR, (O,) + interior):
        residuals[name] = label_residual(tri, p, LABELS[name], Orientation.POSITIVE)

    if is_equilateral(tri, L):
        return NotablePointSet(tri, O, om1, om2, l1, l2, l3, L, omega, label_residuals=residuals)

    k0 = brocard_circle(tri, L)
    g = axis_g(tri, k0)
    ext = exterior_points(tri, interior, g)
    for name, p in ext.items():
        if isinstance(p, Point):
            residuals[name] = label_residual(tri, p, LABELS[name], Orientation.NEGATIVE)
    return NotablePointSet(
        tri, O, om1, om2, l1, l2, l3, L, omega,
        omega1p=ext["Omega1p"], omega2p=ext["Omega2p"],
        l1p=ext["L1p"], l2p=ext["L2p"], l3p=ext["L3p"],
        brocard_circle=k0, axis_g=g, label_residuals=residuals,
    )


# ---------------------------------------------------------------------------
# a^2 + b^2 = 2 c^2
# ---------------------------------------------------------------------------


class MedianReport(NamedTuple):
    condition_holds: bool
    l_on_abo_circle: bool
    l_inverse_on_ab: bool
    residuals: tuple[float, float, float]

    @property
    def consistent(self) -> bool:
        return self.condition_holds == self.l_on_abo_circle == self.l_inverse_on_ab


def median_proportional_check(tri: Triangle) -> MedianReport:
    eps = tri.tol.eps_rel
    A, B, C = tri.vertices
    a, b, c = tri.sides
    O = tri.circumcenter
    R = tri.R
    r_cond = abs(a * a + b * b - 2 * c * c) / max(a, b, c) ** 2

    L = lemoine_point(tri)
    ab = Line.through(A, B)
    if orientation_sign(A, B, O, tri.tol) == 0:
        # right angle at C: the circle ABO degenerates to the line AB
        r_circle = abs(ab.signed_distance(L)) / R
    else:
        k1 = circle_through(A, B, O)
        r_circle = abs(dist(L, k1.center) - k1.radius) / R

    if dist(L, O) <= eps * R:
        # equilateral: L = O and its inverse is a point at infinity, taken as
        # incident with every line
        r_inv = 0.0
    else:
        Lp = invert_point(Inversion.in_circle(tri.circumcircle, tri.tol), L)
        r_inv = abs(ab.signed_distance(Lp)) / max(R, dist(Lp, O))
    return MedianReport(r_cond <= eps, r_circle <= eps, r_inv <= eps, (r_cond, r_circle, r_inv))


def vertex_angle_2gamma_residual(tri: Triangle, l3: Point) -> float:
    """|angle AL3B - 2 gamma| with the reflex convention."""
    return abs(vertex_angles(tri, l3).amb - 2.0 * tri.angles[2])
