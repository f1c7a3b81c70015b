"""Plane geometry primitives under an explicit tolerance policy.

Everything here is double precision.  Predicates compare residuals against
``ToleranceConfig.eps_rel`` scaled by a length that is meaningful in context
(the circumdiameter when a triangle is around, otherwise the radius or the
point spread).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence, Union

_ULP = 2.220446049250313e-16


# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------


class GeometryError(ValueError):
    """Base class for all kernel errors."""


class DegenerateTriangle(GeometryError):
    pass


class PointAtCenter(GeometryError):
    pass


class CoincidentBasePoints(GeometryError):
    pass


class IdenticalLoci(GeometryError):
    pass


class InvalidAngles(GeometryError):
    pass


# ---------------------------------------------------------------------------
# tolerance
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ToleranceConfig:
    eps_rel: float = 1e-9
    angle_eps: float = 1e-9

    def __post_init__(self):
        for name in ("eps_rel", "angle_eps"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if self.eps_rel >= 1e-3:
            raise ValueError(f"eps_rel must be < 1e-3, got {self.eps_rel!r}")

    @classmethod
    def uniform(cls, eps: float) -> "ToleranceConfig":
        return cls(eps_rel=eps, angle_eps=eps)


DEFAULT_TOL = ToleranceConfig()


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


class Point(NamedTuple):
    """Cartesian point, also used as a 2D vector.

    Arithmetic is vector arithmetic (``p + q``, ``p - q``, ``p * s``), not
    tuple concatenation.  Ordering is lexicographic by ``(x, y)``.
    """

    x: float
    y: float

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s):  # type: ignore[override]
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return Point(self.x / s, self.y / s)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def dot(self, other) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y

    def unit(self) -> "Point":
        n = self.norm()
        if n == 0.0:
            raise GeometryError("cannot normalize the zero vector")
        return Point(self.x / n, self.y / n)

    def perp(self) -> "Point":
        """Counterclockwise quarter turn."""
        return Point(-self.y, self.x)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


def make_point(x: float, y: float) -> Point:
    p = Point(float(x), float(y))
    if not p.is_finite():
        raise GeometryError(f"non-finite point {p}")
    return p


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def angle_at(vertex: Point, p: Point, q: Point) -> float:
    """Unsigned angle p-vertex-q in [0, pi]."""
    u = p - vertex
    v = q - vertex
    return math.atan2(abs(u.cross(v)), u.dot(v))


def angle_between_lines(u: Point, v: Point) -> float:
    """Angle in [0, pi/2] between two undirected directions."""
    return math.atan2(abs(u.cross(v)), abs(u.dot(v)))


# ---------------------------------------------------------------------------
# circles and lines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise GeometryError(f"circle radius must be positive and finite, got {self.radius!r}")
        if not self.center.is_finite():
            raise GeometryError("circle center must be finite")

    def residual(self, p: Point) -> float:
        """Signed distance of ``p`` from the circle, relative to the radius."""
        return (dist(p, self.center) - self.radius) / self.radius


@dataclass(frozen=True)
class Line:
    anchor: Point
    direction: Point

    def __post_init__(self):
        if abs(self.direction.norm() - 1.0) > 1e-9:
            raise GeometryError(f"line direction must be a unit vector, got {self.direction}")

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        d = q - p
        if d.norm() == 0.0:
            raise GeometryError("line through coincident points")
        return cls(p, d.unit())

    @property
    def normal(self) -> Point:
        return self.direction.perp()

    def signed_distance(self, p: Point) -> float:
        return (p - self.anchor).dot(self.normal)

    def at(self, t: float) -> Point:
        return self.anchor + self.direction * t


GeneralizedCircle = Union[Circle, Line]


def circle_through(p: Point, q: Point, r: Point) -> Circle:
    """Circle through three points; raises DegenerateTriangle if collinear."""
    b = q - p
    c = r - p
    d = 2.0 * b.cross(c)
    if d == 0.0:
        raise DegenerateTriangle("points are collinear")
    bb = b.norm2()
    cc = c.norm2()
    ux = (c.y * bb - b.y * cc) / d
    uy = (b.x * cc - c.x * bb) / d
    center = Point(p.x + ux, p.y + uy)
    return Circle(center, math.hypot(ux, uy))


# ---------------------------------------------------------------------------
# angles and triangles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AngleTriple:
    """Angles of a triangle, in radians; the codomain of the pedal map."""

    alpha1: float
    beta1: float
    gamma1: float
    tol: ToleranceConfig = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        vals = self.as_tuple()
        if not all(math.isfinite(v) and 0.0 < v < math.pi for v in vals):
            raise InvalidAngles(f"angles must lie in (0, pi): {vals}")
        if abs(sum(vals) - math.pi) > self.tol.angle_eps:
            raise InvalidAngles(f"angles must sum to pi, got sum {sum(vals)!r}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.alpha1, self.beta1, self.gamma1)

    def __iter__(self):
        return iter(self.as_tuple())

    def __getitem__(self, i):
        return self.as_tuple()[i]

    def max_diff(self, other: "AngleTriple") -> float:
        return max(abs(u - v) for u, v in zip(self, other))

    def close_to(self, other: "AngleTriple", eps: Optional[float] = None) -> bool:
        eps = self.tol.angle_eps if eps is None else eps
        return self.max_diff(other) <= eps

    @classmethod
    def normalized(cls, a: float, b: float, c: float, tol: ToleranceConfig = DEFAULT_TOL) -> "AngleTriple":
        """Rescale three positive angles so they sum to exactly pi."""
        s = a + b + c
        if not (s > 0 and math.isfinite(s)):
            raise InvalidAngles(f"bad angle triple {(a, b, c)}")
        k = math.pi / s
        a, b = a * k, b * k
        return cls(a, b, math.pi - a - b, tol=tol)


def triangle_angles(p: Point, q: Point, r: Point) -> tuple[float, float, float]:
    """Interior angles at p, q, r, computed with atan2 on edge vectors."""
    return (angle_at(p, q, r), angle_at(q, r, p), angle_at(r, p, q))


@dataclass(frozen=True)
class Triangle:
    """Ordered triangle ABC with sides a=|BC|, b=|CA|, c=|AB|."""

    a_vertex: Point
    b_vertex: Point
    c_vertex: Point
    tol: ToleranceConfig = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        for v in self.vertices:
            if not v.is_finite():
                raise DegenerateTriangle("triangle vertices must be finite")
        longest = max(self.sides)
        if longest == 0.0 or abs(self.doubled_area) / (longest * longest) < self.tol.eps_rel:
            raise DegenerateTriangle("vertices are collinear within tolerance")

    @classmethod
    def from_sides(cls, a: float, b: float, c: float, tol: ToleranceConfig = DEFAULT_TOL) -> "Triangle":
        """Canonical placement: B at the origin, C at (a, 0), A above the x-axis."""
        if not all(math.isfinite(s) and s > 0 for s in (a, b, c)):
            raise DegenerateTriangle(f"sides must be positive, got {(a, b, c)}")
        longest = max(a, b, c)
        if 2 * longest >= (a + b + c) * (1 - tol.eps_rel):
            raise DegenerateTriangle(f"sides {(a, b, c)} violate the strict triangle inequality")
        # A = (x, y) with |AB| = c, |AC| = b
        x = (a * a + c * c - b * b) / (2 * a)
        y2 = c * c - x * x
        if y2 <= 0:
            raise DegenerateTriangle(f"sides {(a, b, c)} do not form a triangle")
        return cls(Point(x, math.sqrt(y2)), Point(0.0, 0.0), Point(float(a), 0.0), tol=tol)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a_vertex, self.b_vertex, self.c_vertex)

    @cached_property
    def sides(self) -> tuple[float, float, float]:
        A, B, C = self.vertices
        return (dist(B, C), dist(C, A), dist(A, B))

    @property
    def a(self) -> float:
        return self.sides[0]

    @property
    def b(self) -> float:
        return self.sides[1]

    @property
    def c(self) -> float:
        return self.sides[2]

    @cached_property
    def doubled_area(self) -> float:
        A, B, C = self.vertices
        return (B - A).cross(C - A)

    @property
    def orientation(self) -> int:
        return 1 if self.doubled_area > 0 else -1

    @cached_property
    def circumcircle(self) -> Circle:
        return circle_through(*self.vertices)

    @property
    def circumcenter(self) -> Point:
        return self.circumcircle.center

    @property
    def R(self) -> float:
        return self.circumcircle.radius

    @cached_property
    def angles(self) -> AngleTriple:
        al, be, ga = triangle_angles(*self.vertices)
        return AngleTriple(al, be, ga, tol=self.tol)

    @property
    def scale(self) -> float:
        """Length scale for point comparisons: the circumdiameter."""
        return 2.0 * self.R

    def relabeled(self, perm: Sequence[int]) -> "Triangle":
        v = self.vertices
        return Triangle(v[perm[0]], v[perm[1]], v[perm[2]], tol=self.tol)


def circumcircle(tri: Triangle) -> Circle:
    return tri.circumcircle


def angles_of(tri: Triangle) -> AngleTriple:
    return tri.angles


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Inversion:
    center: Point
    power: float
    tol: ToleranceConfig = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        if not (math.isfinite(self.power) and self.power > 0):
            raise GeometryError(f"inversion power must be positive, got {self.power!r}")

    @classmethod
    def in_circle(cls, circle: Circle, tol: ToleranceConfig = DEFAULT_TOL) -> "Inversion":
        return cls(circle.center, circle.radius**2, tol=tol)

    @property
    def radius(self) -> float:
        return math.sqrt(self.power)


def invert_point(inv: Inversion, p: Point) -> Point:
    d = p - inv.center
    d2 = d.norm2()
    if math.sqrt(d2) < inv.tol.eps_rel * inv.radius:
        raise PointAtCenter(f"{p} coincides with the inversion center")
    return inv.center + d * (inv.power / d2)


def invert_gcircle(inv: Inversion, g: GeneralizedCircle) -> GeneralizedCircle:
    eps = inv.tol.eps_rel
    O = inv.center
    if isinstance(g, Line):
        foot = project_point_on_line(O, g)
        if dist(foot, O) <= eps * inv.radius:
            return Line(O, g.direction)
        far = invert_point(inv, foot)
        return Circle(midpoint(O, far), 0.5 * dist(O, far))

    off = g.center - O
    d = off.norm()
    r = g.radius
    if abs(d - r) <= eps * r:
        # circle through the center: image is the line through the image of
        # the antipode of O, perpendicular to the diameter through O
        u = off.unit()
        antipode = O + u * (2.0 * r)
        return Line(invert_point(inv, antipode), u.perp())
    k = inv.power / (d * d - r * r)
    center = O + off * k
    return Circle(center, abs(k) * r)


def apollonius(p: Point, q: Point, ratio: float, tol: ToleranceConfig = DEFAULT_TOL) -> GeneralizedCircle:
    """Locus of X with |Xp| / |Xq| == ratio."""
    if not (math.isfinite(ratio) and ratio > 0):
        raise GeometryError(f"ratio must be positive, got {ratio!r}")
    pq = q - p
    if pq.norm() <= tol.eps_rel * max(p.norm(), q.norm(), 1.0):
        raise CoincidentBasePoints(f"base points {p} and {q} coincide")
    if abs(ratio - 1.0) <= tol.eps_rel:
        return Line(midpoint(p, q), pq.unit().perp())
    r2 = ratio * ratio
    center = (q * r2 - p) / (r2 - 1.0)
    return Circle(center, ratio * pq.norm() / abs(r2 - 1.0))


def project_point_on_line(p: Point, line: Line) -> Point:
    return line.anchor + line.direction * (p - line.anchor).dot(line.direction)


def line_intersection(l1: Line, l2: Line) -> Optional[Point]:
    den = l1.direction.cross(l2.direction)
    if den == 0.0:
        return None
    t = (l2.anchor - l1.anchor).cross(l2.direction) / den
    return l1.at(t)


def orientation_sign(p: Point, q: Point, r: Point, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    cr = (q - p).cross(r - p)
    s = max(dist(p, q), dist(q, r), dist(r, p))
    if abs(cr) <= tol.eps_rel * s * s:
        return 0
    return 1 if cr > 0 else -1


# ---------------------------------------------------------------------------
# intersections
# ---------------------------------------------------------------------------


def _same_locus(g1: GeneralizedCircle, g2: GeneralizedCircle, eps: float) -> bool:
    if isinstance(g1, Circle) and isinstance(g2, Circle):
        s = max(g1.radius, g2.radius)
        return dist(g1.center, g2.center) <= eps * s and abs(g1.radius - g2.radius) <= eps * s
    if isinstance(g1, Line) and isinstance(g2, Line):
        if angle_between_lines(g1.direction, g2.direction) > eps:
            return False
        s = max(g1.anchor.norm(), g2.anchor.norm(), dist(g1.anchor, g2.anchor), 1e-300)
        return abs(g1.signed_distance(g2.anchor)) <= eps * s
    return False


def _tangent_band(h2: float, scale: float, eps: float) -> bool:
    return abs(h2) <= (eps * scale) ** 2 + 8 * _ULP * scale * scale


def _circle_circle(c1: Circle, c2: Circle, eps: float) -> list[Point]:
    off = c2.center - c1.center
    d = off.norm()
    if d == 0.0:
        return []
    r1, r2 = c1.radius, c2.radius
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    u = off / d
    base = c1.center + u * a
    if _tangent_band(h2, max(r1, r2, d), eps):
        return [base]
    if h2 < 0:
        return []
    h = math.sqrt(h2)
    n = u.perp()
    return [base + n * h, base - n * h]


def _line_circle(line: Line, c: Circle, eps: float) -> list[Point]:
    foot = project_point_on_line(c.center, line)
    h2 = c.radius**2 - dist(foot, c.center) ** 2
    if _tangent_band(h2, c.radius, eps):
        return [foot]
    if h2 < 0:
        return []
    h = math.sqrt(h2)
    return [foot + line.direction * h, foot - line.direction * h]


def intersect_gcircles(g1: GeneralizedCircle, g2: GeneralizedCircle, tol: ToleranceConfig = DEFAULT_TOL) -> list[Point]:
    """Intersection points of two generalized circles, sorted by (x, y)."""
    eps = tol.eps_rel
    if _same_locus(g1, g2, eps):
        raise IdenticalLoci("the two loci coincide")
    if isinstance(g1, Circle) and isinstance(g2, Circle):
        pts = _circle_circle(g1, g2, eps)
    elif isinstance(g1, Line) and isinstance(g2, Line):
        p = line_intersection(g1, g2)
        pts = [] if p is None else [p]
    elif isinstance(g1, Line):
        pts = _line_circle(g1, g2, eps)
    else:
        pts = _line_circle(g2, g1, eps)
    return sorted(pts)


def on_gcircle_residual(g: GeneralizedCircle, p: Point) -> float:
    """Distance of ``p`` from ``g``; relative to the radius for circles."""
    if isinstance(g, Circle):
        return abs(g.residual(p))
    return abs(g.signed_distance(p))


# ---------------------------------------------------------------------------
# fits
# ---------------------------------------------------------------------------


class FitResult(NamedTuple):
    ok: bool
    residual: float
    kind: str  # "circle" or "line"


def spread(points: Sequence[Point]) -> float:
    return max((dist(p, q) for i, p in enumerate(points) for q in points[i + 1 :]), default=0.0)


def fit_line(points: Sequence[Point]) -> Line:
    """Total least squares line through the points."""
    n = len(points)
    cx = sum(p.x for p in points) / n
    cy = sum(p.y for p in points) / n
    sxx = sum((p.x - cx) ** 2 for p in points)
    syy = sum((p.y - cy) ** 2 for p in points)
    sxy = sum((p.x - cx) * (p.y - cy) for p in points)
    if sxx == 0.0 and syy == 0.0:
        raise GeometryError("all points coincide")
    theta = 0.5 * math.atan2(2.0 * sxy, sxx - syy)
    return Line(Point(cx, cy), Point(math.cos(theta), math.sin(theta)))


def collinear(points: Sequence[Point], tol: ToleranceConfig = DEFAULT_TOL) -> FitResult:
    if len(points) < 3:
        raise ValueError("collinear needs at least 3 points")
    diam = spread(points)
    if diam == 0.0:
        raise GeometryError("all points coincide")
    line = fit_line(points)
    res = max(abs(line.signed_distance(p)) for p in points) / diam
    return FitResult(res <= tol.eps_rel, res, "line")


def concyclic(points: Sequence[Point], tol: ToleranceConfig = DEFAULT_TOL) -> FitResult:
    if len(points) < 4:
        raise ValueError("concyclic needs at least 4 points")
    p, q, r = points[:3]
    if orientation_sign(p, q, r, tol) == 0:
        return collinear(points, tol)
    circ = circle_through(p, q, r)
    res = max(abs(circ.residual(x)) for x in points)
    return FitResult(res <= tol.eps_rel, res, "circle")
