import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pedal_kernel.geom_core import (
    AngleTriple,
    Circle,
    CoincidentBasePoints,
    DegenerateTriangle,
    IdenticalLoci,
    Inversion,
    InvalidAngles,
    Line,
    Point,
    PointAtCenter,
    ToleranceConfig,
    Triangle,
    angles_of,
    apollonius,
    circumcircle,
    collinear,
    concyclic,
    dist,
    intersect_gcircles,
    invert_gcircle,
    invert_point,
    on_gcircle_residual,
    orientation_sign,
    project_point_on_line,
)
from pedal_kernel.notable_points import brocard_circle

from conftest import triangles

EPS = 1e-9


def circumcenter_oracle(tri):
    """Solve the two perpendicular-bisector equations as a 2x2 linear system."""
    A, B, C = (np.array(v) for v in tri.vertices)
    M = np.array([2 * (B - A), 2 * (C - A)])
    rhs = np.array([B @ B - A @ A, C @ C - A @ A])
    return np.linalg.solve(M, rhs)


class TestPointAndTolerance:
    def test_vector_arithmetic(self):
        assert Point(1, 2) + Point(3, 4) == Point(4, 6)
        assert Point(1, 2) * 2 == Point(2, 4)
        assert sorted([Point(1, 0), Point(0, 5), Point(0, 1)]) == [Point(0, 1), Point(0, 5), Point(1, 0)]

    @pytest.mark.parametrize("kw", [{"eps_rel": 0.0}, {"eps_rel": 1e-2}, {"angle_eps": -1.0}, {"eps_rel": math.nan}])
    def test_tolerance_invariants(self, kw):
        with pytest.raises(ValueError):
            ToleranceConfig(**kw)

    def test_angle_triple_validation(self):
        AngleTriple(1.0, 1.0, math.pi - 2.0)
        with pytest.raises(InvalidAngles):
            AngleTriple(1.0, 1.0, 1.0)
        with pytest.raises(InvalidAngles):
            AngleTriple(-0.1, 1.0, math.pi - 0.9)


class TestTriangle:
    def test_sides_and_right_angle(self, tri345):
        assert tri345.sides == (4.0, 5.0, 3.0)
        al, be, ga = angles_of(tri345)
        assert be == pytest.approx(math.pi / 2, abs=1e-15)
        assert al == pytest.approx(math.atan2(4, 3), abs=1e-15)

    def test_equilateral_angles(self, equilateral):
        for t in angles_of(equilateral):
            assert t == pytest.approx(math.pi / 3, abs=1e-15)

    def test_collinear_rejected(self):
        with pytest.raises(DegenerateTriangle):
            Triangle(Point(0, 0), Point(1, 1), Point(2, 2 + 1e-12))

    def test_from_sides_rejects_flat(self):
        with pytest.raises(DegenerateTriangle):
            Triangle.from_sides(1.0, 2.0, 3.0)

    def test_from_sides_places_canonically(self):
        t = Triangle.from_sides(4, 6, 5)
        assert t.b_vertex == Point(0.0, 0.0)
        assert t.c_vertex == Point(4.0, 0.0)
        assert t.a_vertex.y > 0
        assert t.sides == pytest.approx((4, 6, 5), rel=1e-15)

    @given(triangles())
    def test_angle_sum(self, tri):
        assert abs(sum(angles_of(tri)) - math.pi) <= 1e-12


class TestCircumcircle:
    def test_right_triangle(self, tri345):
        k = circumcircle(tri345)
        assert k.center.x == pytest.approx(2.0, abs=1e-15)
        assert k.center.y == pytest.approx(1.5, abs=1e-15)
        assert k.radius == pytest.approx(2.5, abs=1e-15)

    def test_equilateral(self, equilateral):
        k = circumcircle(equilateral)
        centroid = (equilateral.a_vertex + equilateral.b_vertex + equilateral.c_vertex) / 3
        assert dist(k.center, centroid) < 1e-15
        assert k.radius == pytest.approx(1 / math.sqrt(3), rel=1e-14)

    @given(triangles())
    def test_against_linear_solve(self, tri):
        k = circumcircle(tri)
        o = circumcenter_oracle(tri)
        assert math.hypot(k.center.x - o[0], k.center.y - o[1]) <= 1e-10 * k.radius
        for v in tri.vertices:
            assert abs(dist(v, k.center) - k.radius) <= EPS * k.radius


class TestInversion:
    def test_fixed_point_on_circle(self):
        inv = Inversion(Point(0, 0), 4.0)
        p = Point(2 * math.cos(0.3), 2 * math.sin(0.3))
        assert dist(invert_point(inv, p), p) < 1e-15

    def test_axis(self):
        assert invert_point(Inversion(Point(0, 0), 4.0), Point(1, 0)) == Point(4.0, 0.0)

    def test_center_rejected(self):
        with pytest.raises(PointAtCenter):
            invert_point(Inversion(Point(1, 1), 1.0), Point(1, 1))

    @given(
        st.floats(-3, 3), st.floats(-3, 3), st.floats(0.01, 100.0),
        st.floats(-3.0, 3.0), st.floats(0, 2 * math.pi),
    )
    def test_involution_and_distance_law(self, cx, cy, power, logr, theta):
        inv = Inversion(Point(cx, cy), power)
        rho = 10.0 ** logr * math.sqrt(power)
        p = inv.center + Point(math.cos(theta), math.sin(theta)) * rho
        q = invert_point(inv, p)
        assert abs(dist(inv.center, p) * dist(inv.center, q) / power - 1) <= EPS
        assert dist(invert_point(inv, q), p) <= 10 * EPS * rho
        # image on the ray from the center through p
        assert (p - inv.center).cross(q - inv.center) == pytest.approx(0.0, abs=1e-9 * rho * dist(inv.center, q))
        assert (p - inv.center).dot(q - inv.center) > 0

    def test_circle_through_center_maps_to_line(self):
        inv = Inversion(Point(0, 0), 1.0)
        img = invert_gcircle(inv, Circle(Point(1, 0), 1.0))
        assert isinstance(img, Line)
        # x = 1/2 is the image of the circle through O and (2, 0)
        assert abs(img.signed_distance(Point(0.5, 7.0))) < 1e-15

    def test_line_maps_to_circle_through_center(self):
        inv = Inversion(Point(0, 0), 1.0)
        img = invert_gcircle(inv, Line(Point(0.5, 0.0), Point(0.0, 1.0)))
        assert isinstance(img, Circle)
        assert img.center == Point(1.0, 0.0) and img.radius == pytest.approx(1.0)

    def test_line_through_center_is_invariant(self):
        inv = Inversion(Point(1, 1), 2.0)
        line = Line(Point(1, 1), Point(1.0, 0.0))
        assert invert_gcircle(inv, line) == line

    @given(st.floats(-2, 2), st.floats(-2, 2), st.floats(0.1, 3), st.floats(0.2, 4.0))
    def test_sampled_points_map_onto_image(self, x, y, r, power):
        inv = Inversion(Point(0.0, 0.0), power)
        c = Circle(Point(x, y), r)
        if abs(dist(c.center, inv.center) - r) < 1e-3 * r:
            return
        img = invert_gcircle(inv, c)
        for k in range(12):
            t = 2 * math.pi * k / 12
            p = c.center + Point(math.cos(t), math.sin(t)) * r
            if dist(p, inv.center) < 1e-6:
                continue
            q = invert_point(inv, p)
            scale = max(1.0, dist(q, inv.center))
            assert on_gcircle_residual(img, q) <= 1e-8 * (1 if isinstance(img, Circle) else scale)

    def test_brocard_circle_round_trip(self, scalene):
        inv = Inversion.in_circle(scalene.circumcircle)
        k0 = brocard_circle(scalene)
        g = invert_gcircle(inv, k0)
        assert isinstance(g, Line)
        back = invert_gcircle(inv, g)
        assert dist(back.center, k0.center) <= EPS * k0.radius
        assert abs(back.radius - k0.radius) <= EPS * k0.radius


class TestApollonius:
    def test_ratio_one_is_bisector(self):
        g = apollonius(Point(0, 0), Point(2, 0), 1.0)
        assert isinstance(g, Line)
        assert abs(g.signed_distance(Point(1.0, 5.0))) < 1e-15

    def test_ratio_two(self):
        # internal division point x=2, external x=6
        g = apollonius(Point(0, 0), Point(3, 0), 2.0)
        assert g.center == Point(4.0, 0.0)
        assert g.radius == pytest.approx(2.0, abs=1e-15)

    def test_coincident_base(self):
        with pytest.raises(CoincidentBasePoints):
            apollonius(Point(1, 1), Point(1, 1), 2.0)

    @given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(0.05, 20.0))
    def test_membership(self, px, py, qx, qy, ratio):
        p, q = Point(px, py), Point(qx, qy)
        if dist(p, q) < 1e-2 or abs(ratio - 1) < 1e-6:
            return
        g = apollonius(p, q, ratio)
        for k in range(16):
            t = 2 * math.pi * k / 16
            x = g.center + Point(math.cos(t), math.sin(t)) * g.radius
            assert abs(dist(x, p) / dist(x, q) / ratio - 1) <= EPS


class TestIntersections:
    def test_two_points(self):
        pts = intersect_gcircles(Circle(Point(0, 0), 1.0), Circle(Point(1, 0), 1.0))
        assert len(pts) == 2
        assert pts[0] < pts[1]
        for p in pts:
            assert p.x == pytest.approx(0.5) and abs(p.y) == pytest.approx(math.sqrt(3) / 2)

    def test_concentric(self):
        assert intersect_gcircles(Circle(Point(0, 0), 1.0), Circle(Point(0, 0), 2.0)) == []

    def test_external_tangency(self):
        assert intersect_gcircles(Circle(Point(0, 0), 1.0), Circle(Point(2, 0), 1.0)) == [Point(1.0, 0.0)]

    def test_identical(self):
        with pytest.raises(IdenticalLoci):
            intersect_gcircles(Circle(Point(0, 0), 1.0), Circle(Point(0, 0), 1.0))

    def test_line_circle_and_line_line(self):
        pts = intersect_gcircles(Line(Point(0, 0), Point(1.0, 0.0)), Circle(Point(0, 0), 2.0))
        assert pts == [Point(-2.0, 0.0), Point(2.0, 0.0)]
        x = intersect_gcircles(Line(Point(0, 1), Point(1.0, 0.0)), Line(Point(3, 0), Point(0.0, 1.0)))
        assert x == [Point(3.0, 1.0)]

    @given(
        st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3),
        st.floats(0.1, 5.0), st.floats(0.1, 5.0),
    )
    def test_points_lie_on_both(self, x1, y1, x2, y2, r1, r2):
        c1, c2 = Circle(Point(x1, y1), r1), Circle(Point(x2, y2), r2)
        d = dist(c1.center, c2.center)
        if d < 1e-3:
            return
        pts = intersect_gcircles(c1, c2)
        if abs(r1 - r2) + 1e-6 < d < r1 + r2 - 1e-6:
            assert len(pts) == 2
        for p in pts:
            assert abs(c1.residual(p)) < 1e-7 and abs(c2.residual(p)) < 1e-7

    @given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0, math.pi), st.floats(-3, 3), st.floats(-3, 3))
    def test_projection_minimizes_distance(self, ax, ay, th, px, py):
        line = Line(Point(ax, ay), Point(math.cos(th), math.sin(th)))
        p = Point(px, py)
        f = project_point_on_line(p, line)
        assert abs((p - f).dot(line.direction)) <= 1e-12 * max(1.0, dist(p, f))
        ts = np.linspace(-20, 20, 2001)
        best = min(dist(p, line.at(t)) for t in ts)
        assert dist(p, f) <= best + 1e-12

    def test_projection_idempotent(self):
        line = Line(Point(0, 0), Point(1.0, 0.0))
        assert project_point_on_line(Point(3.0, 0.0), line) == Point(3.0, 0.0)
        assert project_point_on_line(Point(0, 1), line) == Point(0.0, 0.0)


class TestPredicates:
    def test_orientation(self):
        assert orientation_sign(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
        assert orientation_sign(Point(0, 0), Point(0, 1), Point(1, 0)) == -1
        assert orientation_sign(Point(0, 0), Point(1, 1), Point(2, 2)) == 0

    @given(*[st.floats(-10, 10)] * 6)
    def test_orientation_antisymmetric(self, a, b, c, d, e, f):
        p, q, r = Point(a, b), Point(c, d), Point(e, f)
        s = orientation_sign(p, q, r)
        assert orientation_sign(q, p, r) == -s
        assert orientation_sign(p, r, q) == -s
        assert orientation_sign(r, q, p) == -s

    def test_concyclic_samples(self):
        pts = [Point(2 + 3 * math.cos(t), -1 + 3 * math.sin(t)) for t in np.linspace(0, 5, 6)]
        res = concyclic(pts)
        assert res.ok and res.kind == "circle" and res.residual < 1e-15

    def test_concyclic_perturbed(self):
        R = 3.0
        pts = [Point(R * math.cos(t), R * math.sin(t)) for t in (0.1, 1.3, 2.9, 4.4)]
        pts[3] = pts[3] * (1 + 10 * EPS)
        assert not concyclic(pts).ok

    def test_square_is_concyclic(self):
        assert concyclic([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]).ok

    def test_concyclic_falls_back_to_line(self):
        res = concyclic([Point(0, 0), Point(1, 1), Point(2, 2), Point(5, 5)])
        assert res.kind == "line" and res.ok

    def test_collinear(self):
        assert collinear([Point(x, 2 * x + 1) for x in (-2.0, -0.5, 0.0, 1.0, 3.0)]).ok
        assert not collinear([Point(0, 0), Point(1, 0), Point(0, 1)]).ok
        diam = 2.0
        assert not collinear([Point(0, 0), Point(1, 10 * EPS * diam), Point(2, 0)]).ok

    @given(triangles(), st.floats(0, 2 * math.pi), st.floats(0.01, 100.0), st.floats(-50, 50), st.floats(-50, 50))
    def test_fits_invariant_under_similarity(self, tri, rot, scale, sx, sy):
        k = tri.circumcircle
        pts = [k.center + Point(math.cos(t), math.sin(t)) * k.radius for t in (0.2, 1.7, 3.1, 5.0)]
        pts[2] = k.center + (pts[2] - k.center) * (1 + 5 * EPS)
        c, s = math.cos(rot), math.sin(rot)
        moved = [Point(scale * (c * p.x - s * p.y + sx), scale * (s * p.x + c * p.y + sy)) for p in pts]
        r1, r2 = concyclic(pts), concyclic(moved)
        assert r1.ok == r2.ok
        assert abs(r1.residual - r2.residual) <= 1e-12
