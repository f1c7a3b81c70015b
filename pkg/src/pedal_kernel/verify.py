"""Randomized verification of the kernel's theorems and invariants.

Each property accumulates (trials, failures, max residual) against a
tolerance expressed as a multiple of ``eps``.  Aggregation is a sum and a
max, so the order in which trials run does not matter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import sampling
from .geom_core import (
    GeometryError,
    Inversion,
    Line,
    Point,
    ToleranceConfig,
    Triangle,
    angle_at,
    angle_between_lines,
    collinear,
    dist,
    fit_line,
    invert_point,
    on_gcircle_residual,
)
from .inverse_pedal import InvalidTarget, build_system, discriminant, ratio_residuals, solve
from .notable_points import (
    AtInfinity,
    basic_apollonius_circles,
    barycentric_of,
    brocard_angle_cot,
    brocard_points_by_tangent_circles,
    eleven_points,
    exterior_brocard_formula_points,
    median_proportional_check,
    midpoint_formula,
    point_of,
    asymmetric_midpoint_formula,
    symmedian_formula_points,
    symmedian_lines,
    vertex_angle_2gamma_residual,
)
from .pedal_map import (
    Orientation,
    angles_from_vertex_angles,
    circle_position,
    f_of,
    feet_orientation,
    inverse_pair_consistency,
    side_ratio_residual,
    simson_residual,
)

# property name -> tolerance as a multiple of eps (None: reported, never fails)
TOLERANCE_FACTORS: dict[str, Optional[float]] = {
    "angle_sum": 1.0,
    "circumcircle": 1.0,
    "inversion_involution": 10.0,
    "brocard_concyclic": 1.0,
    "axis_collinear": 1.0,
    "exterior_on_axis_g": 1.0,
    "ol_perpendicular_g": 1.0,
    "omega_chord_parallel_g": 1.0,
    "label_match": 10.0,
    "brocard_oracle": 1.0,
    "brocard_angle_cot": 1.0,
    "brocard_angle_at_o": 1.0,
    "symmedian_angle_2gamma": 1.0,
    "symmedian_perpendicular": 1.0,
    "barycentric_symmedian": 1.0,
    "barycentric_exterior_brocard": 1.0,
    "barycentric_roundtrip": 1.0,
    "midpoint_is_inverse_lemoine": 1.0,
    "midpoint_symmetric_formula": 1.0,
    "asymmetric_midpoint_formula": None,
    "exterior_tangency": 1.0,
    "exterior_ratio": 1.0,
    "l3p_on_ab": 1.0,
    "apollonius_centers": 1.0,
    "apollonius_through_vertex": 1.0,
    "solver_two_solutions": 0.0,
    "solver_concurrency": 1.0,
    "solver_roundtrip": 100.0,
    "solver_orientation": 0.0,
    "solver_inverse_product": 1.0,
    "solver_discriminant_positive": 0.0,
    "identity_collapse": 1.0,
    "pedal_side_ratio": 1.0,
    "pedal_orientation": 0.0,
    "vertex_angle_criterion": 10.0,
    "inverse_pair_consistency": 10.0,
    "simson_collinear": 1.0,
    "isosceles_coincidence": 1.0,
    "isosceles_at_infinity": 0.0,
    "median_relation_holds": 1.0,
    "median_relation_converse": 0.0,
    "equilateral_coincidence": 1.0,
}


@dataclass
class PropertyRecord:
    name: str
    tolerance: Optional[float]
    trials: int = 0
    failures: int = 0
    max_residual: float = 0.0
    errors: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "max_residual": self.max_residual if math.isfinite(self.max_residual) else None,
            "tolerance": self.tolerance,
        }


class Report:
    def __init__(self, eps: float, seed: int):
        self.eps = eps
        self.seed = seed
        self.records: dict[str, PropertyRecord] = {}

    def _rec(self, name: str) -> PropertyRecord:
        if name not in self.records:
            f = TOLERANCE_FACTORS[name]
            self.records[name] = PropertyRecord(name, None if f is None else f * self.eps)
        return self.records[name]

    def add(self, name: str, residual: float) -> None:
        r = self._rec(name)
        r.trials += 1
        if not math.isfinite(residual):
            r.failures += 1
            r.max_residual = math.inf
            return
        r.max_residual = max(r.max_residual, residual)
        if r.tolerance is not None and residual > r.tolerance:
            r.failures += 1

    def flag(self, name: str, ok: bool) -> None:
        self.add(name, 0.0 if ok else 1.0)

    def fail(self, name: str, exc: Exception) -> None:
        r = self._rec(name)
        if len(r.errors) < 5:
            r.errors.append(f"{type(exc).__name__}: {exc}")
        self.add(name, math.inf)

    def run(self, name: str, fn: Callable[[], Optional[float]]) -> None:
        """Evaluate ``fn``; exceptions count as failures of ``name``."""
        try:
            res = fn()
        except (GeometryError, ZeroDivisionError, ValueError) as exc:
            self.fail(name, exc)
            return
        if res is not None:
            self.add(name, res)

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.records.values())

    def as_dict(self) -> dict:
        return {
            "schema": "pedal-kernel/1",
            "seed": self.seed,
            "eps": self.eps,
            "pass": self.passed,
            "properties": [self.records[k].as_dict() for k in sorted(self.records)],
        }

    def summary(self) -> str:
        lines = []
        for k in sorted(self.records):
            r = self.records[k]
            tol = "  (info)" if r.tolerance is None else f" <= {r.tolerance:.1e}"
            status = "PASS" if r.failures == 0 else "FAIL"
            lines.append(f"{status}  {k:<32} trials={r.trials:<5} failures={r.failures:<4} "
                         f"max={r.max_residual:.3e}{tol}")
            for e in r.errors:
                lines.append(f"      {e}")
        lines.append(("ALL PASS" if self.passed else "FAILURES") + f"  seed={self.seed} eps={self.eps:g}")
        return "\n".join(lines)


def _far_scale(tri: Triangle, p: Point) -> float:
    """Comparison scale for points that may lie far outside the circumcircle."""
    return max(tri.R, dist(p, tri.circumcenter))


# ---------------------------------------------------------------------------
# per-triangle suites
# ---------------------------------------------------------------------------


def check_basic(rep: Report, tri: Triangle) -> None:
    rep.add("angle_sum", abs(sum(tri.angles) - math.pi))
    O, R = tri.circumcenter, tri.R
    rep.add("circumcircle", max(abs(dist(O, v) - R) / R for v in tri.vertices))
    inv = Inversion.in_circle(tri.circumcircle, tri.tol)

    def involution():
        p = O + Point(0.37, -0.21) * R
        q = invert_point(inv, invert_point(inv, p))
        return dist(p, q) / R

    rep.run("inversion_involution", involution)


def check_equilateral(rep: Report, tri: Triangle) -> None:
    def coincide():
        s = eleven_points(tri)
        res = max(dist(p, s.o) for p in s.interior().values()) / tri.R
        if any(v is not None for v in s.exterior().values()) or s.axis_g is not None:
            return math.inf
        res = max(res, abs(s.brocard_angle - math.pi / 6))
        res = max(res, max(s.label_residuals.values()))
        rep_ = median_proportional_check(tri)
        if not (rep_.condition_holds and rep_.l_on_abo_circle and rep_.l_inverse_on_ab):
            return math.inf
        try:
            discriminant(tri, build_system(tri, tri.angles))
        except InvalidTarget:
            pass
        else:
            return math.inf
        return res

    rep.run("equilateral_coincidence", coincide)
    rep.run("identity_collapse", lambda: _identity_collapse(tri))


def _identity_collapse(tri: Triangle) -> float:
    out = solve(tri, tri.angles)
    if out.outside is not None:
        return math.inf
    return dist(out.inside, tri.circumcenter) / tri.R


def check_notable(rep: Report, tri: Triangle) -> None:
    """Brocard circle, axis g, formulas and labels on one non-equilateral triangle."""
    try:
        s = eleven_points(tri)
    except GeometryError as exc:
        rep.fail("brocard_concyclic", exc)
        return
    if s.equilateral:
        check_equilateral(rep, tri)
        return

    O, R = tri.circumcenter, tri.R
    interior = s.interior()
    ext = s.exterior()
    finite = s.finite_exterior()
    k0 = s.brocard_circle
    rep.add("brocard_concyclic", max(abs(k0.residual(p)) for p in interior.values()))

    rep.run("axis_collinear", lambda: collinear(list(finite.values()), tri.tol).residual)
    rep.add("exterior_on_axis_g", max(abs(s.axis_g.signed_distance(p)) / _far_scale(tri, p) for p in finite.values()))

    def perp():
        fit = fit_line(list(finite.values()))
        ol = s.lemoine - O
        return max(abs(angle_between_lines(ol, d) - math.pi / 2) for d in (fit.direction, s.axis_g.direction))

    def parallel():
        fit = fit_line(list(finite.values()))
        chord = s.omega2 - s.omega1
        return max(angle_between_lines(chord, d) for d in (fit.direction, s.axis_g.direction))

    rep.run("ol_perpendicular_g", perp)
    rep.run("omega_chord_parallel_g", parallel)
    rep.add("label_match", max(s.label_residuals.values()))

    def oracle():
        t1, t2 = brocard_points_by_tangent_circles(tri)
        return max(dist(t1, s.omega1), dist(t2, s.omega2)) / R

    rep.run("brocard_oracle", oracle)
    rep.add("brocard_angle_cot", abs(s.brocard_angle - brocard_angle_cot(tri)))

    def angle_at_o():
        w = s.brocard_angle
        return max(abs(angle_at(O, s.omega1, s.lemoine) - w), abs(angle_at(O, s.omega2, s.lemoine) - w))

    rep.run("brocard_angle_at_o", angle_at_o)
    rep.run("symmedian_angle_2gamma", lambda: vertex_angle_2gamma_residual(tri, s.l3))

    formula_ls = symmedian_formula_points(tri)

    def symmedian_perp():
        res = 0.0
        for li, line in zip(formula_ls, symmedian_lines(tri)):
            if dist(li, O) <= tri.tol.eps_rel * R:
                continue
            res = max(res, abs(angle_between_lines(li - O, line.direction) - math.pi / 2))
        return res

    rep.run("symmedian_perpendicular", symmedian_perp)
    rep.add("barycentric_symmedian", max(dist(p, q) for p, q in zip(formula_ls, (s.l1, s.l2, s.l3))) / R)

    def bary_ext():
        f1, f2 = exterior_brocard_formula_points(tri)
        return max(dist(f1, s.omega1p), dist(f2, s.omega2p)) / R

    rep.run("barycentric_exterior_brocard", bary_ext)

    def bary_roundtrip():
        res = 0.0
        for p in list(interior.values()) + list(finite.values()):
            if dist(p, O) > 100.0 * R:
                # conversion error grows like |OP|^2 / R^2 there
                continue
            q = point_of(tri, barycentric_of(tri, p))
            res = max(res, dist(p, q) / _far_scale(tri, p))
        for i, v in enumerate(tri.vertices):
            bc = barycentric_of(tri, v)
            res = max(res, max(abs(x - (1.0 if j == i else 0.0)) for j, x in enumerate(bc)))
        return res

    rep.run("barycentric_roundtrip", bary_roundtrip)

    inv = Inversion.in_circle(tri.circumcircle, tri.tol)
    Lp = invert_point(inv, s.lemoine)
    mid = (s.omega1p + s.omega2p) * 0.5
    rep.add("midpoint_is_inverse_lemoine", dist(mid, Lp) / R)
    rep.add("midpoint_symmetric_formula", dist(midpoint_formula(tri), Lp) / R)
    rep.add("asymmetric_midpoint_formula", dist(asymmetric_midpoint_formula(tri), Lp) / R)

    # exterior L' points: tangency, b^2:a^2 ratios, L3' on AB, Apollonius centers
    A, B, C = tri.vertices
    a, b, c = tri.sides
    circles = basic_apollonius_circles(tri)
    setups = (
        ("L1p", A, (B, C), (c * c, b * b), circles[0]),
        ("L2p", B, (C, A), (a * a, c * c), circles[1]),
        ("L3p", C, (A, B), (b * b, a * a), circles[2]),
    )
    for name, vertex, (p, q), (wp, wq), k in setups:
        lp = ext[name]
        rep.add("apollonius_through_vertex", on_gcircle_residual(k, vertex) if not isinstance(k, Line)
                else abs(k.signed_distance(vertex)) / R)
        if isinstance(lp, AtInfinity):
            ok = isinstance(k, Line) and angle_between_lines(lp.direction, q - p) <= tri.tol.angle_eps
            rep.flag("isosceles_at_infinity", ok)
            continue
        scale = _far_scale(tri, lp)
        t = lp - vertex
        rep.add("exterior_tangency", abs(t.dot(vertex - O)) / (t.norm() * R))
        rep.add("exterior_ratio", abs((dist(lp, p) / dist(lp, q)) / (wp / wq) - 1.0))
        if isinstance(k, Line):
            rep.add("apollonius_centers", math.inf)
        else:
            rep.add("apollonius_centers", dist(k.center, lp) / scale)
        if name == "L3p":
            rep.add("l3p_on_ab", abs(Line.through(A, B).signed_distance(lp)) / scale)


def check_solver(rep: Report, tri: Triangle, target) -> None:
    try:
        out = solve(tri, target)
    except GeometryError as exc:
        rep.fail("solver_two_solutions", exc)
        return
    O, R = tri.circumcenter, tri.R
    rep.flag("solver_two_solutions", out.outside is not None and dist(out.inside, O) < R < dist(out.outside, O))
    if out.outside is None:
        return
    system = build_system(tri, target)
    rep.add("solver_concurrency", max(max(ratio_residuals(tri, system, p)) for p in (out.inside, out.outside)))
    rep.run("solver_discriminant_positive", lambda: 0.0 if discriminant(tri, system) > 0 else 1.0)

    def roundtrip():
        fi = f_of(tri, out.inside)
        fo = f_of(tri, out.outside)
        rep.flag("solver_orientation", fi.orientation is Orientation.POSITIVE and fo.orientation is Orientation.NEGATIVE)
        return max(fi.angles.max_diff(target), fo.angles.max_diff(target))

    rep.run("solver_roundtrip", roundtrip)
    rep.add("solver_inverse_product", abs(dist(out.inside, O) * dist(out.outside, O) / (R * R) - 1.0))


def check_point(rep: Report, tri: Triangle, m: Point) -> None:
    rep.run("pedal_side_ratio", lambda: side_ratio_residual(tri, m))

    def orient():
        pos = circle_position(tri, m)
        sign = feet_orientation(tri, m)
        ok = (pos is Orientation.POSITIVE and sign == 1) or (pos is Orientation.NEGATIVE and sign == -1)
        return 0.0 if ok else 1.0

    rep.run("pedal_orientation", orient)
    if circle_position(tri, m) is Orientation.POSITIVE:
        def criterion():
            return max(abs(u - v) for u, v in zip(angles_from_vertex_angles(tri, m), f_of(tri, m).angles))

        rep.run("vertex_angle_criterion", criterion)
        if dist(m, tri.circumcenter) >= 1e-6 * tri.R:
            rep.run("inverse_pair_consistency", lambda: inverse_pair_consistency(tri, m))


def check_simson(rep: Report, tri: Triangle, m: Point) -> None:
    rep.run("simson_collinear", lambda: simson_residual(tri, m))


def check_isosceles_bc(rep: Report, tri: Triangle) -> None:
    """b = c: Omega1 coincides with L2 and Omega2 with L3."""
    def run():
        s = eleven_points(tri)
        return max(dist(s.omega1, s.l2), dist(s.omega2, s.l3)) / tri.R

    rep.run("isosceles_coincidence", run)


def check_median(rep: Report, tri: Triangle, expect: bool) -> None:
    """a^2 + b^2 = 2c^2 iff L on circle ABO iff inverse of L on AB."""
    def run():
        r = median_proportional_check(tri)
        if not r.consistent or r.condition_holds != expect:
            return math.inf
        return max(r.residuals) if expect else 0.0

    rep.run("median_relation_holds" if expect else "median_relation_converse", run)


# ---------------------------------------------------------------------------
# drivers
# ---------------------------------------------------------------------------


def verify_random(trials: int, seed: int, eps: float = 1e-9, hard: bool = False) -> Report:
    tol = ToleranceConfig.uniform(eps)
    cfg = sampling.SamplerConfig.hard() if hard else sampling.SamplerConfig()
    rep = Report(eps, seed)
    for i in range(trials):
        rng = sampling.trial_rng(seed, i)
        tri = sampling.random_triangle(rng, cfg, tol)
        check_basic(rep, tri)
        check_notable(rep, tri)
        check_solver(rep, tri, sampling.random_target(rng, tri, cfg))
        rep.run("identity_collapse", lambda: _identity_collapse(tri))
        check_point(rep, tri, sampling.random_point_off_circle(rng, tri))
        check_simson(rep, tri, sampling.random_point_on_circle(rng, tri))

        aux = sampling.trial_rng(seed, i, stream=1)
        check_isosceles_bc(rep, sampling.isosceles_triangle(aux, apex=0, cfg=cfg, tol=tol))
        check_notable(rep, sampling.isosceles_triangle(aux, apex=2, cfg=cfg, tol=tol))
        check_median(rep, sampling.median_proportional_triangle(aux, tol), True)
        generic = sampling.random_triangle(aux, cfg, tol)
        a, b, c = generic.sides
        if abs(a * a + b * b - 2 * c * c) > 1e-3 * max(a, b, c) ** 2:
            check_median(rep, generic, False)
    return rep


def verify_triangle(tri: Triangle, trials: int, seed: int, eps: float = 1e-9) -> Report:
    """Run the per-triangle suites on one triangle, with ``trials`` random targets and points."""
    tol = ToleranceConfig.uniform(eps)
    tri = Triangle(*tri.vertices, tol=tol)
    rep = Report(eps, seed)
    check_basic(rep, tri)
    check_notable(rep, tri)
    rep.run("identity_collapse", lambda: _identity_collapse(tri))
    a, b, c = tri.sides
    if abs(b - c) <= eps * max(a, b, c):
        check_isosceles_bc(rep, tri)
    m = median_proportional_check(tri)
    check_median(rep, tri, m.condition_holds)
    for i in range(trials):
        rng = sampling.trial_rng(seed, i)
        try:
            target = sampling.random_target(rng, tri)
        except GeometryError:
            continue
        check_solver(rep, tri, target)
        check_point(rep, tri, sampling.random_point_off_circle(rng, tri))
        check_simson(rep, tri, sampling.random_point_on_circle(rng, tri))
    return rep
