"""Inverse pedal problem: find the points whose pedal triangle has given angles.

A solution X satisfies a*|XA| : b*|XB| : c*|XC| = a1 : b1 : c1, where
(a1, b1, c1) are the sides of any triangle with the target angles.  Each
pairwise ratio is an Apollonius locus; two of them meet in an inner point
and its inverse in the circumcircle.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Optional

from .geom_core import (
    AngleTriple,
    GeneralizedCircle,
    GeometryError,
    Inversion,
    Line,
    Point,
    Triangle,
    dist,
    intersect_gcircles,
    invert_point,
    apollonius,
)
from .pedal_map import feet_orientation

NEAR_IDENTITY = 1e-6


class InvalidTarget(GeometryError):
    pass


class NoIntersection(GeometryError):
    def __init__(self, msg: str, discriminant: float):
        super().__init__(f"{msg} (discriminant={discriminant!r})")
        self.discriminant = discriminant


class ConditioningWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ApolloniusSystem:
    """Ratios and loci k1 (base B,C), k2 (base C,A), k3 (base A,B)."""

    ratios: tuple[float, float, float]
    loci: tuple[GeneralizedCircle, GeneralizedCircle, GeneralizedCircle]
    target_sides: tuple[float, float, float]

    @property
    def lam(self) -> float:
        return self.ratios[0]

    @property
    def mu(self) -> float:
        return self.ratios[1]

    @property
    def nu(self) -> float:
        return self.ratios[2]

    @property
    def is_identity(self) -> bool:
        return all(isinstance(g, Line) for g in self.loci)


@dataclass(frozen=True)
class SolveOutcome:
    inside: Point
    outside: Optional[Point]
    target: AngleTriple
    discriminant_ok: bool
    concurrency_residual: float = 0.0
    near_identity: bool = False


# base pairs (P, Q) of the three loci, as vertex indices: |XP| / |XQ| = ratio
_BASES = ((1, 2), (2, 0), (0, 1))


def _ratios(sides, target_sides):
    a, b, c = sides
    a1, b1, c1 = target_sides
    return ((b1 / c1) * (c / b), (c1 / a1) * (a / c), (a1 / b1) * (b / a))


def _check_target(target) -> AngleTriple:
    if not isinstance(target, AngleTriple):
        try:
            target = AngleTriple(*target)
        except (TypeError, GeometryError) as exc:
            raise InvalidTarget(str(exc)) from exc
    return target


def build_system(tri: Triangle, target: AngleTriple) -> ApolloniusSystem:
    target = _check_target(target)
    tsides = tuple(math.sin(t) for t in target)
    ratios = _ratios(tri.sides, tsides)
    v = tri.vertices
    loci = tuple(apollonius(v[p], v[q], r, tri.tol) for (p, q), r in zip(_BASES, ratios))
    return ApolloniusSystem(ratios, loci, tsides)  # type: ignore[arg-type]


def ratio_residuals(tri: Triangle, system: ApolloniusSystem, x: Point) -> tuple[float, float, float]:
    """|(|XP| / |XQ|) / ratio - 1| for each of the three loci."""
    v = tri.vertices
    out = []
    for (p, q), r in zip(_BASES, system.ratios):
        out.append(abs(dist(x, v[p]) / (dist(x, v[q]) * r) - 1.0))
    return tuple(out)  # type: ignore[return-value]


def discriminant(tri: Triangle, system: ApolloniusSystem) -> float:
    """(c*mu)^2 - (b*lam*mu - a)^2 after relabeling so that lam > 1 > mu.

    The bracket equals (O1O2^2 - (r1 - r2)^2) * (lam^2 - 1) * (1 - mu^2) for
    the two circles k1, k2; positive means they cut in two points.  When no
    relabeling gives lam > 1 > mu (one ratio exactly 1) the mirrored case
    lam < 1 < mu is used, for which the same identity holds with signed radii.
    """
    if system.is_identity:
        raise InvalidTarget("identity target: all ratios equal 1, no straddling pair")
    sides = tri.sides
    ts = system.target_sides
    fallback = None
    for perm in itertools.permutations(range(3)):
        s = tuple(sides[i] for i in perm)
        t = tuple(ts[i] for i in perm)
        lam, mu, _ = _ratios(s, t)
        a, b, c = s
        value = (c * mu) ** 2 - (b * lam * mu - a) ** 2
        if lam > 1.0 > mu:
            return value
        if fallback is None and lam < 1.0 < mu:
            fallback = value
    if fallback is None:
        raise InvalidTarget("no pair of ratios straddles 1")
    return fallback


def _polish(tri: Triangle, tsides, x: Point, iters: int = 6) -> Point:
    """Gauss-Newton on log(side_i * |X V_i| / target_side_i) being all equal."""
    v = tri.vertices
    logk = [math.log(s / t) for s, t in zip(tri.sides, tsides)]
    for _ in range(iters):
        g = []
        jac = []
        for vi, lk in zip(v, logk):
            d = x - vi
            d2 = d.norm2()
            g.append(0.5 * math.log(d2) + lk)
            jac.append((d.x / d2, d.y / d2))
        mg = sum(g) / 3.0
        mjx = sum(j[0] for j in jac) / 3.0
        mjy = sum(j[1] for j in jac) / 3.0
        e = [gi - mg for gi in g]
        J = [(jx - mjx, jy - mjy) for jx, jy in jac]
        a11 = sum(j[0] * j[0] for j in J)
        a12 = sum(j[0] * j[1] for j in J)
        a22 = sum(j[1] * j[1] for j in J)
        b1 = sum(j[0] * ei for j, ei in zip(J, e))
        b2 = sum(j[1] * ei for j, ei in zip(J, e))
        det = a11 * a22 - a12 * a12
        if det == 0.0:
            break
        dx = (a22 * b1 - a12 * b2) / det
        dy = (a11 * b2 - a12 * b1) / det
        x = Point(x.x - dx, x.y - dy)
        if math.hypot(dx, dy) <= 4e-16 * max(x.norm(), tri.R):
            break
    return x


def _pick_pair(ratios) -> tuple[int, int]:
    logs = [math.log(r) for r in ratios]
    hi = max(range(3), key=lambda i: logs[i])
    lo = min(range(3), key=lambda i: logs[i])
    return hi, lo


def solve(tri: Triangle, target) -> SolveOutcome:
    """Interior and exterior points whose pedal triangles have the target angles."""
    target = _check_target(target)
    O = tri.circumcenter
    if target.close_to(tri.angles, tri.tol.angle_eps):
        return SolveOutcome(inside=O, outside=None, target=target, discriminant_ok=True)

    system = build_system(tri, target)
    inv = Inversion.in_circle(tri.circumcircle, tri.tol)
    near_identity = all(abs(r - 1.0) < NEAR_IDENTITY for r in system.ratios)
    if near_identity:
        disc = discriminant(tri, system) if not system.is_identity else 0.0
        inside = _polish(tri, system.target_sides, O)
        outside = _polish(tri, system.target_sides, invert_point(inv, inside))
        candidates = [inside, outside]
    else:
        disc = discriminant(tri, system)
        i, j = _pick_pair(system.ratios)
        pts = intersect_gcircles(system.loci[i], system.loci[j], tri.tol)
        if len(pts) < 2:
            raise NoIntersection("Apollonius loci do not meet in two points", disc)
        candidates = [_polish(tri, system.target_sides, p) for p in pts]

    R = tri.R
    ds = [dist(p, O) for p in candidates]
    inner = [p for p, d in zip(candidates, ds) if d < R]
    outer = [p for p, d in zip(candidates, ds) if d > R]
    if len(inner) == 1 and len(outer) == 1:
        inside, outside = inner[0], outer[0]
    else:
        warnings.warn(
            "both solutions fall on the same side of the circumcircle; "
            "choosing by pedal orientation",
            ConditioningWarning,
            stacklevel=2,
        )
        signs = [feet_orientation(tri, p) for p in candidates]
        if signs[0] >= signs[1]:
            inside, outside = candidates
        else:
            outside, inside = candidates

    resid = max(max(ratio_residuals(tri, system, p)) for p in (inside, outside))
    return SolveOutcome(
        inside=inside,
        outside=outside,
        target=target,
        discriminant_ok=disc > 0 or near_identity,
        concurrency_residual=resid,
        near_identity=near_identity,
    )
