"""Seeded random triangles, targets and points for the verification suite."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geom_core import AngleTriple, Point, ToleranceConfig, DEFAULT_TOL, Triangle


@dataclass(frozen=True)
class SamplerConfig:
    theta_min_deg: float = 5.0
    scale_range: tuple[float, float] = (0.5, 2.0)
    max_shift: float = 1.0

    @classmethod
    def hard(cls) -> "SamplerConfig":
        return cls(theta_min_deg=0.5)


def trial_rng(seed: int, trial: int, stream: int = 0) -> np.random.Generator:
    """Independent generator per (seed, trial, stream); order of evaluation is irrelevant."""
    return np.random.default_rng([seed, trial, stream])


def random_angles(rng: np.random.Generator, theta_min: float) -> tuple[float, float, float]:
    free = math.pi - 3 * theta_min
    u = rng.dirichlet((1.0, 1.0, 1.0))
    a = theta_min + free * float(u[0])
    b = theta_min + free * float(u[1])
    return a, b, math.pi - a - b


def triangle_from_angles(angles, rng: np.random.Generator | None = None, cfg: SamplerConfig = SamplerConfig(),
                         tol: ToleranceConfig = DEFAULT_TOL) -> Triangle:
    """Triangle with the given angles, randomly rotated, scaled and shifted."""
    al, be, ga = angles
    if rng is None:
        s, rot, shift = 1.0, 0.0, Point(0.0, 0.0)
    else:
        s = float(rng.uniform(*cfg.scale_range))
        rot = float(rng.uniform(0.0, 2 * math.pi))
        shift = Point(*(float(v) for v in rng.uniform(-cfg.max_shift, cfg.max_shift, 2))) * s
    # vertices on a circle of radius s; arcs AB, BC, CA span 2*gamma, 2*alpha, 2*beta
    pos = (rot, rot + 2 * ga, rot + 2 * ga + 2 * al)
    A, B, C = (Point(s * math.cos(t), s * math.sin(t)) + shift for t in pos)
    return Triangle(A, B, C, tol=tol)


def random_triangle(rng: np.random.Generator, cfg: SamplerConfig = SamplerConfig(),
                    tol: ToleranceConfig = DEFAULT_TOL) -> Triangle:
    return triangle_from_angles(random_angles(rng, math.radians(cfg.theta_min_deg)), rng, cfg, tol)


def random_target(rng: np.random.Generator, tri: Triangle, cfg: SamplerConfig = SamplerConfig()) -> AngleTriple:
    """Random angle triple that differs from the triangle's own angles."""
    while True:
        t = AngleTriple.normalized(*random_angles(rng, math.radians(cfg.theta_min_deg)), tol=tri.tol)
        if t.max_diff(tri.angles) > 1e-3:
            return t


def random_point_off_circle(rng: np.random.Generator, tri: Triangle, band: float = 1e-3,
                            reach: float = 3.0) -> Point:
    """Point within ``reach * R`` of O, at least ``band * R`` off the circumcircle (hence off the vertices)."""
    O, R = tri.circumcenter, tri.R
    while True:
        rho = float(rng.uniform(0.0, reach)) * R
        t = float(rng.uniform(0.0, 2 * math.pi))
        p = O + Point(math.cos(t), math.sin(t)) * rho
        if abs(rho / R - 1.0) > band:
            return p


def random_point_on_circle(rng: np.random.Generator, tri: Triangle) -> Point:
    t = float(rng.uniform(0.0, 2 * math.pi))
    return tri.circumcenter + Point(math.cos(t), math.sin(t)) * tri.R


def isosceles_triangle(rng: np.random.Generator, apex: int = 2, cfg: SamplerConfig = SamplerConfig(),
                       tol: ToleranceConfig = DEFAULT_TOL) -> Triangle:
    """Isosceles triangle with the given apex (0=A, 1=B, 2=C), randomly placed.

    apex=2 gives CA = CB, apex=0 gives b = c.
    """
    tm = math.radians(cfg.theta_min_deg)
    ga = float(rng.uniform(tm, math.pi - 2 * tm))
    while abs(ga - math.pi / 3) < 1e-2:
        ga = float(rng.uniform(tm, math.pi - 2 * tm))
    base = 0.5 * (math.pi - ga)
    angles = [base, base, base]
    angles[apex] = ga
    return triangle_from_angles(angles, rng, cfg, tol)


def median_proportional_triangle(rng: np.random.Generator, tol: ToleranceConfig = DEFAULT_TOL) -> Triangle:
    """Triangle with a^2 + b^2 = 2 c^2, canonically placed."""
    c = 1.0
    while True:
        a = float(rng.uniform(0.3, 1.4))
        b = math.sqrt(2 * c * c - a * a)
        if a + b > c * 1.05 and abs(a - b) < c * 0.95 and abs(a - c) > 1e-2:
            return Triangle.from_sides(a, b, c, tol=tol)
