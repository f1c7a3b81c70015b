"""Pedal triangles, the inverse pedal-angle problem, and the eleven points
whose pedal triangles are similar to a given triangle."""

from .geom_core import (
    DEFAULT_TOL,
    AngleTriple,
    Circle,
    GeometryError,
    Inversion,
    Line,
    Point,
    ToleranceConfig,
    Triangle,
)
from .inverse_pedal import SolveOutcome, solve
from .notable_points import NotablePointSet, eleven_points
from .pedal_map import Orientation, PedalResult, f_of, pedal_triangle

__all__ = [
    "DEFAULT_TOL",
    "AngleTriple",
    "Circle",
    "GeometryError",
    "Inversion",
    "Line",
    "NotablePointSet",
    "Orientation",
    "PedalResult",
    "Point",
    "SolveOutcome",
    "ToleranceConfig",
    "Triangle",
    "eleven_points",
    "f_of",
    "pedal_triangle",
    "solve",
]
