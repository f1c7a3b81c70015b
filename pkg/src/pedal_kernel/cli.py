"""Command-line front end: ``pedal-kernel points|solve|pedal|verify|render``.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 internal assertion.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional

from .geom_core import (
    AngleTriple,
    Circle,
    GeometryError,
    Inversion,
    Line,
    Point,
    ToleranceConfig,
    Triangle,
    dist,
    invert_point,
    make_point,
)
from .inverse_pedal import InvalidTarget, NoIntersection, build_system, discriminant, solve
from .notable_points import (
    AtInfinity,
    basic_apollonius_circles,
    barycentric_of,
    brocard_angle_cot,
    eleven_points,
    asymmetric_midpoint_formula,
)
from .pedal_map import Orientation, f_of, pedal_triangle, side_ratio_residual
from . import render as render_mod
from . import verify as verify_mod

SCHEMA = "pedal-kernel/1"
EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _floats(text: str, n: int, what: str) -> list[float]:
    try:
        vals = [float(s) for s in text.split(",")]
    except ValueError:
        raise InputError(f"{what}: expected {n} comma-separated numbers, got {text!r}") from None
    if len(vals) != n or not all(math.isfinite(v) for v in vals):
        raise InputError(f"{what}: expected {n} finite numbers, got {text!r}")
    return vals


def resolve_eps(flag: Optional[float]) -> float:
    if flag is not None:
        return flag
    env = os.environ.get("PEDAL_EPS")
    if env:
        try:
            return float(env)
        except ValueError:
            raise InputError(f"PEDAL_EPS is not a number: {env!r}") from None
    return ToleranceConfig().eps_rel


def tolerance(args) -> ToleranceConfig:
    try:
        return ToleranceConfig.uniform(resolve_eps(args.eps))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def triangle_from_args(args, tol: ToleranceConfig, required: bool = True) -> Optional[Triangle]:
    try:
        if args.sides:
            return Triangle.from_sides(*_floats(args.sides, 3, "--sides"), tol=tol)
        if args.vertices:
            v = _floats(args.vertices, 6, "--vertices")
            return Triangle(make_point(v[0], v[1]), make_point(v[2], v[3]), make_point(v[4], v[5]), tol=tol)
    except GeometryError as exc:
        raise InputError(f"invalid triangle: {exc}") from None
    if required:
        raise InputError("a triangle is required: pass --sides a,b,c or --vertices x1,y1,x2,y2,x3,y3")
    return None


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _num(v: float):
    # adding 0.0 turns -0.0 into 0.0
    return v + 0.0 if math.isfinite(v) else None


def _pt(p: Point) -> list:
    return [_num(p.x), _num(p.y)]


def _circle(c: Optional[Circle]):
    return None if c is None else {"center": _pt(c.center), "radius": c.radius}


def _line(l: Optional[Line]):
    return None if l is None else {"anchor": _pt(l.anchor), "direction": _pt(l.direction)}


def _gcircle(g):
    if isinstance(g, Circle):
        return {"kind": "circle", **_circle(g)}
    return {"kind": "line", **_line(g)}


def _angles(t, degrees: bool) -> list:
    return [math.degrees(a) if degrees else a for a in t]


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False)


def triangle_json(tri: Triangle) -> dict:
    return {
        "vertices": {name: _pt(v) for name, v in zip("ABC", tri.vertices)},
        "sides": dict(zip("abc", tri.sides)),
        "angles_rad": list(tri.angles),
        "angles_deg": _angles(tri.angles, True),
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_points(args) -> int:
    tol = tolerance(args)
    tri = triangle_from_args(args, tol)
    if args.format == "svg-aux":
        print(dump({"schema": SCHEMA, "scene": render_mod.scene_dict(tri)}))
        return EXIT_OK
    s = eleven_points(tri)
    points = {}
    for name, p in s.all_points().items():
        label = s.similarity_labels[name]
        if p is None:
            points[name] = None
        elif isinstance(p, AtInfinity):
            points[name] = {"at_infinity": _pt(p.direction), "similar_to": label, "orientation": "negative"}
        else:
            interior = name in s.interior()
            points[name] = {
                "cartesian": _pt(p),
                "barycentric": list(barycentric_of(tri, p)),
                "similar_to": label,
                "orientation": "positive" if interior else "negative",
                "label_residual": _num(s.label_residuals.get(name, math.nan)),
            }
    out = {
        "schema": SCHEMA,
        "triangle": triangle_json(tri),
        "circumcircle": _circle(tri.circumcircle),
        "equilateral": s.equilateral,
        "lemoine": {"cartesian": _pt(s.lemoine), "barycentric": list(barycentric_of(tri, s.lemoine))},
        "brocard_angle_rad": s.brocard_angle,
        "brocard_angle_deg": math.degrees(s.brocard_angle),
        "brocard_angle_cot_check": brocard_angle_cot(tri),
        "brocard_circle": _circle(s.brocard_circle),
        "axis_g": _line(s.axis_g),
        "basic_apollonius": [_gcircle(k) for k in basic_apollonius_circles(tri)],
        "points": points,
    }
    if not s.equilateral:
        lp = invert_point(Inversion.in_circle(tri.circumcircle, tri.tol), s.lemoine)
        out["asymmetric_midpoint_formula_residual"] = dist(asymmetric_midpoint_formula(tri), lp) / tri.R
    print(dump(out))
    return EXIT_OK


def cmd_solve(args) -> int:
    tol = tolerance(args)
    tri = triangle_from_args(args, tol)
    if not args.angles:
        raise InputError("--angles r1,r2,r3 is required")
    vals = _floats(args.angles, 3, "--angles")
    full = 180.0 if args.degrees else math.pi
    if not all(v > 0 for v in vals) or abs(sum(vals) - full) > 1e-6:
        raise InputError(f"angles must be positive and sum to {full:g} within 1e-6, got {vals}")
    rad = [math.radians(v) for v in vals] if args.degrees else vals
    try:
        target = AngleTriple.normalized(*rad, tol=tol)
    except GeometryError as exc:
        raise InputError(str(exc)) from None
    out = solve(tri, target)
    O, R = tri.circumcenter, tri.R

    def roundtrip(p: Point):
        fa = f_of(tri, p)
        return {"max_angle_error": fa.angles.max_diff(target), "orientation": fa.orientation.value}

    identity = out.outside is None
    try:
        disc = None if identity else discriminant(tri, build_system(tri, target))
    except InvalidTarget:
        disc = None
    res = {
        "schema": SCHEMA,
        "triangle": triangle_json(tri),
        "target_rad": list(target),
        "target_deg": _angles(target, True),
        "identity_target": identity,
        "inside": _pt(out.inside),
        "inside_barycentric": list(barycentric_of(tri, out.inside)),
        "outside": None if identity else _pt(out.outside),
        "discriminant": disc,
        "discriminant_ok": out.discriminant_ok,
        "concurrency_residual": out.concurrency_residual,
        "near_identity": out.near_identity,
        "roundtrip": {
            "inside": roundtrip(out.inside),
            "outside": None if identity else roundtrip(out.outside),
        },
        "inverse_product_residual": None if identity else
        abs(dist(out.inside, O) * dist(out.outside, O) / (R * R) - 1.0),
    }
    print(dump(res))
    return EXIT_OK


def cmd_pedal(args) -> int:
    tol = tolerance(args)
    tri = triangle_from_args(args, tol)
    if not args.at:
        raise InputError("--at x,y is required")
    m = make_point(*_floats(args.at, 2, "--at"))
    res = pedal_triangle(tri, m)
    out = {
        "schema": SCHEMA,
        "triangle": triangle_json(tri),
        "at": _pt(m),
        "feet": {name: _pt(p) for name, p in zip(("A1", "B1", "C1"), res.feet)},
        "classification": res.orientation.value,
        "angles": None if res.angles is None else _angles(res.angles, args.degrees),
        "angle_unit": "deg" if args.degrees else "rad",
        "simson_line": _line(res.simson_line),
    }
    if res.orientation is not Orientation.DEGENERATE:
        try:
            out["side_ratio_residual"] = side_ratio_residual(tri, m)
        except ZeroDivisionError:
            out["side_ratio_residual"] = None
    print(dump(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    eps = resolve_eps(args.eps)
    try:
        ToleranceConfig.uniform(eps)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    tri = triangle_from_args(args, ToleranceConfig.uniform(eps), required=False)
    if tri is None:
        rep = verify_mod.verify_random(args.trials, args.seed, eps=eps, hard=args.hard)
    else:
        rep = verify_mod.verify_triangle(tri, args.trials, args.seed, eps=eps)
    print(dump(rep.as_dict()))
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_render(args) -> int:
    tol = tolerance(args)
    tri = triangle_from_args(args, tol)
    if not args.out:
        raise InputError("--out PATH is required")
    try:
        layers = render_mod.parse_layers(args.layers)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    svg = render_mod.render(tri, layers)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    shape = common.add_mutually_exclusive_group()
    shape.add_argument("--sides", help="side lengths a,b,c (B at origin, C on +x axis)")
    shape.add_argument("--vertices", help="x1,y1,x2,y2,x3,y3 for A, B, C")
    common.add_argument("--eps", type=float, default=None, help="relative tolerance (overrides PEDAL_EPS)")
    common.add_argument("--degrees", action="store_true", help="angles in degrees instead of radians")

    p = argparse.ArgumentParser(prog="pedal-kernel", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("points", parents=[common], help="the eleven notable points as JSON")
    sp.add_argument("--format", choices=("json", "svg-aux"), default="json")
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("solve", parents=[common], help="points whose pedal triangle has given angles")
    sp.add_argument("--angles", help="target angles r1,r2,r3")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("pedal", parents=[common], help="pedal triangle of a point")
    sp.add_argument("--at", help="point x,y")
    sp.set_defaults(func=cmd_pedal)

    sp = sub.add_parser("verify", parents=[common], help="randomized verification suite")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--hard", action="store_true", help="lower the minimum sampled angle to 0.5 degrees")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", parents=[common], help="schematic SVG of the configuration")
    sp.add_argument("--out", help="output SVG path")
    sp.add_argument("--layers", default="all", help="comma-separated layers or 'all': " + ",".join(render_mod.LAYERS))
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoIntersection as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
