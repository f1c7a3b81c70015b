"""Residuals of the eleven-point construction as a triangle approaches equilateral.

Walks the apex angle of an isosceles-then-perturbed family towards 60 degrees
and prints, per step, the distance |OL|/R together with the worst Brocard-circle,
axis and labeling residuals.  Useful to see where the 1e-9 tolerance stops
being attainable.

    python scripts/conditioning_sweep.py --steps 12
"""
import argparse
import csv
import math
import sys

from pedal_kernel.geom_core import ToleranceConfig, collinear, dist
from pedal_kernel.notable_points import eleven_points
from pedal_kernel.sampling import triangle_from_angles


def sweep(steps: int, tilt: float, eps: float):
    tol = ToleranceConfig.uniform(eps)
    rows = []
    for k in range(steps):
        d = 10.0 ** (-k)  # angular distance from equilateral, radians
        angles = (math.pi / 3 + d, math.pi / 3 - tilt * d, math.pi / 3 - (1 - tilt) * d)
        tri = triangle_from_angles(angles, tol=tol)
        s = eleven_points(tri)
        row = {"delta": d, "ol_over_r": dist(s.o, s.lemoine) / tri.R, "equilateral": s.equilateral}
        if not s.equilateral:
            k0 = s.brocard_circle
            row["brocard"] = max(abs(k0.residual(p)) for p in s.interior().values())
            row["axis"] = collinear(list(s.finite_exterior().values()), tol).residual
        row["labels"] = max(s.label_residuals.values())
        rows.append(row)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=10)
    ap.add_argument("--tilt", type=float, default=0.3, help="how the deficit splits between beta and gamma")
    ap.add_argument("--eps", type=float, default=1e-9)
    ap.add_argument("--csv", help="also write the rows to this file")
    args = ap.parse_args(argv)

    rows = sweep(args.steps, args.tilt, args.eps)
    cols = ["delta", "ol_over_r", "equilateral", "brocard", "axis", "labels"]
    print("  ".join(f"{c:>12}" for c in cols))
    for r in rows:
        cells = []
        for c in cols:
            v = r.get(c, "")
            cells.append(f"{v:>12.3e}" if isinstance(v, float) else f"{str(v):>12}")
        print("  ".join(cells))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=cols)
            w.writeheader()
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
