"""Compare two closed forms for the inverse of the Lemoine point.

The symmetric form, with weights a^2 (2a^2 - b^2 - c^2) and its cyclic
shifts, and the asymmetric variant in asymmetric_midpoint_formula are both
compared with the inverse of L in the circumcircle over seeded random
triangles.

    python scripts/midpoint_formula_report.py --trials 1000 --seed 0
"""
import argparse
import sys

import numpy as np

from pedal_kernel import sampling
from pedal_kernel.geom_core import Inversion, dist, invert_point
from pedal_kernel.notable_points import lemoine_point, midpoint_formula, asymmetric_midpoint_formula


def main(argv=None):
    ap = argparse.ArgumentParser(description="residuals of two closed forms for the inverse Lemoine point")
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    sym, asym = [], []
    for i in range(args.trials):
        tri = sampling.random_triangle(sampling.trial_rng(args.seed, i))
        L = lemoine_point(tri)
        if dist(L, tri.circumcenter) <= 1e-6 * tri.R:
            continue
        lp = invert_point(Inversion.in_circle(tri.circumcircle), L)
        scale = max(tri.R, dist(lp, tri.circumcenter))
        sym.append(dist(midpoint_formula(tri), lp) / scale)
        asym.append(dist(asymmetric_midpoint_formula(tri), lp) / scale)

    for name, vals in (("symmetric", sym), ("asymmetric", asym)):
        v = np.array(vals)
        print(f"{name:>10}: n={v.size}  median={np.median(v):.3e}  max={v.max():.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
