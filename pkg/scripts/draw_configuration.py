"""Draw the full eleven-point configuration for a scalene triangle with a < c < b.

    python scripts/draw_configuration.py --sides 4,6,5 --out configuration.svg
"""
import argparse
import sys

from pedal_kernel.geom_core import Triangle
from pedal_kernel.render import LAYERS, parse_layers, render


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sides", default="4,6,5", help="a,b,c")
    ap.add_argument("--layers", default="all", help="all or a comma list of: " + ",".join(LAYERS))
    ap.add_argument("--out", default="configuration.svg")
    args = ap.parse_args(argv)

    a, b, c = (float(x) for x in args.sides.split(","))
    if not a < c < b:
        print(f"note: sides do not satisfy a < c < b ({a}, {b}, {c})", file=sys.stderr)
    svg = render(Triangle.from_sides(a, b, c), parse_layers(args.layers))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
