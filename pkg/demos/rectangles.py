"""Order rectangles for bulk loading an R-tree.

A rectangle in d dimensions becomes a point in 2d dimensions, either
corner-to-corner (xy) or centre-plus-size (cd). The composed curve then
orders those points so that the order restricted to degenerate rectangles
is the plain inner curve.
"""
import functools
import random
from fractions import Fraction

from sfcurves import Rectangle, compare_composed, rect_to_point


def random_rect(rng, grid=16):
    x0, x1 = sorted(rng.randrange(grid) for _ in range(2))
    y0, y1 = sorted(rng.randrange(grid) for _ in range(2))
    f = lambda v: Fraction(v, grid)
    return Rectangle((f(x0), f(y0)), (f(x1), f(y1)))


def main():
    rng = random.Random(3)
    rects = [random_rect(rng) for _ in range(12)]
    for mode in ("xy", "cd"):
        keyed = {id(r): rect_to_point(r, mode) for r in rects}

        def cmp(a, b):
            p, q = keyed[id(a)], keyed[id(b)]
            return -1 if compare_composed(p, q, "harmonious") else (1 if compare_composed(q, p, "harmonious") else 0)

        ordered = sorted(rects, key=functools.cmp_to_key(cmp))
        print(f"mode {mode}:")
        for r in ordered:
            print("   ", r)
        # pack into leaves of four, the way a bulk loader would
        leaves = [ordered[i:i + 4] for i in range(0, len(ordered), 4)]
        for n, leaf in enumerate(leaves):
            lo = tuple(min(r.mins[i] for r in leaf) for i in range(2))
            hi = tuple(max(r.maxs[i] for r in leaf) for i in range(2))
            area = (hi[0] - lo[0]) * (hi[1] - lo[1])
            print(f"    leaf {n}: area {float(area):.3f}")


if __name__ == "__main__":
    main()
