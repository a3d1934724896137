"""Sort random points along several curves without computing any index.

Each comparator walks the digits of two points until they fall in
different subregions. The sort uses it through functools.cmp_to_key and
the result is checked against the explicit cell order.
"""
import functools
import random

from sfcurves import (compare_binary, compare_ternary, expand_order,
                      make_standard_hilbert, make_ternary)
from sfcurves.curvespec import cell_point


def sort_cells(less, cells, base, depth):
    points = [cell_point(c, base, depth) for c in cells]
    key = functools.cmp_to_key(lambda p, q: -1 if less(p, q) else (1 if less(q, p) else 0))
    return sorted(points, key=key)


def main():
    rng = random.Random(7)
    for family, base, make, less in [
        ("harmonious", 2, make_standard_hilbert, compare_binary),
        ("butz-moore", 2, make_standard_hilbert, compare_binary),
        ("peano", 3, make_ternary, compare_ternary),
        ("meurthe", 3, make_ternary, compare_ternary),
    ]:
        spec = make(family, 3)
        depth = 2
        cells = [tuple(c) for c in expand_order(spec, depth).tolist()]
        shuffled = cells[:]
        rng.shuffle(shuffled)
        got = sort_cells(lambda p, q: less(p, q, family), shuffled, base, depth)
        want = [cell_point(c, base, depth) for c in cells]
        print(f"{family:>11}: {len(cells)} cells, sorted order matches expansion: {got == want}")
        print("             first cells:", cells[:6])


if __name__ == "__main__":
    main()
