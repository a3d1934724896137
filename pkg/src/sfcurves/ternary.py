"""Ternary mono-Wunderlich curves: Peano, coil, half-coil and Meurthe.

All four share the ternary reflected Gray code for locations and the
reflection rule m_i(r) = (digitsum(r) - r_i) mod 2; they differ only in
the permutations. ``compare_ternary`` is the streamlined comparator that
never materialises these tables.
"""

from __future__ import annotations

from fractions import Fraction

from .curvespec import CurveSpec, Permutation, SpecError
from .digits import DigitError, Point, as_values, to_point
from .graycode import Digits, rgc_encode

FAMILIES = ("peano", "coil", "half-coil", "meurthe")
_ALIASES = {"halfcoil": "half-coil", "half_coil": "half-coil"}


def family_tag(family: str) -> str:
    tag = _ALIASES.get(family, family)
    if tag not in FAMILIES:
        raise SpecError(f"unknown ternary family {family!r}")
    return tag


def ternary_reflections(r: Digits) -> Digits:
    total = sum(r)
    return tuple((total - x) % 2 for x in r)


def meurthe_inverse(r: Digits) -> Digits:
    """Indices with digit 0 or 1 go to the front in reverse order."""
    low = [i for i, x in enumerate(r) if x != 2]
    high = [i for i, x in enumerate(r) if x == 2]
    return tuple(low[::-1] + high)


def ternary_permutation(family: str, r: Digits) -> Permutation:
    d = len(r)
    family = family_tag(family)
    if family == "peano":
        return Permutation.identity(d)
    if family == "coil":
        return Permutation(tuple(range(d - 1, -1, -1)))
    if family == "half-coil":
        # r is odd exactly when its ternary digit sum is odd
        if sum(r) % 2:
            return Permutation.identity(d)
        return Permutation(tuple(range(d - 1, -1, -1)))
    return Permutation.from_inverse(meurthe_inverse(r))


def make_ternary(family: str, d: int) -> CurveSpec:
    family = family_tag(family)
    if d < 1:
        raise SpecError("dimension must be at least 1")
    return CurveSpec.from_rules(
        d, 3,
        lambda r: rgc_encode(r, 3),
        lambda r: ternary_permutation(family, r),
        ternary_reflections,
        name=f"{family}-{d}",
    )


def _rows(p: Point, q: Point):
    if p.base != 3 or q.base != 3:
        raise SpecError("ternary curves need base-3 points")
    if p.dim != q.dim:
        raise SpecError("points differ in dimension")
    return p.digit_rows(), q.digit_rows()


def compare_ternary(p: Point, q: Point, family: str) -> bool:
    """True iff p precedes q on the d-dimensional curve of ``family``.

    One pass over the digits, level by level. ``forward`` is never reset:
    it tracks the parity of all odd rank digits seen so far, and a digit is
    mirrored when its coordinate's flag equals ``forward``. That folds the
    reflection of every other axis into a single flag flip.
    """
    family = family_tag(family)
    P, Q = _rows(p, q)
    d = len(P)
    depth = max(len(row) for row in P + Q)
    perm = list(range(d))
    reflected = [False] * d
    forward = True
    rank = [0] * d
    for k in range(depth):
        direction = forward
        for i in range(d):
            src = perm[i]
            row = P[src]
            pd = row[k] if k < len(row) else 0
            row = Q[src]
            qd = row[k] if k < len(row) else 0
            if reflected[src] == forward:
                pd, qd = 2 - pd, 2 - qd
            if pd != qd:
                return pd < qd
            rank[i] = pd
            if pd == 1:
                forward = not forward
                reflected[src] = not reflected[src]
        if family == "peano":
            continue
        if family == "coil":
            perm.reverse()
        elif family == "half-coil":
            # an even rank leaves forward where it was at the start of the level
            if forward == direction:
                perm.reverse()
        else:
            alt = [0] * d
            next_two = d - rank.count(2)
            next_other = next_two - 1
            for i in range(d):
                if rank[i] == 2:
                    alt[next_two] = perm[i]
                    next_two += 1
                else:
                    alt[next_other] = perm[i]
                    next_other -= 1
            perm = alt
    return False


def _zoom(p, q, grow, inside) -> tuple[list[Fraction], list[Fraction], int]:
    pv, qv = list(as_values(p)), list(as_values(q))
    if len(pv) != len(qv):
        raise SpecError("points differ in dimension")
    steps = 0
    while not all(inside(v) for v in pv + qv):
        pv = [grow(v) for v in pv]
        qv = [grow(v) for v in qv]
        steps += 1
    return pv, qv, steps


def compare_ternary_nonneg(p, q, family: str, precision: int = 20) -> bool:
    """Compare points with non-negative coordinates of any size.

    Points are given as Points or as sequences of exact numbers. The unit
    cube is the first subregion of the first subregion of a cube nine times
    larger, and that sub-subregion is untransformed, so shrinking both
    points by 9 until they fit leaves the order inside the unit cube alone.
    """
    if any(v < 0 for v in as_values(p) + as_values(q)):
        raise DigitError("negative coordinate in non-negative mode")
    pv, qv, steps = _zoom(p, q, lambda v: v / 9, lambda v: v < 1)
    n = precision + 2 * steps
    return compare_ternary(to_point(pv, 3, n), to_point(qv, 3, n), family)


def compare_ternary_signed(p, q, family: str, precision: int = 20) -> bool:
    """Compare points with arbitrary signed coordinates.

    Each zoom-out step adds 20 (ternary 202) and divides by 81, placing the
    previous cube in the middle of the 0202 corner of a cube 81 times
    larger. Both points always take the same number of steps.
    """
    pv, qv, steps = _zoom(p, q, lambda v: (v + 20) / 81, lambda v: 0 <= v < 1)
    n = precision + 4 * steps
    return compare_ternary(to_point(pv, 3, n), to_point(qv, 3, n), family)
