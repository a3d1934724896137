"""Standard Hilbert curves in any dimension: Butz-Moore and harmonious.

Both use the binary reflected Gray code for locations and the same
reflections. Butz-Moore permutations are rotations; the harmonious ones are
built so that every front face shows the curve one dimension lower.
"""

from __future__ import annotations


from .curvespec import CurveSpec, Permutation, SpecError
from .digits import DigitError, Point, as_values, to_point
from .graycode import Digits, rgc_encode, to_digits, from_digits

FAMILIES = ("butz-moore", "harmonious")
_ALIASES = {"butzmoore": "butz-moore", "butz_moore": "butz-moore"}


def family_tag(family: str) -> str:
    tag = _ALIASES.get(family, family)
    if tag not in FAMILIES:
        raise SpecError(f"unknown binary family {family!r}")
    return tag


def hilbert_reflections(r: Digits) -> Digits:
    d = len(r)
    n = from_digits(r, 2)
    c = rgc_encode(r, 2)
    if n == 0:
        return c
    prev = rgc_encode(to_digits(n - 1, 2, d), 2)
    return tuple(prev[:d - 1]) + (1 - c[d - 1],)


def entry_axis(location: Digits) -> int:
    """Index j with a_j(r) = 0, read off the location c(r).

    The axis along which the subcurve leaves towards its exit sits just
    below the last 1 in c(r), wrapping around; with no 1 at all it is d-1.
    """
    d = len(location)
    j = d - 1
    for i, x in enumerate(location):
        if x == 1:
            j = (i - 1) % d
    return j


def butzmoore_inverse(r: Digits) -> Digits:
    d = len(r)
    j0 = entry_axis(rgc_encode(r, 2))
    return tuple((j0 + j) % d for j in range(d))


def harmonious_inverse(r: Digits) -> Digits:
    last = r[-1]
    differ = [i for i, x in enumerate(r) if x != last]
    same = [i for i, x in enumerate(r) if x == last]
    return tuple(differ[::-1] + same[::-1])


def make_standard_hilbert(family: str, d: int) -> CurveSpec:
    family = family_tag(family)
    if d < 1:
        raise SpecError("dimension must be at least 1")
    inverse = butzmoore_inverse if family == "butz-moore" else harmonious_inverse
    return CurveSpec.from_rules(
        d, 2,
        lambda r: rgc_encode(r, 2),
        lambda r: Permutation.from_inverse(inverse(r)),
        hilbert_reflections,
        name=f"{family}-{d}",
    )


def _rows(p: Point, q: Point):
    if p.base != 2 or q.base != 2:
        raise SpecError("binary curves need base-2 points")
    if p.dim != q.dim:
        raise SpecError("points differ in dimension")
    return p.digit_rows(), q.digit_rows()


def _compare_harmonious(P, Q) -> bool:
    d = len(P)
    depth = max(len(row) for row in P + Q)
    perm = list(range(d))
    reflected = [False] * d
    forward = True
    rank = [0] * d
    # the flags carried into the next level are deliberately off for the
    # first axis: forward and its reflected flag are both wrong, which cancels
    for k in range(depth):
        for i in range(d):
            src = perm[i]
            row = P[src]
            pd = row[k] if k < len(row) else 0
            row = Q[src]
            qd = row[k] if k < len(row) else 0
            if reflected[src]:
                pd, qd = 1 - pd, 1 - qd
            if pd != qd:
                return (pd < qd) == forward
            rank[i] = pd if forward else 1 - pd
            if pd == 1:
                forward = not forward
                reflected[src] = not reflected[src]
        ones = sum(rank)
        if rank[d - 1] == 0:
            nxt = [ones, 0]
        else:
            nxt = [0, d - ones]
        alt = [0] * d
        for i in range(d - 1, -1, -1):
            alt[nxt[rank[i]]] = perm[i]
            nxt[rank[i]] += 1
        reflected[perm[d - 1]] = not reflected[perm[d - 1]]
        reflected[alt[0]] = not reflected[alt[0]]
        perm = alt
    return False


def _compare_butzmoore(P, Q) -> bool:
    d = len(P)
    depth = max(len(row) for row in P + Q)
    reflected = [False] * d
    forward = True
    rotation = 0
    for k in range(depth):
        i = rotation
        prev = (i - 1) % d
        new_rotation = prev
        while True:
            row = P[i]
            pd = row[k] if k < len(row) else 0
            row = Q[i]
            qd = row[k] if k < len(row) else 0
            if reflected[i]:
                pd, qd = 1 - pd, 1 - qd
            if pd != qd:
                return (pd < qd) == forward
            if pd == 1:
                forward = not forward
                reflected[i] = not reflected[i]
                new_rotation = prev
            prev = i
            i = (i + 1) % d
            if i == rotation:
                break
        reflected[prev] = not reflected[prev]
        reflected[new_rotation] = not reflected[new_rotation]
        rotation = new_rotation
    return False


def compare_binary(p: Point, q: Point, family: str) -> bool:
    """True iff p precedes q on the d-dimensional curve of ``family``."""
    family = family_tag(family)
    P, Q = _rows(p, q)
    if family == "butz-moore":
        return _compare_butzmoore(P, Q)
    return _compare_harmonious(P, Q)


def zoom_factor(family: str, d: int) -> int:
    """Scale at which the unit cube sits untransformed in a corner.

    The first subregion is turned by a(0) and not mirrored; after as many
    nested levels as the order of that permutation the transform is the
    identity again. That is 2 levels (factor 4) for harmonious curves, and
    d levels for the Butz-Moore rotation when d > 2.
    """
    family = family_tag(family)
    inverse = butzmoore_inverse if family == "butz-moore" else harmonious_inverse
    first = inverse((0,) * d)
    levels, current = 1, first
    while current != tuple(range(d)):
        current = tuple(first[j] for j in current)
        levels += 1
    levels = max(levels, 2)
    return 2 ** levels


def compare_binary_nonneg(p, q, family: str, precision: int = 20) -> bool:
    pv, qv = list(as_values(p)), list(as_values(q))
    if len(pv) != len(qv):
        raise SpecError("points differ in dimension")
    if any(v < 0 for v in pv + qv):
        raise DigitError("negative coordinates are not supported for binary curves")
    factor = zoom_factor(family, len(pv))
    shift = factor.bit_length() - 1
    steps = 0
    while any(v >= 1 for v in pv + qv):
        pv = [v / factor for v in pv]
        qv = [v / factor for v in qv]
        steps += 1
    n = precision + shift * steps
    return compare_binary(to_point(pv, 2, n), to_point(qv, 2, n), family)


def butzmoore_inconsistency_witness(depth: int = 2):
    """A front face of the 3D Butz-Moore curve that disagrees with 2D Hilbert.

    Returns ``(face, depth, index, seen, expected)``: the first position on
    the face where the visible order differs from the planar curve, or None
    when every front face agrees at this depth.
    """
    from .verify import Face, check_shows

    cube = make_standard_hilbert("butz-moore", 3)
    square = make_standard_hilbert("butz-moore", 2)
    for axis in range(3):
        face = Face(axis, 0)
        result = check_shows(cube, square, face, depth)
        if not result.passed:
            index, seen, expected = result.witness
            return face, depth, index, seen, expected
    return None
