"""Doubling the dimension: f = f' o h, with h a planar curve.

A point of dimension 2d' is split into a left and a right half. Each half
is located along the inner curve f', which gives two parameters; the pair
of parameters is then located along the planar driver curve h. Because h
is monotone along the bottom edge and along the rising diagonal, the
composed curve orders points of the form (a|0) and (a|a) the same way f'
orders a.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .curvespec import (CurveSpec, Permutation, SpecError, compose_transforms,
                        expand_order)
from .digits import DigitError, Point, to_point
from .hilbert import family_tag as binary_tag
from .hilbert import make_standard_hilbert
from .ternary import FAMILIES as TERNARY_FAMILIES
from .ternary import family_tag as ternary_tag
from .verify import check_monotone, check_vertex_continuity

Inner = Union[str, CurveSpec]

H2_SEGMENTS = (((0, 0), (0, 1)), ((0, 1), (1, 1)), ((1, 1), (1, 0)),
               ((0, 0), (1, 0)), ((0, 0), (1, 1)))
H3_SEGMENTS = (((0, 0), (1, 0)), ((0, 0), (1, 1)))

# 3x3 meander: a 2x2 block in the lower-left corner, then up the left
# column, across the top and down the right column to exit at (1, 0)
_H3_ROWS = (
    ((0, 0), (0, 1), (0, 0)),
    ((1, 0), (1, 0), (0, 0)),
    ((1, 1), (1, 0), (0, 0)),
    ((0, 1), (0, 1), (1, 1)),
    ((0, 2), (0, 1), (0, 0)),
    ((1, 2), (0, 1), (0, 0)),
    ((2, 2), (0, 1), (0, 0)),
    ((2, 1), (1, 0), (1, 1)),
    ((2, 0), (1, 0), (1, 1)),
)


def _verified(spec: CurveSpec, segments, depth: int) -> CurveSpec:
    for start, end in segments:
        result = check_monotone(spec, start, end, depth)
        if not result.passed:
            raise SpecError(f"{spec.name} is not monotone from {start} to {end}: {result.witness}")
    if not check_vertex_continuity(spec, depth).passed:
        raise SpecError(f"{spec.name} is not vertex-continuous")
    return spec


@lru_cache(maxsize=None)
def make_h2() -> CurveSpec:
    base = make_standard_hilbert("harmonious", 2)
    spec = CurveSpec(2, 2, base.locations, base.perms, base.reflections, name="h2")
    return _verified(spec, H2_SEGMENTS, 4)


@lru_cache(maxsize=None)
def make_h3() -> CurveSpec:
    spec = CurveSpec(2, 3,
                     tuple(row[0] for row in _H3_ROWS),
                     tuple(Permutation(row[1]) for row in _H3_ROWS),
                     tuple(row[2] for row in _H3_ROWS),
                     name="h3")
    return _verified(spec, H3_SEGMENTS, 3)


def driver(base: int) -> CurveSpec:
    return make_h2() if base == 2 else make_h3()


# ---------------------------------------------------------------------------
# streaming comparators: one rank digit of each point per call


def _digit(row, k):
    return row[k] if k < len(row) else 0


class StreamingComparator:
    """Walks down the inner curve for two points at once.

    ``next_digits`` returns the next base-b digit of the curve parameter of
    each point. Digits after the first pair that differs are not reliable,
    which never matters because the caller stops there.
    """

    def __init__(self, p_rows, q_rows):
        self.p = tuple(p_rows)
        self.q = tuple(q_rows)
        self.d = len(self.p)
        self.depth = max(len(row) for row in self.p + self.q)
        self.level = 0

    @property
    def exhausted(self) -> bool:
        """All input digits consumed: every further pair of digits is equal."""
        return self.level >= self.depth

    def next_digits(self) -> tuple[int, int]:
        raise NotImplementedError


class GenericStream(StreamingComparator):
    """Any table-driven curve; reads a whole level, then hands out its digits."""

    def __init__(self, spec: CurveSpec, p_rows, q_rows):
        super().__init__(p_rows, q_rows)
        self.spec = spec
        self.perm = list(range(self.d))
        self.reflected = [False] * self.d
        self.pending: list[tuple[int, int]] = []

    @property
    def exhausted(self) -> bool:
        return self.level >= self.depth and not self.pending

    def _location(self, rows, k):
        b = self.spec.base
        idx = 0
        for src in self.perm:
            x = _digit(rows[src], k)
            if self.reflected[src]:
                x = b - 1 - x
            idx = idx * b + x
        return self.spec._rank_at[idx]

    def next_digits(self):
        if not self.pending:
            spec, k = self.spec, self.level
            rp = self._location(self.p, k)
            rq = self._location(self.q, k)
            self.pending = list(zip(spec.rank_digits(rp), spec.rank_digits(rq)))[::-1]
            inv, m = spec.perms[rp].inverse, spec.reflections[rp]
            alt = [self.perm[j] for j in inv]
            for i, j in enumerate(inv):
                if m[j]:
                    self.reflected[alt[i]] = not self.reflected[alt[i]]
            self.perm = alt
            self.level += 1
        return self.pending.pop()


class TernaryStream(StreamingComparator):
    def __init__(self, family: str, p_rows, q_rows):
        super().__init__(p_rows, q_rows)
        self.family = ternary_tag(family)
        self.perm = list(range(self.d))
        self.reflected = [False] * self.d
        self.forward = True
        self.direction = True
        self.rank = [0] * self.d
        self.i = 0

    def next_digits(self):
        i, k = self.i, self.level
        if i == 0:
            self.direction = self.forward
        src = self.perm[i]
        pd, qd = _digit(self.p[src], k), _digit(self.q[src], k)
        if self.reflected[src] == self.forward:
            pd, qd = 2 - pd, 2 - qd
        self.rank[i] = pd
        if pd == 1:
            self.forward = not self.forward
            self.reflected[src] = not self.reflected[src]
        self.i += 1
        if self.i == self.d:
            self._end_level()
        return pd, qd

    def _end_level(self):
        d, fam = self.d, self.family
        if fam == "coil" or (fam == "half-coil" and self.forward == self.direction):
            self.perm.reverse()
        elif fam == "meurthe":
            alt = [0] * d
            next_two = d - self.rank.count(2)
            next_other = next_two - 1
            for i in range(d):
                if self.rank[i] == 2:
                    alt[next_two] = self.perm[i]
                    next_two += 1
                else:
                    alt[next_other] = self.perm[i]
                    next_other -= 1
            self.perm = alt
        self.i = 0
        self.level += 1


class HarmoniousStream(StreamingComparator):
    def __init__(self, p_rows, q_rows):
        super().__init__(p_rows, q_rows)
        self.perm = list(range(self.d))
        self.reflected = [False] * self.d
        self.forward = True
        self.rank = [0] * self.d
        self.i = 0

    def next_digits(self):
        i, k = self.i, self.level
        src = self.perm[i]
        pd, qd = _digit(self.p[src], k), _digit(self.q[src], k)
        if self.reflected[src]:
            pd, qd = 1 - pd, 1 - qd
        pr, qr = (pd, qd) if self.forward else (1 - pd, 1 - qd)
        self.rank[i] = pr
        if pd == 1:
            self.forward = not self.forward
            self.reflected[src] = not self.reflected[src]
        self.i += 1
        if self.i == self.d:
            d, rank = self.d, self.rank
            ones = sum(rank)
            nxt = [ones, 0] if rank[d - 1] == 0 else [0, d - ones]
            alt = [0] * d
            for j in range(d - 1, -1, -1):
                alt[nxt[rank[j]]] = self.perm[j]
                nxt[rank[j]] += 1
            self.reflected[self.perm[d - 1]] = not self.reflected[self.perm[d - 1]]
            self.reflected[alt[0]] = not self.reflected[alt[0]]
            self.perm = alt
            self.i = 0
            self.level += 1
        return pr, qr


class ButzMooreStream(StreamingComparator):
    def __init__(self, p_rows, q_rows):
        super().__init__(p_rows, q_rows)
        self.forward = True
        self.rotation = 0
        self.reflected = [False] * self.d
        self.i = 0
        self.prev = self.d - 1
        self.new_rotation = self.prev

    def next_digits(self):
        i, k, d = self.i, self.level, self.d
        pd, qd = _digit(self.p[i], k), _digit(self.q[i], k)
        if self.reflected[i]:
            pd, qd = 1 - pd, 1 - qd
        pr, qr = (pd, qd) if self.forward else (1 - pd, 1 - qd)
        if pd == 1:
            self.forward = not self.forward
            self.reflected[i] = not self.reflected[i]
            self.new_rotation = self.prev
        self.prev = i
        self.i = (i + 1) % d
        if self.i == self.rotation:
            self.reflected[self.prev] = not self.reflected[self.prev]
            self.reflected[self.new_rotation] = not self.reflected[self.new_rotation]
            self.rotation = self.new_rotation
            self.i = self.rotation
            self.prev = (self.i - 1) % d
            self.new_rotation = self.prev
            self.level += 1
        return pr, qr


def inner_base(inner: Inner) -> int:
    if isinstance(inner, CurveSpec):
        return inner.base
    if inner in TERNARY_FAMILIES or inner in ("halfcoil", "half_coil"):
        return 3
    binary_tag(inner)
    return 2


def make_stream(inner: Inner, p_rows, q_rows) -> StreamingComparator:
    if isinstance(inner, CurveSpec):
        return GenericStream(inner, p_rows, q_rows)
    if inner_base(inner) == 3:
        return TernaryStream(inner, p_rows, q_rows)
    if binary_tag(inner) == "butz-moore":
        return ButzMooreStream(p_rows, q_rows)
    return HarmoniousStream(p_rows, q_rows)


def _split(p: Point, q: Point, inner: Inner):
    if p.dim != q.dim:
        raise SpecError("points differ in dimension")
    if p.dim % 2:
        raise SpecError("composed curves need an even number of coordinates")
    b = inner_base(inner)
    if p.base != b or q.base != b:
        raise SpecError(f"inner curve works in base {b}, points are base {p.base}/{q.base}")
    if isinstance(inner, CurveSpec) and inner.dim != p.dim // 2:
        raise SpecError("inner curve dimension must be half the point dimension")
    half = p.dim // 2
    P, Q = p.digit_rows(), q.digit_rows()
    return make_stream(inner, P[:half], Q[:half]), make_stream(inner, P[half:], Q[half:])


def _compare_over_h2(streams) -> bool:
    # the planar Hilbert comparator with rotation bookkeeping, drawing its
    # two coordinates from the inner streams instead of digit strings
    forward, rotation = True, 0
    reflected = [False, False]
    while not all(s.exhausted for s in streams):
        i = rotation
        prev = (i - 1) % 2
        new_rotation = prev
        while True:
            pd, qd = streams[i].next_digits()
            if reflected[i]:
                pd, qd = 1 - pd, 1 - qd
            if pd != qd:
                return (pd < qd) == forward
            if pd == 1:
                forward = not forward
                reflected[i] = not reflected[i]
                new_rotation = prev
            prev = i
            i = (i + 1) % 2
            if i == rotation:
                break
        reflected[prev] = not reflected[prev]
        reflected[new_rotation] = not reflected[new_rotation]
        rotation = new_rotation
    return False


def _compare_over_spec(streams, spec: CurveSpec) -> bool:
    b = spec.base
    perm, reflected = [0, 1], [False, False]
    while not all(s.exhausted for s in streams):
        ip = iq = 0
        for src in perm:
            pd, qd = streams[src].next_digits()
            if reflected[src]:
                pd, qd = b - 1 - pd, b - 1 - qd
            ip, iq = ip * b + pd, iq * b + qd
        rp, rq = spec._rank_at[ip], spec._rank_at[iq]
        if rp != rq:
            return rp < rq
        inv, m = spec.perms[rp].inverse, spec.reflections[rp]
        alt = [perm[j] for j in inv]
        for i, j in enumerate(inv):
            if m[j]:
                reflected[alt[i]] = not reflected[alt[i]]
        perm = alt
    return False


def compare_composed(p: Point, q: Point, inner: Inner, outer: str | None = None) -> bool:
    """True iff p precedes q on f' o h, h = h2 in base 2 and h3 in base 3."""
    streams = _split(p, q, inner)
    b = inner_base(inner)
    outer = outer or f"h{b}"
    if outer != f"h{b}":
        raise SpecError(f"outer curve {outer} does not match base {b}")
    if outer == "h2":
        return _compare_over_h2(streams)
    return _compare_over_spec(streams, make_h3())


# ---------------------------------------------------------------------------
# explicit rules for the composed curve

Transform = tuple[tuple[int, ...], tuple[int, ...]]


def _apply_to_cells(cells, transform: Transform, side: int):
    a, m = transform
    out = cells[:, list(a)].copy()
    for i, flip in enumerate(m):
        if flip:
            out[:, i] = side - 1 - out[:, i]
    return out


def check_symmetry(spec: CurveSpec, witness: Transform, depth: int = 2) -> bool:
    """Does ``witness`` map the curve onto itself traversed backwards?"""
    a, m = tuple(witness[0]), tuple(witness[1])
    if sorted(a) != list(range(spec.dim)) or len(m) != spec.dim:
        return False
    for level in range(1, depth + 1):
        cells = expand_order(spec, level)
        moved = _apply_to_cells(cells, (a, m), spec.base ** level)
        if not (moved == cells[::-1]).all():
            return False
    return True


def find_symmetry(spec: CurveSpec, depth: int = 2) -> Transform | None:
    """Search all rotations and reflections for a reversal symmetry."""
    d = spec.dim
    for a in itertools.permutations(range(d)):
        for m in itertools.product((0, 1), repeat=d):
            if check_symmetry(spec, (a, m), depth):
                return a, m
    return None


def refine(spec: CurveSpec, levels: int) -> list[tuple[tuple[int, ...], Transform]]:
    """Regions of ``levels`` nested levels, in order: cell and unit-cube transform."""
    regions = [((0,) * spec.dim, (tuple(range(spec.dim)), (0,) * spec.dim))]
    b = spec.base
    for _ in range(levels):
        nxt = []
        for loc, (a, m) in regions:
            for r in range(spec.size):
                c = spec.locations[r]
                sub = tuple(loc[i] * b + ((b - 1 - c[a[i]]) if m[i] else c[a[i]]) for i in range(spec.dim))
                nxt.append((sub, compose_transforms((a, m), spec.transform(r))))
        regions = nxt
    return regions


def derive_composed_spec(inner: CurveSpec, symmetry: Transform, depth: int = 2) -> CurveSpec:
    """Rule table of f' o h for an inner curve that is reversal-symmetric.

    ``symmetry`` is a rotation/reflection (perm, reflections) taking the
    inner curve onto itself backwards; it is checked before use.
    """
    if not check_symmetry(inner, symmetry, depth):
        raise SpecError(f"{symmetry} does not reverse {inner.name or 'the inner curve'}")
    half = inner.dim
    symmetry = (tuple(symmetry[0]), tuple(symmetry[1]))
    outer_regions = refine(driver(inner.base), half)
    locations, perms, reflections = [], [], []
    for cell, (a_h, m_h) in outer_regions:
        loc, perm, refl = [], [], []
        for k in range(2):
            r = cell[k]
            t = inner.transform(r)
            if m_h[k]:
                t = compose_transforms(t, symmetry)
            loc.extend(inner.locations[r])
            perm.extend(v + half * a_h[k] for v in t[0])
            refl.extend(t[1])
        locations.append(tuple(loc))
        perms.append(Permutation(tuple(perm)))
        reflections.append(tuple(refl))
    name = f"{inner.name or 'inner'}o{driver(inner.base).name}"
    return CurveSpec(2 * half, inner.base, tuple(locations), tuple(perms), tuple(reflections), name)


# ---------------------------------------------------------------------------
# rectangles


@dataclass(frozen=True)
class Rectangle:
    mins: tuple[Fraction, ...]
    maxs: tuple[Fraction, ...]

    def __post_init__(self):
        mins = tuple(Fraction(v) for v in self.mins)
        maxs = tuple(Fraction(v) for v in self.maxs)
        if len(mins) != len(maxs) or not mins:
            raise DigitError("rectangle needs matching min and max coordinates")
        if any(lo > hi for lo, hi in zip(mins, maxs)):
            raise DigitError("rectangle min exceeds max")
        object.__setattr__(self, "mins", mins)
        object.__setattr__(self, "maxs", maxs)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.mins + self.maxs)

    @classmethod
    def parse(cls, line: str) -> "Rectangle":
        """``xmin ymin ... xmax ymax ...`` as whitespace-separated decimals."""
        parts = line.split()
        if not parts or len(parts) % 2:
            raise DigitError(f"expected an even number of numbers, got {len(parts)}")
        try:
            vals = [Fraction(x) for x in parts]
        except (ValueError, ZeroDivisionError):
            raise DigitError(f"malformed rectangle {line.strip()!r}") from None
        n = len(vals) // 2
        return cls(tuple(vals[:n]), tuple(vals[n:]))


def rect_to_point(rect: Rectangle, mode: str = "xy", base: int = 2, precision: int = 20) -> Point:
    """xy: (mins..., maxs...); cd: (centres..., extents...)."""
    if mode == "xy":
        values = rect.mins + rect.maxs
    elif mode == "cd":
        values = tuple((lo + hi) / 2 for lo, hi in zip(rect.mins, rect.maxs)) + \
            tuple(hi - lo for lo, hi in zip(rect.mins, rect.maxs))
    else:
        raise SpecError(f"unknown rectangle mode {mode!r}")
    if any(v < 0 or v >= 1 for v in values):
        raise DigitError(f"rectangle {rect} maps outside [0, 1) in {mode} mode")
    return to_point(values, base, precision + 1)
