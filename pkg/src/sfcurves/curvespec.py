"""Table-driven order-preserving mono-curves and the generic comparator.

A curve of dimension d in base b is described by one row per rank r in
0..b^d-1: the location c(r) of subregion S(r), the permutation a(r) (axis
a_i(r) of the unit-cube curve ends up on axis i) and reflection bits m(r).
The subregion map is

    tau(r)(x)_i = (c_i(r) + (1 - x[a_i] if m_i else x[a_i])) / b

so the translation is fixed by the corner of S(r) that the reflected unit
cube lands on and never has to be given separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .digits import Point
from .graycode import Digits, from_digits, to_digits

CellPath = tuple[int, ...]

MAX_CELLS = 1 << 24


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Axis permutation; ``forward[i]`` is the source axis placed on axis i."""

    forward: tuple[int, ...]
    inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fwd = tuple(int(v) for v in self.forward)
        if sorted(fwd) != list(range(len(fwd))):
            raise SpecError(f"{fwd} is not a permutation")
        inv = [0] * len(fwd)
        for i, v in enumerate(fwd):
            inv[v] = i
        object.__setattr__(self, "forward", fwd)
        object.__setattr__(self, "inverse", tuple(inv))

    @classmethod
    def from_inverse(cls, inv: Sequence[int]) -> "Permutation":
        fwd = [0] * len(inv)
        for i, v in enumerate(inv):
            fwd[v] = i
        return cls(tuple(fwd))

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    @property
    def d(self) -> int:
        return len(self.forward)

    def __str__(self) -> str:
        return "".join(map(str, self.forward))


def compose_transforms(outer: tuple[Sequence[int], Sequence[int]],
                       inner: tuple[Sequence[int], Sequence[int]]) -> tuple[Digits, Digits]:
    """(perm, reflections) of ``outer`` applied after ``inner`` on the unit cube."""
    a_out, m_out = outer
    a_in, m_in = inner
    a = tuple(a_in[j] for j in a_out)
    m = tuple(m_out[i] ^ m_in[a_out[i]] for i in range(len(a_out)))
    return a, m


@dataclass(frozen=True)
class CurveSpec:
    dim: int
    base: int
    locations: tuple[Digits, ...]
    perms: tuple[Permutation, ...]
    reflections: tuple[Digits, ...]
    name: str = ""

    def __post_init__(self):
        d, b = self.dim, self.base
        if b not in (2, 3) or d < 1:
            raise SpecError(f"unsupported base/dimension {b}/{d}")
        n = b ** d
        locs = tuple(tuple(int(x) for x in c) for c in self.locations)
        refl = tuple(tuple(int(x) for x in m) for m in self.reflections)
        perms = tuple(p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in self.perms)
        if not (len(locs) == len(perms) == len(refl) == n):
            raise SpecError(f"expected {n} rows")
        lookup = [-1] * n
        for r, c in enumerate(locs):
            if len(c) != d or any(not 0 <= x < b for x in c):
                raise SpecError(f"bad location {c} for rank {r}")
            k = from_digits(c, b)
            if lookup[k] >= 0:
                raise SpecError(f"location {c} used twice")
            lookup[k] = r
        for r in range(n):
            if perms[r].d != d or len(refl[r]) != d or any(x not in (0, 1) for x in refl[r]):
                raise SpecError(f"bad permutation or reflections for rank {r}")
        object.__setattr__(self, "locations", locs)
        object.__setattr__(self, "reflections", refl)
        object.__setattr__(self, "perms", perms)
        object.__setattr__(self, "_rank_at", tuple(lookup))

    @classmethod
    def from_rules(cls, dim: int, base: int,
                   location: Callable[[Digits], Sequence[int]],
                   permutation: Callable[[Digits], Permutation],
                   reflections: Callable[[Digits], Sequence[int]],
                   name: str = "") -> "CurveSpec":
        ranks = [to_digits(r, base, dim) for r in range(base ** dim)]
        return cls(dim, base,
                   tuple(tuple(location(r)) for r in ranks),
                   tuple(permutation(r) for r in ranks),
                   tuple(tuple(reflections(r)) for r in ranks),
                   name)

    @property
    def size(self) -> int:
        return self.base ** self.dim

    def rank_at(self, location: Sequence[int]) -> int:
        return self._rank_at[from_digits(location, self.base)]

    def rank_digits(self, r: int) -> Digits:
        return to_digits(r, self.base, self.dim)

    def transform(self, r: int) -> tuple[Digits, Digits]:
        return self.perms[r].forward, self.reflections[r]

    def tau(self, r: int, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Map a point of the unit cube into subregion S(r)."""
        a, m, c, b = self.perms[r].forward, self.reflections[r], self.locations[r], self.base
        return tuple(Fraction(c[i] + (1 - x[a[i]] if m[i] else x[a[i]]), b) for i in range(self.dim))


class ComparatorState:
    """Which source coordinate feeds each logical axis and which are mirrored."""

    __slots__ = ("permutation", "reflected", "forward")

    def __init__(self, d: int):
        self.permutation = list(range(d))
        self.reflected = [False] * d
        self.forward = True

    def descend(self, spec: CurveSpec, r: int) -> None:
        inv = spec.perms[r].inverse
        m = spec.reflections[r]
        perm = self.permutation
        alt = [perm[j] for j in inv]
        for i, j in enumerate(inv):
            if m[j]:
                self.reflected[alt[i]] = not self.reflected[alt[i]]
        self.permutation = alt


def _rows(p: Point, spec: CurveSpec):
    if p.dim != spec.dim or p.base != spec.base:
        raise SpecError(f"point of dim {p.dim} base {p.base} does not fit curve "
                        f"of dim {spec.dim} base {spec.base}")
    return p.digit_rows()


def _location_index(rows, k, state: ComparatorState, b: int) -> int:
    idx = 0
    for src in state.permutation:
        row = rows[src]
        x = row[k] if k < len(row) else 0
        if state.reflected[src]:
            x = b - 1 - x
        idx = idx * b + x
    return idx


def compare_generic(p: Point, q: Point, spec: CurveSpec) -> bool:
    """True iff p comes strictly before q along the curve."""
    P, Q = _rows(p, spec), _rows(q, spec)
    b, rank_at = spec.base, spec._rank_at
    state = ComparatorState(spec.dim)
    depth = max(len(r) for r in P + Q)
    for k in range(depth):
        rp = rank_at[_location_index(P, k, state, b)]
        rq = rank_at[_location_index(Q, k, state, b)]
        if rp != rq:
            return rp < rq
        state.descend(spec, rp)
    return False


def rank_path(p: Point, spec: CurveSpec, depth: int) -> CellPath:
    """Ranks of the nested cells containing p, ties going up and right."""
    P = _rows(p, spec)
    state = ComparatorState(spec.dim)
    out = []
    for k in range(depth):
        r = spec._rank_at[_location_index(P, k, state, spec.base)]
        out.append(r)
        state.descend(spec, r)
    return tuple(out)


def expand_order(spec: CurveSpec, depth: int, max_cells: int = MAX_CELLS) -> np.ndarray:
    """All cells of the depth-``depth`` grid in curve order.

    Built by applying the subregion maps literally: the order at depth l is,
    for each rank r, the order at depth l-1 pushed through tau(r). Returns an
    int array of shape (b^(d*depth), d) of integer cell coordinates.
    """
    d, b = spec.dim, spec.base
    if depth < 0:
        raise SpecError("depth must be non-negative")
    if b ** (d * depth) > max_cells:
        raise SpecError(f"{b ** (d * depth)} cells exceed the limit of {max_cells}")
    cells = np.zeros((1, d), dtype=np.int64)
    for level in range(depth):
        side = b ** level
        blocks = []
        for r in range(spec.size):
            a = list(spec.perms[r].forward)
            m = np.array(spec.reflections[r], dtype=bool)
            moved = cells[:, a]
            moved = np.where(m, side - 1 - moved, moved)
            blocks.append(moved + np.array(spec.locations[r], dtype=np.int64) * side)
        cells = np.concatenate(blocks)
    return cells


def cell_point(cell: Sequence[int], base: int, depth: int) -> Point:
    """An interior point of a grid cell: its digits followed by a 1."""
    return Point.trusted([to_digits(int(x), base, depth) + (1,) for x in cell], base)


def cell_points(cells: np.ndarray, base: int, depth: int) -> list[Point]:
    """:func:`cell_point` for a whole array of cells at once."""
    cells = np.asarray(cells, dtype=np.int64)
    n, d = cells.shape
    digits = np.empty((n, d, depth + 1), dtype=np.int64)
    rest = cells.copy()
    for k in range(depth - 1, -1, -1):
        rest, digits[:, :, k] = np.divmod(rest, base)
    digits[:, :, depth] = 1
    return [Point.trusted([tuple(row) for row in cell], base) for cell in digits.tolist()]


def fixed_point(spec: CurveSpec, r: int) -> tuple[Fraction, ...]:
    """The unique point with tau(r)(g) = g, solved exactly cycle by cycle."""
    a, m, c, b = spec.perms[r].forward, spec.reflections[r], spec.locations[r], spec.base
    d = spec.dim
    # g_i = s_i/b * g_{a_i} + o_i with s_i = -1 and o_i = (c_i+1)/b when mirrored
    s = [Fraction(-1 if m[i] else 1, b) for i in range(d)]
    o = [Fraction(c[i] + m[i], b) for i in range(d)]
    g: list[Fraction | None] = [None] * d
    for start in range(d):
        if g[start] is not None:
            continue
        cycle = [start]
        while a[cycle[-1]] != start:
            cycle.append(a[cycle[-1]])
        acc, gain = Fraction(0), Fraction(1)
        for i in cycle:
            acc += gain * o[i]
            gain *= s[i]
        g[start] = acc / (1 - gain)
        # walk back along the cycle, each g_i depends on g_{a_i}
        for i in reversed(cycle[1:]):
            g[i] = s[i] * g[a[i]] + o[i]
    return tuple(g)


def gates(spec: CurveSpec) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Entrance and exit of the whole curve.

    The first cell at every depth is tau(0) applied repeatedly to the unit
    cube, so the entrance is the fixed point of tau(0); likewise for the exit
    with the last rank.
    """
    return fixed_point(spec, 0), fixed_point(spec, spec.size - 1)


def subregion_gates(spec: CurveSpec, r: int):
    entrance, exit_ = gates(spec)
    return spec.tau(r, entrance), spec.tau(r, exit_)


class TableRow(NamedTuple):
    rank: str
    location: str
    permutation: str
    inverse: str
    reflections: str
    exit: str


def _format_gate(x: Sequence[Fraction], b: int) -> str:
    parts = []
    for v in x:
        v = v * b
        parts.append(str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}")
    return f"1/{b}(" + ",".join(parts) + ")"


def emit_table(spec: CurveSpec) -> list[TableRow]:
    _, exit_ = gates(spec)
    rows = []
    for r in range(spec.size):
        digits = lambda xs: "".join(map(str, xs))
        rows.append(TableRow(
            digits(spec.rank_digits(r)),
            digits(spec.locations[r]),
            str(spec.perms[r]),
            digits(spec.perms[r].inverse),
            digits(spec.reflections[r]),
            _format_gate(spec.tau(r, exit_), spec.base),
        ))
    return rows


def format_table(rows: Sequence[TableRow], columns: Sequence[str] | None = None) -> str:
    columns = list(columns or TableRow._fields)
    lines = ["\t".join(columns)]
    for row in rows:
        lines.append("\t".join(getattr(row, c) for c in columns))
    return "\n".join(lines) + "\n"


def parse_table(text: str, base: int, name: str = "") -> CurveSpec:
    """Read a table written by :func:`format_table` back into a spec."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].split("\t")
    rows = [dict(zip(header, ln.split("\t"))) for ln in lines[1:]]
    rows.sort(key=lambda row: row["rank"])
    dim = len(rows[0]["rank"])
    if "permutation" in header:
        perms = tuple(Permutation(tuple(int(ch) for ch in row["permutation"])) for row in rows)
    else:
        perms = tuple(Permutation.from_inverse(tuple(int(ch) for ch in row["inverse"])) for row in rows)
    return CurveSpec(dim, base,
                     tuple(tuple(int(ch) for ch in row["location"]) for row in rows),
                     perms,
                     tuple(tuple(int(ch) for ch in row["reflections"]) for row in rows),
                     name)
