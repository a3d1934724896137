"""Property checkers on cell orders.

Everything here works on the scanning order of grid cells produced by
:func:`expand_order`: which cells a face of the cube sees and in what
order, whether consecutive cells touch, whether a segment is crossed in
increasing order, and whether the permutations can reach every
orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .curvespec import CurveSpec, SpecError, expand_order


@dataclass(frozen=True)
class Face:
    """Face of the unit cube where coordinate ``axis`` is 0 (side 0) or 1."""

    axis: int
    side: int

    def __post_init__(self):
        if self.axis < 0 or self.side not in (0, 1):
            raise SpecError(f"bad face {self.axis}:{self.side}")

    @classmethod
    def parse(cls, text: str) -> "Face":
        try:
            axis, side = (int(x) for x in text.split(":"))
        except ValueError:
            raise SpecError(f"face must look like i:k, got {text!r}") from None
        return cls(axis, side)

    def __str__(self) -> str:
        return f"{self.axis}:{self.side}"


@dataclass
class CheckResult:
    passed: bool
    witness: object = None
    detail: str = ""


def visible_order(spec: CurveSpec, face: Face, depth: int) -> np.ndarray:
    if face.axis >= spec.dim:
        raise SpecError(f"face axis {face.axis} out of range for dimension {spec.dim}")
    cells = expand_order(spec, depth)
    edge = 0 if face.side == 0 else spec.base ** depth - 1
    keep = cells[:, face.axis] == edge
    return np.delete(cells[keep], face.axis, axis=1)


def check_shows(spec: CurveSpec, lower: CurveSpec, face: Face, depth: int,
                mirror_axis: int | None = None) -> CheckResult:
    """Does ``face`` of ``spec`` show ``lower`` (optionally mirrored in one axis)?

    On failure the witness is ``(index, seen_cell, expected_cell)`` for the
    first position where the two cell orders part ways.
    """
    if lower.dim != spec.dim - 1 or lower.base != spec.base:
        raise SpecError("the lower curve must have one dimension less and the same base")
    seen = visible_order(spec, face, depth)
    expected = expand_order(lower, depth)
    if mirror_axis is not None:
        expected = expected.copy()
        expected[:, mirror_axis] = spec.base ** depth - 1 - expected[:, mirror_axis]
    differ = np.flatnonzero(np.any(seen != expected, axis=1))
    if differ.size == 0:
        return CheckResult(True)
    i = int(differ[0])
    return CheckResult(False, (i, tuple(int(x) for x in seen[i]), tuple(int(x) for x in expected[i])))


@dataclass
class ConsistencyEntry:
    face: Face
    depth: int
    mirror_axis: int | None
    result: CheckResult

    @property
    def transform(self) -> str:
        return "identity" if self.mirror_axis is None else f"mirror-{self.mirror_axis}"


@dataclass
class ConsistencyReport:
    entries: list[ConsistencyEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.result.passed for e in self.entries)

    def failures(self) -> list[ConsistencyEntry]:
        return [e for e in self.entries if not e.result.passed]


def check_consistency(spec: CurveSpec, lower: CurveSpec, depth: int,
                      faces: Sequence[tuple[Face, int | None]]) -> ConsistencyReport:
    report = ConsistencyReport()
    for face, mirror in faces:
        report.entries.append(ConsistencyEntry(face, depth, mirror, check_shows(spec, lower, face, depth, mirror)))
    return report


def check_vertex_continuity(spec: CurveSpec, depth: int) -> CheckResult:
    cells = expand_order(spec, depth)
    if len(cells) < 2:
        return CheckResult(True)
    jumps = np.abs(np.diff(cells, axis=0)).max(axis=1)
    bad = np.flatnonzero(jumps > 1)
    if bad.size == 0:
        return CheckResult(True)
    i = int(bad[0])
    return CheckResult(False, (i, tuple(int(x) for x in cells[i]), tuple(int(x) for x in cells[i + 1])))


@dataclass
class OrientationResult:
    closure_depth: int | None
    sizes: list[int]
    cycle: tuple[int, int] | None = None
    reachable: frozenset = frozenset()

    @property
    def neutral(self) -> bool:
        return self.closure_depth is not None


def check_neutral_orientation(spec: CurveSpec, max_depth: int = 64) -> OrientationResult:
    """Smallest k such that products of exactly k permutations give all d!.

    When the sequence of reachable sets starts repeating before that, the
    curve cannot be neutral and the repeating window is reported.
    """
    d = spec.dim
    if d > 7:
        raise SpecError("orientation closure is limited to d <= 7")
    total = math.factorial(d)
    gens = {p.forward for p in spec.perms}
    current = frozenset(gens)
    history = {current: 1}
    sizes = [len(current)]
    for k in range(1, max_depth + 1):
        if len(current) == total:
            return OrientationResult(k, sizes, reachable=current)
        if k == max_depth:
            break
        current = frozenset(tuple(s[g[i]] for i in range(d)) for s in current for g in gens)
        sizes.append(len(current))
        if current in history and len(current) != total:
            return OrientationResult(None, sizes, (history[current], k + 1), current)
        history.setdefault(current, k + 1)
    return OrientationResult(None, sizes, reachable=current)


def _segment_cells(start: Sequence[int], end: Sequence[int], n: int) -> list[tuple[int, int]]:
    start, end = tuple(start), tuple(end)
    corners = {(0, 0), (0, 1), (1, 0), (1, 1)}
    if start not in corners or end not in corners or start == end:
        raise SpecError(f"unsupported segment {start} -> {end}")
    steps = range(n)
    if {start, end} == {(0, 0), (1, 1)}:
        cells = [(k, k) for k in steps]
    elif start[0] == end[0]:
        x = 0 if start[0] == 0 else n - 1
        cells = [(x, k) for k in steps]
    elif start[1] == end[1]:
        y = 0 if start[1] == 0 else n - 1
        cells = [(k, y) for k in steps]
    else:
        raise SpecError(f"unsupported segment {start} -> {end}")
    # cells run from the low corner; flip when the segment starts high
    if start > end:
        cells.reverse()
    return cells


def check_monotone(spec: CurveSpec, start: Sequence[int], end: Sequence[int], depth: int) -> CheckResult:
    """Are the cells along an edge or the rising diagonal visited in order?"""
    if spec.dim != 2:
        raise SpecError("monotonicity is checked for planar curves only")
    n = spec.base ** depth
    cells = expand_order(spec, depth)
    position = np.empty(n * n, dtype=np.int64)
    position[cells[:, 0] * n + cells[:, 1]] = np.arange(len(cells))
    along = _segment_cells(start, end, n)
    order = [int(position[x * n + y]) for x, y in along]
    for i in range(1, len(order)):
        if order[i] <= order[i - 1]:
            return CheckResult(False, (along[i - 1], along[i], order[i - 1], order[i]))
    return CheckResult(True)
