"""Reflected Gray codes in base 2 and 3, plus digit editing helpers.

Numbers are fixed-width digit tuples, most significant digit first.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Digits = tuple[int, ...]


def rgc_encode(r: Sequence[int], base: int) -> Digits:
    """Gray code of ``r``: every odd digit reflects all digits after it.

    The parity test applies to the digit as it reads after the reflections
    so far. In base 3 reflection keeps parity, in base 2 it does not.
    """
    out = []
    flip = False
    for x in r:
        y = base - 1 - x if flip else x
        out.append(y)
        if y % 2:
            flip = not flip
    return tuple(out)


def rgc_decode(c: Sequence[int], base: int) -> Digits:
    """Inverse of :func:`rgc_encode`, one pass left to right."""
    out = []
    forward = True
    for x in c:
        out.append(x if forward else base - 1 - x)
        if x % 2:
            forward = not forward
    return tuple(out)


def to_digits(n: int, base: int, width: int) -> Digits:
    out = [0] * width
    for i in range(width - 1, -1, -1):
        n, out[i] = divmod(n, base)
    if n:
        raise ValueError(f"value does not fit in {width} digits")
    return tuple(out)


def from_digits(x: Iterable[int], base: int) -> int:
    n = 0
    for v in x:
        n = n * base + v
    return n


def _check_index(x: Sequence, i: int) -> None:
    if not 0 <= i < len(x):
        raise IndexError(f"index {i} out of range for length {len(x)}")


def take_out(x: Sequence[int], i: int) -> Digits:
    """Drop digit ``i``."""
    _check_index(x, i)
    return tuple(x[:i]) + tuple(x[i + 1:])


def take_out_permutation(a: Sequence[int], i: int) -> Digits:
    """Drop element ``i`` of a permutation and renumber the rest."""
    _check_index(a, i)
    gone = a[i]
    return tuple(v - (v > gone) for k, v in enumerate(a) if k != i)


def insert(x: Sequence[int], i: int, j: int) -> Digits:
    """Insert digit ``j`` so that it becomes digit ``i``."""
    if not 0 <= i <= len(x):
        raise IndexError(f"insert position {i} out of range for length {len(x)}")
    return tuple(x[:i]) + (j,) + tuple(x[i:])


def mirror_digit(x: Sequence[int], i: int, base: int) -> Digits:
    _check_index(x, i)
    out = list(x)
    out[i] = base - 1 - out[i]
    return tuple(out)


def reduce(seq: Iterable[Sequence[int]], i: int, j: int) -> list[Digits]:
    """Keep the numbers whose digit ``i`` equals ``j``, minus that digit."""
    return [take_out(x, i) for x in seq if x[i] == j]
