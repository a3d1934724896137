"""Finite base-b digit strings and points built from them.

A coordinate in [0, 1) is stored as the digits of its fractional part,
most significant first. Missing digits read as zero, so strings of
different length compare as if padded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

BASES = (2, 3)

_SUBSCRIPTS = {"₂": "2", "₃": "3"}
_EXPLICIT = re.compile(r"^(-?)([0-9]*)\.([0-9]*)_([23])$")
_DECIMAL = re.compile(r"^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)$")


class DigitError(ValueError):
    """Raised for malformed or out-of-range coordinates."""


def _check_base(base: int) -> None:
    if base not in BASES:
        raise DigitError(f"base must be 2 or 3, got {base}")


@dataclass(frozen=True)
class DigitString:
    base: int
    digits: tuple[int, ...] = ()

    def __post_init__(self):
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(int(x) for x in self.digits))
        for x in self.digits:
            if not 0 <= x < self.base:
                raise DigitError(f"digit {x} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(map(str, self.digits))

    @property
    def value(self) -> Fraction:
        v = Fraction(0)
        for x in reversed(self.digits):
            v = (v + x) / self.base
        return v

    @classmethod
    def trusted(cls, base: int, digits: tuple[int, ...]) -> "DigitString":
        """Skip validation; for digits produced by this package itself."""
        obj = object.__new__(cls)
        obj.__dict__.update(base=base, digits=digits)
        return obj

    def prepend(self, digit: int) -> "DigitString":
        return DigitString(self.base, (digit,) + self.digits)

    @classmethod
    def from_str(cls, text: str, base: int) -> "DigitString":
        if not text.isdigit() and text != "":
            raise DigitError(f"not a digit string: {text!r}")
        return cls(base, tuple(int(ch) for ch in text))

    @classmethod
    def from_fraction(cls, x, base: int, precision: int = 20) -> "DigitString":
        """Digits of ``x`` in [0, 1), truncated to ``precision`` digits.

        Values whose expansion terminates within ``precision`` digits are
        reproduced exactly; the result always has ``precision`` digits.
        """
        x = Fraction(x)
        if x < 0 or x >= 1:
            raise DigitError(f"coordinate {x} outside [0, 1)")
        out = []
        for _ in range(precision):
            x *= base
            d = int(x)
            out.append(d)
            x -= d
        return cls(base, tuple(out))


def extract(s: DigitString) -> tuple[int, DigitString]:
    """Split off the leading digit; an exhausted string yields 0."""
    if not s.digits:
        return 0, s
    return s.digits[0], DigitString(s.base, s.digits[1:])


@dataclass(frozen=True)
class Point:
    coords: tuple[DigitString, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise DigitError("a point needs at least one coordinate")
        if len({c.base for c in coords}) != 1:
            raise DigitError("mixed bases in one point")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def base(self) -> int:
        return self.coords[0].base

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(c.value for c in self.coords)

    def digit_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.digits for c in self.coords)

    @classmethod
    def from_digits(cls, rows: Iterable[Sequence[int]], base: int) -> "Point":
        return cls(tuple(DigitString(base, tuple(r)) for r in rows))

    @classmethod
    def trusted(cls, rows: Iterable[tuple[int, ...]], base: int) -> "Point":
        obj = object.__new__(cls)
        obj.__dict__["coords"] = tuple(DigitString.trusted(base, r) for r in rows)
        return obj

    @classmethod
    def from_values(cls, values: Iterable, base: int, precision: int = 20) -> "Point":
        return cls(tuple(DigitString.from_fraction(v, base, precision) for v in values))


def _normalise(token: str) -> str:
    token = token.strip()
    for sub, plain in _SUBSCRIPTS.items():
        token = token.replace(sub, "_" + plain)
    return token


def parse_number(token: str, base: int) -> Fraction:
    """Parse a signed coordinate with an optional integer part.

    ``token`` is either a decimal (``-1.25``) or an explicit base-b digit
    string carrying a base suffix (``-12.201_3``). The result is exact.
    """
    _check_base(base)
    token = _normalise(token)
    m = _EXPLICIT.match(token)
    if m:
        sign, whole, frac, b = m.groups()
        if int(b) != base:
            raise DigitError(f"coordinate {token!r} is base {b}, expected base {base}")
        if any(int(ch) >= base for ch in whole + frac):
            raise DigitError(f"digit out of range in {token!r}")
        v = Fraction(int(whole, base) if whole else 0)
        v += DigitString.from_str(frac, base).value
        return -v if sign else v
    if _DECIMAL.match(token):
        return Fraction(token)
    raise DigitError(f"malformed coordinate {token!r}")


def parse_coordinate(token: str, base: int, precision: int = 20, explicit: bool = False) -> DigitString:
    """Parse one coordinate in [0, 1).

    A token with a base suffix (``0.2101_3`` or ``0.2101₃``) is an explicit
    digit string and is kept verbatim; with ``explicit=True`` an unsuffixed
    ``0.xxx`` token is read the same way. Anything else is a decimal,
    truncated to ``precision`` digits.
    """
    _check_base(base)
    token = _normalise(token)
    if explicit and "_" not in token:
        token = token + f"_{base}"
    m = _EXPLICIT.match(token)
    if m:
        sign, whole, frac, b = m.groups()
        if int(b) != base:
            raise DigitError(f"coordinate {token!r} is base {b}, expected base {base}")
        if sign or whole not in ("", "0"):
            raise DigitError(f"coordinate {token!r} outside [0, 1)")
        return DigitString.from_str(frac, base)
    if not _DECIMAL.match(token):
        raise DigitError(f"malformed coordinate {token!r}")
    v = Fraction(token)
    if v < 0 or v >= 1:
        raise DigitError(f"coordinate {token!r} outside [0, 1)")
    return DigitString.from_fraction(v, base, precision)


def parse_point(text: str, base: int, precision: int = 20, explicit: bool = False) -> Point:
    tokens = [t for t in text.split(",")]
    if not text.strip() or any(not t.strip() for t in tokens):
        raise DigitError(f"malformed point {text!r}")
    return Point(tuple(parse_coordinate(t, base, precision, explicit) for t in tokens))


def render_point(p: Point, suffix: bool = False) -> str:
    tail = f"_{p.base}" if suffix else ""
    return ",".join(f"0.{c}{tail}" for c in p.coords)


@dataclass(frozen=True)
class DimensionSelector:
    """Strictly increasing embedding of d_from axes into d_to axes."""

    d_from: int
    d_to: int
    mu: tuple[int, ...]

    def __post_init__(self):
        mu = tuple(self.mu)
        object.__setattr__(self, "mu", mu)
        if len(mu) != self.d_from or self.d_to <= self.d_from:
            raise DigitError("selector needs d_from entries and d_to > d_from")
        if any(b <= a for a, b in zip(mu, mu[1:])) or (mu and (mu[0] < 0 or mu[-1] >= self.d_to)):
            raise DigitError(f"selector {mu} is not strictly increasing into 0..{self.d_to - 1}")

    @classmethod
    def prefix(cls, d_from: int, d_to: int) -> "DimensionSelector":
        return cls(d_from, d_to, tuple(range(d_from)))


def lift(p: Point, sel: DimensionSelector) -> Point:
    if p.dim != sel.d_from:
        raise DigitError(f"point has {p.dim} coordinates, selector expects {sel.d_from}")
    coords = [DigitString(p.base)] * sel.d_to
    for i, j in enumerate(sel.mu):
        coords[j] = p.coords[i]
    return Point(tuple(coords))


def diaglift(p: Point) -> Point:
    return Point(p.coords + p.coords)


def exact_length(x, base: int, cap: int = 4096) -> int | None:
    """Digits needed to write the fractional part of ``x`` exactly, if finite."""
    x = Fraction(x)
    den = x.denominator
    k = 0
    while den % base == 0 and k < cap:
        den //= base
        k += 1
    return k if den == 1 else None


def as_values(p) -> tuple[Fraction, ...]:
    """Exact coordinate values of a Point or of a sequence of numbers/strings."""
    if isinstance(p, Point):
        return p.values()
    return tuple(Fraction(v) for v in p)


def to_point(values: Sequence[Fraction], base: int, precision: int) -> Point:
    """Digit strings for values in [0, 1), exact when they terminate within reach."""
    coords = []
    for v in values:
        n = exact_length(v, base)
        coords.append(DigitString.from_fraction(v, base, n if n is not None and n <= precision else precision))
    return Point(tuple(coords))
