from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sfcurves.digits import (DigitError, DigitString, DimensionSelector, Point,
                             diaglift, extract, lift, parse_coordinate,
                             parse_number, parse_point, render_point, to_point)


def digit_strings(base, max_size=12):
    return st.lists(st.integers(0, base - 1), max_size=max_size).map(lambda ds: DigitString(base, tuple(ds)))


@pytest.mark.parametrize("base,text,head,tail", [
    (3, "102", 1, "02"),
    (3, "", 0, ""),
    (2, "1", 1, ""),
])
def test_extract(base, text, head, tail):
    digit, rest = extract(DigitString.from_str(text, base))
    assert digit == head
    assert str(rest) == tail


@given(st.sampled_from([2, 3]).flatmap(lambda b: st.tuples(st.integers(0, b - 1), digit_strings(b))))
def test_extract_undoes_prepend(pair):
    digit, s = pair
    assert extract(s.prepend(digit)) == (digit, s)


def test_digit_range_is_enforced():
    with pytest.raises(DigitError):
        DigitString(2, (0, 2))
    with pytest.raises(DigitError):
        DigitString(5, ())


def test_value_is_exact():
    assert DigitString.from_str("12", 3).value == Fraction(5, 9)
    assert DigitString.from_str("", 2).value == 0


def test_parse_point_decimal():
    p = parse_point("0.5,0.25", 2, precision=4)
    assert [str(c) for c in p.coords] == ["1000", "0100"]


def test_parse_point_explicit():
    p = parse_point("0.2101", 3, explicit=True)
    assert [str(c) for c in p.coords] == ["2101"]
    assert parse_point("0.2101_3", 3) == p
    assert parse_point("0.2101₃", 3) == p


@pytest.mark.parametrize("text", ["1.0", "-0.5", "0.5,", "", "abc", "0.3_2", "0.12_2"])
def test_parse_point_rejects(text):
    with pytest.raises(DigitError):
        parse_point(text, 2)


def test_decimals_are_truncated():
    # 1/3 in base 2 is 0.010101...; truncation keeps the digits, never rounds up
    assert str(parse_coordinate("0.3333333333", 2, precision=6)) == "010101"
    assert str(parse_coordinate("0.9999", 3, precision=3)) == "222"


def test_parse_number_signed_and_explicit():
    assert parse_number("-1.25", 2) == Fraction(-5, 4)
    assert parse_number("-12.2_3", 3) == Fraction(-17, 3)
    with pytest.raises(DigitError):
        parse_number("1.2_2", 2)


@given(st.sampled_from([2, 3]).flatmap(lambda b: st.lists(digit_strings(b), min_size=1, max_size=4)))
def test_render_parse_round_trip(coords):
    p = Point(tuple(coords))
    assert parse_point(render_point(p, suffix=True), p.base) == p


def test_point_invariants():
    with pytest.raises(DigitError):
        Point(())
    with pytest.raises(DigitError):
        Point((DigitString(2, (1,)), DigitString(3, (1,))))


def test_lift_examples():
    half = Point.from_digits([(1,)], 2)
    assert lift(half, DimensionSelector(1, 2, (1,))).values() == (0, Fraction(1, 2))
    a, b = DigitString(3, (1, 2)), DigitString(3, (2,))
    lifted = lift(Point((a, b)), DimensionSelector.prefix(2, 4))
    assert lifted.values() == (a.value, b.value, 0, 0)
    assert lift(Point((a,)), DimensionSelector(1, 3, (0,))).values() == (a.value, 0, 0)


def test_selector_must_increase():
    with pytest.raises(DigitError):
        DimensionSelector(2, 3, (1, 0))
    with pytest.raises(DigitError):
        DimensionSelector(2, 2, (0, 1))


@given(st.sampled_from([2, 3]).flatmap(lambda b: st.lists(digit_strings(b), min_size=1, max_size=3)),
       st.integers(1, 3))
def test_prefix_lift_then_drop_recovers_point(coords, extra):
    p = Point(tuple(coords))
    lifted = lift(p, DimensionSelector.prefix(p.dim, p.dim + extra))
    assert Point(lifted.coords[:p.dim]) == p
    assert all(v == 0 for v in lifted.values()[p.dim:])


@given(st.sampled_from([2, 3]).flatmap(lambda b: st.lists(digit_strings(b), min_size=1, max_size=3)))
def test_diaglift_halves_agree(coords):
    p = Point(tuple(coords))
    values = diaglift(p).values()
    assert values[:p.dim] == values[p.dim:] == p.values()


def test_diaglift_example():
    p = Point.from_digits([(1,)], 2)
    assert diaglift(p).values() == (Fraction(1, 2), Fraction(1, 2))


def test_to_point_is_exact_when_possible():
    p = to_point([Fraction(1, 4), Fraction(1, 3)], 2, precision=6)
    assert str(p.coords[0]) == "01"
    assert str(p.coords[1]) == "010101"
