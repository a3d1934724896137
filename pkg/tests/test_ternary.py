from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import points_in_order
from sfcurves.curvespec import compare_generic, emit_table, expand_order, format_table
from sfcurves.digits import DigitError, Point, to_point
from sfcurves.ternary import (FAMILIES, compare_ternary, compare_ternary_nonneg,
                              compare_ternary_signed, make_ternary)

GOLDEN = Path(__file__).parent / "golden"


def digits(text):
    return tuple(int(ch) for ch in text)


@pytest.mark.parametrize("family", FAMILIES)
def test_golden_table(family):
    table = format_table(emit_table(make_ternary(family, 3)))
    assert table == (GOLDEN / f"{family}_3.tsv").read_text()


def test_meurthe_rows():
    spec = make_ternary("meurthe", 3)
    r = int("020", 3)
    assert spec.perms[r].forward == digits("120")
    assert spec.perms[r].inverse == digits("201")
    assert spec.reflections[r] == (0, 0, 0)
    assert spec.perms[int("222", 3)].forward == (0, 1, 2)


@pytest.mark.parametrize("family", FAMILIES)
def test_reflections_follow_digit_sum(family):
    assert make_ternary(family, 3).reflections[1] == (1, 1, 0)


def test_meurthe_permutations_are_not_all_involutions():
    spec = make_ternary("meurthe", 3)
    not_involutions = {r for r in range(27) if spec.perms[r].forward != spec.perms[r].inverse}
    assert not_involutions == {int(x, 3) for x in ("020", "021", "120", "121", "220", "221")}


def pt(text):
    return Point.from_digits([digits(part) for part in text.split(",")], 3)


def test_compare_examples():
    assert compare_ternary(pt("0,2"), pt("1,2"), "peano")
    p = pt("012,2")
    assert not compare_ternary(p, p, "coil")
    spec = make_ternary("meurthe", 3)
    cells = points_in_order(expand_order(spec, 1), 3, 1)
    assert not compare_ternary(cells[5], cells[4], "meurthe")
    assert compare_ternary(cells[4], cells[5], "meurthe")


def ternary_point(d, max_len=6):
    row = st.lists(st.integers(0, 2), max_size=max_len).map(tuple)
    return st.lists(row, min_size=d, max_size=d).map(lambda rows: Point.from_digits(rows, 3))


@given(st.sampled_from(FAMILIES), st.integers(1, 4).flatmap(lambda d: st.tuples(ternary_point(d), ternary_point(d))))
def test_specialised_matches_generic(family, pair):
    p, q = pair
    spec = make_ternary(family, p.dim)
    assert compare_ternary(p, q, family) == compare_generic(p, q, spec)


@given(st.sampled_from(FAMILIES), st.integers(1, 3).flatmap(lambda d: st.tuples(ternary_point(d), ternary_point(d))))
def test_nonneg_agrees_inside_unit_cube(family, pair):
    p, q = pair
    assert compare_ternary_nonneg(p, q, family) == compare_ternary(p, q, family)


def test_nonneg_examples():
    for family in FAMILIES:
        origin = [Fraction(0)] * 2
        assert compare_ternary_nonneg(origin, [Fraction(5), Fraction(1, 3)], family)
        assert not compare_ternary_nonneg([Fraction(5), Fraction(1, 3)], origin, family)
        p, q = [Fraction(1), Fraction(1, 2)], [Fraction(2), Fraction(1, 2)]
        shrunk = [to_point([v / 9 for v in x], 3, 20) for x in (p, q)]
        assert compare_ternary_nonneg(p, q, family) == compare_ternary(*shrunk, family)
    with pytest.raises(DigitError):
        compare_ternary_nonneg([Fraction(-1)], [Fraction(0)], "peano")


def test_signed_example():
    p, q = [Fraction(-1), Fraction(0)], [Fraction(0), Fraction(0)]
    moved = [to_point([(v + 20) / 81 for v in x], 3, 24) for x in (p, q)]
    assert compare_ternary_signed(p, q, "peano") == compare_ternary(*moved, "peano")
    assert not compare_ternary_signed(p, p, "peano")


def signed_value():
    return st.builds(lambda whole, frac: whole + Fraction(frac, 3 ** 5),
                     st.integers(-100, 100), st.integers(0, 3 ** 5 - 1))


@given(st.sampled_from(FAMILIES),
       st.lists(signed_value(), min_size=2, max_size=2),
       st.lists(signed_value(), min_size=2, max_size=2),
       st.lists(signed_value(), min_size=2, max_size=2))
def test_signed_comparison_is_a_strict_total_order(family, p, q, r):
    less = lambda a, b: compare_ternary_signed(a, b, family)
    assert not less(p, p)
    assert not (less(p, q) and less(q, p))
    if p != q:
        assert less(p, q) or less(q, p)
    if less(p, q) and less(q, r):
        assert less(p, r)
