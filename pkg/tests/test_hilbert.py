from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import compare_hilbert_per_level, neighbour_gate_chain, points_in_order
from sfcurves.curvespec import compare_generic, compose_transforms, emit_table, expand_order, format_table
from sfcurves.digits import DigitError, Point, to_point
from sfcurves.hilbert import (FAMILIES, butzmoore_inconsistency_witness,
                              compare_binary, compare_binary_nonneg,
                              entry_axis, make_standard_hilbert, zoom_factor)
from sfcurves.verify import Face

GOLDEN = Path(__file__).parent / "golden"


def digits(text):
    return tuple(int(ch) for ch in text)


@pytest.mark.parametrize("family", FAMILIES)
def test_golden_table(family):
    table = format_table(emit_table(make_standard_hilbert(family, 5)))
    assert table == (GOLDEN / f"{family}_5.tsv").read_text()


def test_rule_examples():
    harmonious = make_standard_hilbert("harmonious", 5)
    assert harmonious.perms[1].forward == digits("32104")
    butz = make_standard_hilbert("butz-moore", 5)
    assert butz.perms[0].forward == digits("12340")
    assert butz.perms[0].inverse == digits("40123")


@pytest.mark.parametrize("family", FAMILIES)
def test_planar_curve_is_the_classic_hilbert_rule(family):
    spec = make_standard_hilbert(family, 2)
    assert spec.locations == ((0, 0), (0, 1), (1, 1), (1, 0))
    assert [p.forward for p in spec.perms] == [(1, 0), (0, 1), (0, 1), (1, 0)]
    assert spec.reflections == ((0, 0), (0, 0), (0, 0), (1, 1))


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("d", range(1, 7))
def test_entry_axis_agrees_with_neighbouring_cells(family, d):
    spec = make_standard_hilbert(family, d)
    assert all(entry_axis(spec.locations[r]) == spec.perms[r].inverse[0] for r in range(spec.size))
    assert neighbour_gate_chain(spec)


def binary_point(d, max_len=7):
    row = st.lists(st.integers(0, 1), max_size=max_len).map(tuple)
    return st.lists(row, min_size=d, max_size=d).map(lambda rows: Point.from_digits(rows, 2))


def point_pairs(max_d=5):
    return st.integers(1, max_d).flatmap(lambda d: st.tuples(binary_point(d), binary_point(d)))


@given(st.sampled_from(FAMILIES), point_pairs())
def test_specialised_matches_generic(family, pair):
    p, q = pair
    assert compare_binary(p, q, family) == compare_generic(p, q, make_standard_hilbert(family, p.dim))


@given(st.sampled_from(FAMILIES), point_pairs())
def test_carried_flags_match_per_level_recomputation(family, pair):
    p, q = pair
    assert compare_binary(p, q, family) == compare_hilbert_per_level(p, q, family)


def test_compare_examples():
    p = Point.from_values([Fraction(1, 4), Fraction(1, 4)], 2)
    q = Point.from_values([Fraction(1, 4), Fraction(3, 4)], 2)
    for family in FAMILIES:
        assert compare_binary(p, q, family)
        assert not compare_binary(p, p, family)
    cells = points_in_order(expand_order(make_standard_hilbert("harmonious", 3), 2), 2, 2)
    assert not compare_binary(cells[6], cells[5], "harmonious")


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("d", range(1, 5))
def test_zoom_factor_puts_an_untransformed_copy_in_the_corner(family, d):
    spec = make_standard_hilbert(family, d)
    levels = zoom_factor(family, d).bit_length() - 1
    cells = expand_order(spec, levels + 1)
    corner = cells[(cells < 2).all(axis=1)]
    assert (corner == expand_order(spec, 1)).all()


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("d", range(1, 8))
def test_zoom_factor_undoes_the_first_subregion_transform(family, d):
    spec = make_standard_hilbert(family, d)
    identity = (tuple(range(d)), (0,) * d)
    levels = zoom_factor(family, d).bit_length() - 1
    total = identity
    for _ in range(levels):
        total = compose_transforms(total, spec.transform(0))
    assert spec.locations[0] == (0,) * d
    assert total == identity


def test_factor_four_is_not_enough_for_butz_moore_in_3d():
    spec = make_standard_hilbert("butz-moore", 3)
    cells = expand_order(spec, 3)
    corner = cells[(cells < 2).all(axis=1)]
    assert zoom_factor("butz-moore", 3) == 8
    assert not (corner == expand_order(spec, 1)).all()


@given(st.sampled_from(FAMILIES), point_pairs(4))
def test_nonneg_agrees_inside_unit_cube(family, pair):
    p, q = pair
    assert compare_binary_nonneg(p, q, family) == compare_binary(p, q, family)


def test_nonneg_examples():
    p, q = [Fraction(3, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(3, 2)]
    for family in FAMILIES:
        shrunk = [to_point([v / 4 for v in x], 2, 22) for x in (p, q)]
        assert compare_binary_nonneg(p, q, family) == compare_binary(*shrunk, family)
        assert compare_binary_nonneg([0, 0, 0], [Fraction(7), 0, Fraction(1, 8)], family)
    with pytest.raises(DigitError):
        compare_binary_nonneg([-1, 0], [0, 0], "harmonious")


def test_butz_moore_witness():
    assert butzmoore_inconsistency_witness(depth=1) is None
    face, depth, index, seen, expected = butzmoore_inconsistency_witness(depth=2)
    assert isinstance(face, Face) and face.side == 0 and depth == 2
    assert seen != expected
    assert 0 <= index < 16
