import itertools

import pytest

from oracles import recursive_rgc
from sfcurves.graycode import (from_digits, insert, mirror_digit, reduce,
                               rgc_decode, rgc_encode, take_out,
                               take_out_permutation, to_digits)


def digits(text):
    return tuple(int(ch) for ch in text)


@pytest.mark.parametrize("base,r,c", [(3, "10", "12"), (3, "22", "22"), (2, "111", "100"), (2, "011", "010")])
def test_encode_examples(base, r, c):
    assert rgc_encode(digits(r), base) == digits(c)
    assert rgc_decode(digits(c), base) == digits(r)


def test_zero_maps_to_zero():
    assert rgc_decode((0, 0, 0), 2) == (0, 0, 0)


@pytest.mark.parametrize("base", [2, 3])
@pytest.mark.parametrize("d", range(1, 7))
def test_encode_matches_recursive_sequence(base, d):
    seq = recursive_rgc(d, base)
    assert [rgc_encode(to_digits(r, base, d), base) for r in range(base ** d)] == seq
    assert [from_digits(rgc_decode(c, base), base) for c in seq] == list(range(base ** d))


@pytest.mark.parametrize("base", [2, 3])
@pytest.mark.parametrize("d", range(1, 6))
def test_adjacent_codes_differ_in_first_changed_digit(base, d):
    for n in range(1, base ** d):
        r, prev = to_digits(n, base, d), to_digits(n - 1, base, d)
        changed = [i for i in range(d) if rgc_encode(r, base)[i] != rgc_encode(prev, base)[i]]
        assert len(changed) == 1
        i = changed[0]
        assert abs(rgc_encode(r, base)[i] - rgc_encode(prev, base)[i]) == 1
        assert i == min(k for k in range(d) if r[k] != prev[k])


@pytest.mark.parametrize("d", range(1, 6))
def test_ternary_encode_keeps_ones_in_place(d):
    for r in itertools.product(range(3), repeat=d):
        assert [x == 1 for x in rgc_encode(r, 3)] == [x == 1 for x in r]


@pytest.mark.parametrize("d", range(2, 6))
def test_ternary_reduction(d):
    full = recursive_rgc(d, 3)
    for i in range(d):
        for k in (0, 2):
            assert reduce(full, i, k) == recursive_rgc(d - 1, 3)


@pytest.mark.parametrize("d", range(2, 7))
def test_binary_reduction(d):
    full, lower = recursive_rgc(d, 2), recursive_rgc(d - 1, 2)
    for i in range(d):
        assert reduce(full, i, 0) == lower
    for i in range(d - 1):
        assert reduce(full, i, 1) == [mirror_digit(x, i, 2) for x in lower]


def test_take_out():
    # element-wise rule: drop a_2 = 1, shift the larger values down by one
    assert take_out_permutation(digits("30142"), 2) == digits("2031")
    assert sorted(take_out_permutation(digits("30142"), 0)) == [0, 1, 2, 3]
    assert take_out(digits("010"), 2) == digits("01")
    assert take_out((1,), 0) == ()
    with pytest.raises(IndexError):
        take_out((1,), 1)


def test_reduce_examples():
    seq = [digits(x) for x in ("010", "000", "210", "222")]
    assert reduce(seq, 2, 0) == [digits(x) for x in ("01", "00", "21")]
    assert reduce(recursive_rgc(2, 3), 0, 0) == [(0,), (1,), (2,)]
    assert reduce([], 0, 0) == []


def test_mirror_and_insert():
    assert mirror_digit(digits("20"), 1, 3) == digits("22")
    assert mirror_digit(digits("1001"), 2, 2) == digits("1011")
    x = digits("2101")
    assert mirror_digit(mirror_digit(x, 3, 3), 3, 3) == x
    assert insert(digits("120"), 2, 1) == digits("1210")
    assert take_out(insert(x, 1, 2), 1) == x


def test_to_digits_overflow():
    with pytest.raises(ValueError):
        to_digits(9, 3, 2)
