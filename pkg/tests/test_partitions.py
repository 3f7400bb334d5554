import math

import pytest

from pathmn import (
    GuardError,
    ParseError,
    canonical_order,
    check_composition,
    check_partition,
    conjugate,
    contains,
    enumerate_set_partitions,
    format_partition,
    is_partition,
    mult_factorial,
    multinomial,
    multiplicities,
    pad_column,
    pad_row,
    parse_composition,
    parse_partition,
    partitions_of,
    skew_shape,
    syt_count,
    z_mu,
)
from brute import syt_brute


def test_is_partition():
    assert is_partition((4, 2, 1))
    assert is_partition(())
    assert is_partition((3, 3, 3))
    assert not is_partition((2, 3))
    assert not is_partition((3, 0))
    assert not is_partition((3, -1))


def test_check_partition():
    assert check_partition([4, 2]) == (4, 2)
    assert check_partition(()) == ()
    with pytest.raises(ParseError):
        check_partition((1, 2))
    with pytest.raises(ParseError):
        check_partition((2, 0))


def test_check_composition():
    assert check_composition([1, 3, 2]) == (1, 3, 2)
    assert check_composition(()) == ()
    with pytest.raises(ParseError):
        check_composition((1, 0, 2))


def test_conjugate():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    for n in range(8):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_multiplicities():
    assert multiplicities((4, 4, 3, 1, 1, 1)) == {4: 2, 3: 1, 1: 3}
    assert multiplicities(()) == {}


def test_mult_factorial():
    assert mult_factorial((4, 4, 3, 1, 1, 1)) == 12
    assert mult_factorial(()) == 1
    assert mult_factorial((2, 2, 2)) == 6


def test_z_mu():
    assert z_mu((2, 1)) == 2
    assert z_mu((1, 1, 1)) == 6
    for n in range(1, 9):
        assert z_mu((n,)) == n


def test_class_sizes_sum_to_group_order():
    for n in range(9):
        total = sum(math.factorial(n) // z_mu(mu) for mu in partitions_of(n))
        assert total == math.factorial(n)


def test_pad_row():
    assert pad_row((2, 1), 6) == (3, 2, 1)
    assert pad_row((), 5) == (5,)
    assert pad_row((), 0) == ()
    assert pad_row((3, 3), 9) == (3, 3, 3)
    with pytest.raises(ParseError):
        pad_row((2, 2), 5)
    with pytest.raises(ParseError):
        pad_row((3,), 2)


def test_pad_column():
    assert pad_column((3, 2), 7) == (3, 2, 1, 1)
    assert pad_column((), 4) == (1, 1, 1, 1)
    assert pad_column((2, 2), 4) == (2, 2)
    with pytest.raises(ParseError):
        pad_column((2, 2), 3)


def test_partitions_of_counts_and_order():
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    for n, expected in enumerate(counts):
        parts = list(partitions_of(n))
        assert len(parts) == expected
        assert len(set(parts)) == expected
        assert all(sum(lam) == n and is_partition(lam) for lam in parts)
        assert parts == sorted(parts, reverse=True)
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(5, max_part=2)) == [
        (2, 2, 1),
        (2, 1, 1, 1),
        (1, 1, 1, 1, 1),
    ]


def test_canonical_order():
    assert canonical_order([(1, 1, 1), (3,), (2, 1)]) == [(3,), (2, 1), (1, 1, 1)]


def test_enumerate_set_partitions():
    bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    for r, expected in enumerate(bell):
        seen = set()
        count = 0
        for blocks in enumerate_set_partitions(r):
            count += 1
            flat = sorted(x for block in blocks for x in block)
            assert flat == list(range(1, r + 1))
            key = frozenset(frozenset(block) for block in blocks)
            assert key not in seen
            seen.add(key)
        assert count == expected


def test_enumerate_set_partitions_guard():
    with pytest.raises(GuardError):
        list(enumerate_set_partitions(13))


def test_syt_count():
    assert syt_count(()) == 1
    assert syt_count((3,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 2)) == 5
    assert syt_count((1, 1, 1, 1)) == 1
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert syt_count(lam) == syt_brute(lam)


def test_syt_sum_of_squares():
    for n in range(1, 8):
        total = sum(syt_count(lam) ** 2 for lam in partitions_of(n))
        assert total == math.factorial(n)


def test_multinomial():
    assert multinomial(4, (2, 2)) == 6
    assert multinomial(3, (3,)) == 1
    assert multinomial(0, ()) == 1
    assert multinomial(6, (3, 2, 1)) == 60


def test_contains():
    assert contains((4, 2), (2, 1))
    assert contains((4, 2), ())
    assert not contains((4, 2), (3, 3))
    assert not contains((2,), (1, 1))


def test_skew_shape():
    sk = skew_shape((4, 2), (2, 1))
    assert sk.outer == (4, 2)
    assert sk.inner == (2, 1)
    assert sk.size == 3
    with pytest.raises(ParseError):
        skew_shape((2, 1), (3,))
    with pytest.raises(ParseError):
        skew_shape((2, 1), (1, 2))


def test_parse_partition():
    assert parse_partition("4,3,1") == (4, 3, 1)
    assert parse_partition("[4,3,1]") == (4, 3, 1)
    assert parse_partition("4 3 1") == (4, 3, 1)
    assert parse_partition("2^2 1^3") == (2, 2, 1, 1, 1)
    assert parse_partition("") == ()
    assert parse_partition("[]") == ()
    with pytest.raises(ParseError):
        parse_partition("3,4")
    with pytest.raises(ParseError):
        parse_partition("a,b")
    with pytest.raises(ParseError):
        parse_partition("0")


def test_parse_composition():
    assert parse_composition("1,3,2") == (1, 3, 2)
    assert parse_composition("2^2 1") == (2, 2, 1)
    with pytest.raises(ParseError):
        parse_composition("1,0")


def test_format_partition_round_trip():
    assert format_partition((4, 3, 1)) == "[4,3,1]"
    assert format_partition(()) == "[]"
    for n in range(7):
        for lam in partitions_of(n):
            assert parse_partition(format_partition(lam)) == lam
