"""Composition enumeration, counting, and multiset multiplicities."""

from collections import Counter

import pytest

from feyncount.compositions import (
    count_compositions,
    enumerate_compositions,
    multiset_multiplicity,
)

# The worked 16-entry display for a total of 5.
FIVE_LIST = {
    (5,),
    (4, 1), (1, 4), (2, 3), (3, 2),
    (1, 2, 2), (2, 1, 2), (2, 2, 1), (3, 1, 1), (1, 3, 1), (1, 1, 3),
    (1, 1, 1, 2), (1, 1, 2, 1), (1, 2, 1, 1), (2, 1, 1, 1),
    (1, 1, 1, 1, 1),
}


def test_single_part_total():
    assert list(enumerate_compositions(1)) == [(1,)]


def test_three_by_hand():
    assert set(enumerate_compositions(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}


def test_five_matches_worked_list():
    five = list(enumerate_compositions(5))
    assert len(five) == 16
    assert set(five) == FIVE_LIST


def test_cut_mask_order_for_four():
    # ascending (n-1)-bit cut masks: bit j cuts after unit j+1
    assert list(enumerate_compositions(4)) == [
        (4,), (1, 3), (2, 2), (1, 1, 2), (3, 1), (1, 2, 1), (2, 1, 1), (1, 1, 1, 1),
    ]


def test_empty_total_convention():
    assert list(enumerate_compositions(0)) == [()]
    assert count_compositions(0) == 1


def test_negative_total_rejected():
    with pytest.raises(ValueError):
        list(enumerate_compositions(-1))
    with pytest.raises(ValueError):
        count_compositions(-3)


@pytest.mark.parametrize("n,expected", [(1, 1), (5, 16), (12, 2048)])
def test_count_values(n, expected):
    assert count_compositions(n) == expected


def test_stream_length_matches_count_up_to_16():
    for n in range(1, 17):
        assert sum(1 for _ in enumerate_compositions(n)) == count_compositions(n) == 2 ** (n - 1)


def test_stream_is_duplicate_free_and_valid():
    for n in range(1, 13):
        seen = set()
        for parts in enumerate_compositions(n):
            assert parts not in seen
            seen.add(parts)
            assert all(part >= 1 for part in parts)
            assert sum(parts) == n
        assert len(seen) == 2 ** (n - 1)


def test_stream_order_is_reproducible():
    assert list(enumerate_compositions(9)) == list(enumerate_compositions(9))


def test_multiplicity_of_three_one_one():
    assert multiset_multiplicity({3: 1, 1: 2}) == 3


def test_multiplicity_single_part():
    assert multiset_multiplicity({7: 1}) == 1


def test_multiplicity_against_stream_filter():
    target = Counter({2: 2, 1: 1})
    matches = [c for c in enumerate_compositions(5) if Counter(c) == target]
    assert len(matches) == 3
    assert multiset_multiplicity({2: 2, 1: 1}) == 3


def test_multiplicity_rejects_bad_input():
    with pytest.raises(ValueError):
        multiset_multiplicity({})
    with pytest.raises(ValueError):
        multiset_multiplicity({0: 2})
    with pytest.raises(ValueError):
        multiset_multiplicity({3: 0})


def test_grouping_by_multiset_is_lossless():
    # summing multiplicities over the distinct part multisets recovers 2**(n-1)
    for n in range(1, 11):
        groups = {frozenset(Counter(c).items()) for c in enumerate_compositions(n)}
        total = sum(multiset_multiplicity(dict(g)) for g in groups)
        assert total == 2 ** (n - 1)
