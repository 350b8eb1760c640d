import pytest

from tanglemoves.combinatorics import catalan, noncrossing_matchings, partition_count, partitions
from oracles import noncrossing, partition_number


@pytest.mark.parametrize("n", range(0, 12))
def test_partition_count_matches_pentagonal_recurrence(n):
    assert partition_count(n) == partition_number(n)


def test_partitions_are_weakly_increasing_and_distinct():
    ps = list(partitions(7))
    assert len(ps) == len(set(ps)) == 15
    assert all(list(p) == sorted(p) and sum(p) == 7 for p in ps)


@pytest.mark.parametrize("n", range(0, 6))
def test_noncrossing_matchings_match_filtered_brute_force(n):
    pts = tuple(range(1, 2 * n + 1))
    ours = {frozenset(m) for m in noncrossing_matchings(pts)}
    assert ours == set(noncrossing(pts))
    assert len(ours) == catalan(n)


def test_catalan_values():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_negative_partition_count_rejected():
    with pytest.raises(ValueError):
        partition_count(-1)
