"""
Small enumerators used throughout the package: integer partitions and
non-crossing perfect matchings of points 1..2n on a circle.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """
    Yield the partitions of n as weakly increasing tuples.

    >>> list(partitions(4))
    [(1, 1, 1, 1), (1, 1, 2), (2, 2), (1, 3), (4,)]
    """
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, largest) + 1):
        for rest in partitions(n - first, first):
            yield rest + (first,)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """The partition number p(n), by direct enumeration."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(1 for _ in partitions(n))


def noncrossing_matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """
    Yield all non-crossing perfect matchings of the given sorted points.

    Pairs are (a, b) with a < b and appear sorted by their first element.
    """
    if not points:
        yield ()
        return
    first = points[0]
    for j in range(1, len(points), 2):
        inner = points[1:j]
        outer = points[j + 1:]
        for m_in in noncrossing_matchings(inner):
            for m_out in noncrossing_matchings(outer):
                yield tuple(sorted(((first, points[j]),) + m_in + m_out))


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c
