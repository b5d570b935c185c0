"""
Partitions and binomials used by the graded bases and mode expansions.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterator


@lru_cache(maxsize=None)
def partitions(n: int, min_part: int = 1, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Nonincreasing tuples of parts in [min_part, max_part] summing to n.

    Ordered with the largest leading part first.
    """
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in partitions(n - first, min_part, first):
            result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def strict_partitions(n: int, min_part: int = 1, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Strictly decreasing tuples of parts >= min_part (>= 1) summing to n."""
    if min_part < 1:
        raise ValueError("strict partitions need min_part >= 1")
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in strict_partitions(n - first, min_part, first - 1):
            result.append((first,) + rest)
    return tuple(result)


def binomial(p: int, k: int) -> int:
    """C(p, k) for any integer p, including negative p."""
    if k < 0:
        return 0
    if p >= 0:
        return comb(p, k)
    return (-1) ** k * comb(k - p - 1, k)


def multiplicity_count(parts: tuple[int, ...]) -> int:
    """Number of distinct orderings of a multiset."""
    count = factorial(len(parts))
    for part in set(parts):
        count //= factorial(parts.count(part))
    return count


def sorted_index_tuples(total: int, length: int, upper: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing integer tuples of the given length and sum, entries <= upper."""
    if length == 1:
        if total <= upper:
            yield (total,)
        return
    # the last (largest) entry is at least ceil(total / length)
    lowest = -((-total) // length)
    for last in range(upper, lowest - 1, -1):
        for head in sorted_index_tuples(total - last, length - 1, last):
            yield head + (last,)
