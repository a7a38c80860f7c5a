"""Partitions and standard Young tableaux.

Partitions are weakly decreasing tuples of positive integers (no trailing
zeros); tableaux are tuples of row tuples filled with 1..n.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

__all__ = [
    "Partition",
    "is_partition",
    "partitions",
    "conjugate",
    "standard_tableaux",
    "tableau_position",
    "hook_length_count",
]

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def is_partition(shape) -> bool:
    return all(a >= b for a, b in zip(shape, shape[1:])) and all(a > 0 for a in shape)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically decreasing from (n,)."""
    if n == 0:
        return ((),)
    out = []

    def build(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, maxpart), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(out)


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > c) for c in range(shape[0]))


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the given shape, sorted."""
    n = sum(shape)
    if n == 0:
        return ((),)
    out = []
    for i, row in enumerate(shape):
        if row > 0 and (i == len(shape) - 1 or shape[i + 1] < row):
            sub = list(shape)
            sub[i] -= 1
            while sub and sub[-1] == 0:
                sub.pop()
            for t in standard_tableaux(tuple(sub)):
                rows = [list(r) for r in t]
                while len(rows) <= i:
                    rows.append([])
                rows[i].append(n)
                out.append(tuple(tuple(r) for r in rows))
    return tuple(sorted(out))


def tableau_position(t: Tableau, k: int) -> tuple[int, int]:
    """1-based (row, col) of the entry k."""
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if v == k:
                return i + 1, j + 1
    raise ValueError(f"entry {k} not in tableau")


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux, by the hook length formula."""
    n = sum(shape)
    if n == 0:
        return 1
    conj = conjugate(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j) + (conj[j] - (i + 1))
    return factorial(n) // prod
