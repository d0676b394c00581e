"""Permutations of {1, ..., n} in one-line notation, and their statistics.

A permutation is a tuple of the values (pi(1), ..., pi(n)).  Positions
and values are both 1-based throughout, which matches the usual
combinatorial conventions:

    >>> stats((2, 1))
    PermStats(des=1, exc=1, fix=0, maj=1, des_set=(1,))
    >>> stats((2, 4, 1, 3))
    PermStats(des=1, exc=2, fix=0, maj=2, des_set=(2,))
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

#: Enumeration guard; factorial growth makes anything larger pointless.
MAX_ENUM_N = 13


@dataclass(frozen=True)
class PermStats:
    des: int
    exc: int
    fix: int
    maj: int
    des_set: tuple[int, ...]


def _validate(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def enumerate_perms(n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield all of S_n in lexicographic order.

    With ``first`` given, yield only the permutations whose first value
    is ``first``; the n blocks partition S_n and concatenating them in
    increasing ``first`` reproduces the full lexicographic stream.

    >>> list(enumerate_perms(3))[:3]
    [(1, 2, 3), (1, 3, 2), (2, 1, 3)]
    >>> sum(1 for _ in enumerate_perms(4, first=2))
    6
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be between 1 and {MAX_ENUM_N}, got {n}")
    if first is None:
        yield from permutations(range(1, n + 1))
        return
    if not 1 <= first <= n:
        raise ValueError(f"first value {first} outside 1..{n}")
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        yield (first,) + tail


def stats(perm: Sequence[int]) -> PermStats:
    """Descent, excedance, fixed point and major index data of one permutation."""
    perm = _validate(perm)
    des_set = []
    exc = 0
    fix = 0
    for i, v in enumerate(perm, start=1):
        if v > i:
            exc += 1
        elif v == i:
            fix += 1
        if i < len(perm) and perm[i - 1] > perm[i]:
            des_set.append(i)
    return PermStats(des=len(des_set), exc=exc, fix=fix,
                     maj=sum(des_set), des_set=tuple(des_set))


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    """Group inverse.

    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    perm = _validate(perm)
    out = [0] * len(perm)
    for i, v in enumerate(perm, start=1):
        out[v - 1] = i
    return tuple(out)


def is_derangement(perm: Sequence[int]) -> bool:
    perm = _validate(perm)
    return all(v != i for i, v in enumerate(perm, start=1))


def stable_subsets(lo: int, hi: int) -> list[tuple[int, ...]]:
    """Subsets of {lo, ..., hi} with no two consecutive members.

    Ordered by size, then lexicographically; the empty set comes first.
    An empty interval (``lo == hi + 1``) still has the empty subset.

    >>> stable_subsets(2, 3)
    [(), (2,), (3,)]
    """
    if lo > hi + 1:
        raise ValueError(f"interval [{lo}, {hi}] is malformed")
    members = range(lo, hi + 1)
    out: list[tuple[int, ...]] = []
    for size in range(len(members) + 1):
        for sub in combinations(members, size):
            if all(b - a >= 2 for a, b in zip(sub, sub[1:])):
                out.append(sub)
    return out
