"""Admissible and strongly separating monodromy invariants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .errors import TooLarge
from .iet import Permutation, is_admissible

MAX_N = 10


def _admissible_rec(n: int, prefix: list[int], used: list[bool], top: int) -> Iterator[Permutation]:
    k = len(prefix)
    if k == n:
        yield tuple(prefix)
        return
    for v in range(1, n + 1):
        if used[v - 1]:
            continue
        new_top = max(top, v)
        # prefix {1..k+1} closed under rho: reducible, prune
        if new_top == k + 1 and k + 1 < n:
            continue
        used[v - 1] = True
        prefix.append(v)
        yield from _admissible_rec(n, prefix, used, new_top)
        prefix.pop()
        used[v - 1] = False


def enumerate_admissible(n: int) -> list[Permutation]:
    """All admissible permutations of ``1..n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_N:
        raise TooLarge(f"n = {n} exceeds the enumeration guard {MAX_N}")
    return list(_admissible_rec(n, [], [False] * n, 0))


@dataclass(frozen=True)
class Separation:
    strongly_separating: bool
    condition: int | None = None  # first satisfied condition, 1..4
    index: int | None = None  # the i (or j) realising it

    def __bool__(self) -> bool:
        return self.strongly_separating


def is_strongly_separating(rho: Permutation) -> Separation:
    """Check the four rotation-reducibility conditions, in order.

    (1) rho(i+1) = rho(i) + 1; (2) rho(i) = n and rho(i+1) = 1;
    (3) rho(n) = j and rho(1) = j + 1; (4) rho(n) = n and rho(1) = 1.
    """
    n = len(rho)
    for i in range(1, n):
        if rho[i] == rho[i - 1] + 1:
            return Separation(False, 1, i)
    for i in range(1, n):
        if rho[i - 1] == n and rho[i] == 1:
            return Separation(False, 2, i)
    if rho[0] == rho[-1] + 1:
        return Separation(False, 3, rho[-1])
    if rho[-1] == n and rho[0] == 1:
        return Separation(False, 4, n)
    return Separation(True)


@dataclass(frozen=True)
class CountReport:
    n: int
    admissible: int
    strongly_separating: int


def count_report(n: int) -> CountReport:
    adm = enumerate_admissible(n)
    return CountReport(n, len(adm), sum(1 for r in adm if is_strongly_separating(r)))


def strongly_separating_not_admissible(n: int) -> list[Permutation]:
    """Strongly separating permutations that fail admissibility (brute force)."""
    if n > 8:
        raise TooLarge(f"n = {n} is too large for the full scan")
    return [
        p
        for p in permutations(range(1, n + 1))
        if is_strongly_separating(p) and not is_admissible(p)
    ]
