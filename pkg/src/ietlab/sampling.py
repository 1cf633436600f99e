"""Random instances for property checks.

All generators take an explicit :class:`random.Random` so runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .combinatorics import enumerate_admissible
from .exact import QuadNumber
from .iet import IET, Permutation


def random_quad_lengths(rng: random.Random, n: int, d: int = 2, size: int = 9) -> tuple[QuadNumber, ...]:
    """``n`` positive numbers of ``Q(sqrt(d))`` summing to 1."""
    raw = []
    for _ in range(n):
        a = Fraction(rng.randint(1, size), rng.randint(1, size))
        b = Fraction(rng.randint(1, size), rng.randint(1, size))
        raw.append(QuadNumber(a, b, d) if d else QuadNumber(a + b))
    total = sum(raw, QuadNumber(0))
    return tuple(x / total for x in raw)


def random_rational_lengths(rng: random.Random, n: int, den: int = 64) -> tuple[QuadNumber, ...]:
    cuts = sorted(rng.sample(range(1, den), n - 1))
    bounds = [0] + cuts + [den]
    return tuple(QuadNumber(Fraction(bounds[i + 1] - bounds[i], den)) for i in range(n))


def random_admissible_iet(rng: random.Random, n: int, d: int = 2) -> IET:
    rho = rng.choice(enumerate_admissible(n))
    return IET(rho, random_quad_lengths(rng, n, d))


def random_iet(rng: random.Random, n: int, d: int = 2) -> IET:
    """Any permutation, not necessarily admissible."""
    rho: Permutation = tuple(rng.sample(range(1, n + 1), n))
    return IET(rho, random_quad_lengths(rng, n, d))


def random_keane_iet(rng: random.Random, rho: Permutation, d: int = 2, M: int = 1000, tries: int = 200) -> IET:
    """Random lengths for ``rho`` until the Keane check passes at horizon ``M``."""
    from .classification import keane_check

    for _ in range(tries):
        f = IET(rho, random_quad_lengths(rng, len(rho), d))
        if keane_check(f, M).verified:
            return f
    raise RuntimeError(f"no Keane instance for {rho} in {tries} draws")


def random_rational_points(rng: random.Random, N: int, den: int = 1 << 20) -> list[QuadNumber]:
    return [QuadNumber(Fraction(rng.randrange(den), den)) for _ in range(N)]
