"""Exact star-discrepancy of finite point sets and the IET image bound.

For sorted points ``x_(1) <= ... <= x_(N)`` the star-discrepancy is

    D*_N = 1/(2N) + max_i |x_(i) - (2i - 1)/(2N)|

and is computed here without rounding.  Floats appear only in the report
fields suffixed ``_float`` and in normalized profile columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BadEps, EmptySet
from .exact import Number, QuadNumber, max_exact, sorted_exact
from .iet import IET, as_point_set, evaluate, orbit

FLOAT_DIGITS = 17


def _to_float(x: QuadNumber) -> float:
    return float(f"{x.to_decimal(40):.{FLOAT_DIGITS - 1}e}")


@dataclass(frozen=True)
class DiscrepancyReport:
    N: int
    d_star: QuadNumber
    d_star_float: float
    argmax_index: int  # 1-based position in sorted order attaining the max term


@dataclass(frozen=True)
class BoundCheck:
    n: int
    d_star_P: QuadNumber
    d_star_Pstar: QuadNumber
    lower_ok: bool
    upper_ok: bool
    ratio_float: float


@dataclass(frozen=True)
class ProfilePoint:
    N: int
    d_star: QuadNumber
    d_star_float: float
    normalized: float  # N * D*_N / ln N


def star_discrepancy(points: Sequence[Number]) -> DiscrepancyReport:
    pts = as_point_set(points)
    N = len(pts)
    if N == 0:
        raise EmptySet("star-discrepancy of an empty set")
    xs = sorted_exact(pts)
    terms = [abs(x - Fraction(2 * i - 1, 2 * N)) for i, x in enumerate(xs, 1)]
    i, worst = max_exact(terms)
    d = worst + Fraction(1, 2 * N)
    return DiscrepancyReport(N, d, _to_float(d), i + 1)


def star_discrepancy_oracle(points: Sequence[Number]) -> QuadNumber:
    """Direct sup over anchored boxes ``[0, b)``.

    The local discrepancy ``#{x < b}/N - b`` is piecewise linear and decreasing
    between points, so the sup of its absolute value is attained at a point
    ``b = v`` or in the limit ``b -> v+``.  Counts are taken by brute force.
    """
    pts = as_point_set(points)
    N = len(pts)
    if N == 0:
        raise EmptySet("star-discrepancy of an empty set")
    best = QuadNumber(0)
    for v in set(pts) | {QuadNumber(1)}:
        below = sum(1 for x in pts if x < v)
        upto = sum(1 for x in pts if x <= v)
        for cand in (v - Fraction(below, N), Fraction(upto, N) - v):
            if cand > best:
                best = cand
    return best


def verify_bound(f: IET, points: Sequence[Number]) -> BoundCheck:
    """Compare ``D*_N(P)`` with ``D*_N(f(P))`` against factor ``n = len(f)``."""
    pts = as_point_set(points)
    image = [evaluate(f, x) for x in pts]
    dp = star_discrepancy(pts).d_star
    dq = star_discrepancy(image).d_star
    n = len(f)
    return BoundCheck(
        n=n,
        d_star_P=dp,
        d_star_Pstar=dq,
        lower_ok=dq * n >= dp,
        upper_ok=dq <= dp * n,
        ratio_float=float(dq.to_decimal(30) / dp.to_decimal(30)),
    )


@dataclass(frozen=True)
class SharpCase:
    points: tuple[QuadNumber, ...]
    f: IET


def sharp_case_n2(N: int) -> SharpCase:
    """Points with ``D* = 1/N`` that the exchange of ``[0,1/N)``, ``[1/N,1)`` maps to ``D* = 2/N``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    pts = tuple(
        QuadNumber(Fraction(1, N) + (i - 1) * Fraction(N - 2, N * (N - 1))) for i in range(1, N + 1)
    )
    return SharpCase(pts, IET((2, 1), (Fraction(1, N), 1 - Fraction(1, N))))


def sharp_case_2N(N: int, eps: Number) -> SharpCase:
    """Evenly spread points whose eps-neighbourhoods a 2N-IET moves to the front.

    Subintervals, left to right: a leading gap, then alternately an eps-window
    around ``x_n`` and the gap to the next point; the last window runs to 1.
    The windows occupy the first ``N`` image positions in order, the gaps the
    rest, so ``D*(f(P)) = 1 - (2N-1)*eps/2``.
    """
    eps = QuadNumber.coerce(eps)
    if N < 1:
        raise ValueError("N must be positive")
    if not (eps > 0 and eps < Fraction(1, N)):
        raise BadEps(f"need 0 < eps < 1/N, got {eps}")
    xs = [Fraction(2 * i - 1, 2 * N) for i in range(1, N + 1)]
    half = eps / 2
    cuts = [QuadNumber(0)]
    for n in range(N):
        cuts.append(xs[n] - half)
        if n < N - 1:
            cuts.append(xs[n] + half)
    cuts.append(QuadNumber(1))
    lengths = tuple(cuts[i + 1] - cuts[i] for i in range(2 * N))
    # windows are the even-numbered subintervals 2, 4, ..., 2N
    rho = tuple(2 * i for i in range(1, N + 1)) + tuple(2 * i - 1 for i in range(1, N + 1))
    return SharpCase(tuple(QuadNumber(x) for x in xs), IET(rho, lengths))


def discrepancy_profile(f: IET, x0: Number, checkpoints: Sequence[int]) -> list[ProfilePoint]:
    checkpoints = list(checkpoints)
    if any(c < 2 for c in checkpoints) or checkpoints != sorted(checkpoints):
        raise ValueError("checkpoints must be ascending and at least 2")
    if not checkpoints:
        return []
    pts = orbit(f, x0, checkpoints[-1])
    out = []
    for N in checkpoints:
        rep = star_discrepancy(pts[:N])
        out.append(ProfilePoint(N, rep.d_star, rep.d_star_float, N * rep.d_star_float / math.log(N)))
    return out
