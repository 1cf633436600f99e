"""Dynamical classification of IETs.

Keane checks, f-chains and fundamental discontinuities, the search for a
rotation conjugating an IET to one with fewer intervals, and low-discrepancy
verdicts for rotations and for 3-IETs.  Everything is exact; the only
approximation is the iteration horizon, which every verdict carries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import NotFourIntervals, NotThreeIntervals
from .exact import Number, QuadNumber, cf_expand, has_bounded_partial_quotients, qn_floor
from .iet import (
    IET,
    ONE,
    ZERO,
    _locate,
    conjugate,
    evaluate,
    evaluate_inverse,
    identity,
    invert,
    reduce,
    rotation,
)

KEANE_HORIZON = 10_000
CHAIN_HORIZON = 1_000


def discontinuity_set(f: IET) -> list[QuadNumber]:
    """Interior breakpoints of the reduced form; ``f`` jumps at each of them."""
    return list(reduce(f).breakpoints[1:-1])


# -- Keane -----------------------------------------------------------------


@dataclass(frozen=True)
class KeaneVerdict:
    status: str  # "verified" or "violated"
    M: int  # horizon for "verified", the offending iterate m for "violated"
    alpha: Optional[int] = None  # 1-based subinterval whose left end is iterated
    beta: Optional[int] = None  # 1-based subinterval whose left end is hit

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def __str__(self) -> str:
        if self.verified:
            return f"verified_up_to({self.M})"
        return f"violated(m={self.M}, alpha={self.alpha}, beta={self.beta})"


def keane_check(f: IET, M: int = KEANE_HORIZON) -> KeaneVerdict:
    """Iterate the left endpoints of the reduced form and look for connections.

    A hit on ``Lambda_0 = 0`` is allowed; hits on interior breakpoints are not.
    ``verified`` only means no connection of length ``<= M`` exists.
    """
    if M < 1:
        raise ValueError("M must be positive")
    r = reduce(f)
    bps, fl, tr = r.breakpoints, r._float_breakpoints, r.translations
    targets = {bps[k]: k + 1 for k in range(1, r.n)}
    if not targets:
        # identity: every point is fixed, so the endpoint orbit is finite
        return KeaneVerdict("violated", 1, 1, 1)
    points = list(bps[:-1])
    for m in range(1, M + 1):
        for a, x in enumerate(points):
            x = x + tr[_locate(bps, fl, x)]
            points[a] = x
            b = targets.get(x)
            if b is not None:
                return KeaneVerdict("violated", m, a + 1, b)
        if not points[0]:
            # the orbit of 0 closed up: finite, so the condition fails too
            return KeaneVerdict("violated", m, 1, 1)
    return KeaneVerdict("verified", M)


def is_periodic(f: IET, x: QuadNumber, horizon: int) -> bool:
    y = x
    for _ in range(horizon):
        y = evaluate(f, y)
        if y == x:
            return True
    return False


# -- chains and fundamental discontinuities ----------------------------------


@dataclass(frozen=True)
class ChainRecord:
    points: tuple[QuadNumber, ...]
    start_in_D: bool
    end_in_D: bool
    truncated: bool
    periodic: bool = False

    def __len__(self) -> int:
        return len(self.points)


def _next_in(f: IET, x: QuadNumber, universe: set, horizon: int, step) -> tuple[list[QuadNumber], bool]:
    """Orbit segment from ``x`` up to the next element of ``universe``.

    Returns the points after ``x`` (ending at the hit) and whether one was found.
    """
    seg = []
    y = x
    for _ in range(horizon):
        y = step(f, y)
        seg.append(y)
        if y in universe:
            return seg, True
    return [], False


def maximal_chains(f: IET, horizon: int = CHAIN_HORIZON) -> list[ChainRecord]:
    """Group ``D(f) + {0}`` into maximal f-chains.

    Each element is linked to the next element of the universe on its forward
    orbit (within ``horizon`` steps).  Chains are read off the resulting
    graph; a cycle is reported once, as a periodic chain.
    """
    if horizon < 1:
        raise ValueError("horizon must be positive")
    r = reduce(f)
    D = discontinuity_set(r)
    Dset = set(D)
    universe = Dset | {ZERO}
    order = [ZERO] + D
    nxt: dict = {}
    seg: dict = {}
    for u in order:
        s, found = _next_in(r, u, universe, horizon, evaluate)
        if found:
            nxt[u] = s[-1]
            seg[u] = s
    has_pred = set(nxt.values())
    # an element whose backward orbit leaves the horizon without a hit
    back_truncated = {}
    for u in order:
        if u not in has_pred:
            _, found = _next_in(r, u, universe, horizon, evaluate_inverse)
            back_truncated[u] = not found
    chains = []
    seen = set()
    for u in order:
        if u in has_pred or u in seen:
            continue
        pts = [u]
        seen.add(u)
        v = u
        while v in nxt:
            pts.extend(seg[v])
            v = nxt[v]
            seen.add(v)
        chains.append(ChainRecord(tuple(pts), u in Dset, v in Dset, back_truncated[u] or v not in nxt))
    for u in D + [ZERO]:
        if u in seen:
            continue
        # u lies on a cycle: start at its first discontinuity and stop at the
        # last element of the universe before the orbit returns
        cyc = [u]
        seen.add(u)
        v = u
        while nxt[v] != u:
            cyc.extend(seg[v])
            v = nxt[v]
            seen.add(v)
        chains.append(ChainRecord(tuple(cyc), u in Dset, v in Dset, False, True))
    return chains


def _power_left_limit(f: IET, x: QuadNumber, N: int) -> QuadNumber:
    """``lim_{t -> x-} f^N(t)`` for ``x > 0``.

    A left limit at ``p`` is taken in the subinterval whose closure has ``p``
    as an interior point or right end, so its image stays a left limit.
    """
    bps, tr = f.breakpoints, f.translations
    p = x
    for _ in range(N):
        k = f.interval_of(p)
        if p == bps[k]:
            k -= 1
        p = p + tr[k]
    return p


def power_discontinuous_at(f: IET, x: QuadNumber, N: int) -> bool:
    if not x:
        raise ValueError("left limit at 0 is not defined")
    y = x
    for _ in range(N):
        y = evaluate(f, y)
    return _power_left_limit(f, x, N) != y


@dataclass(frozen=True)
class FDReport:
    discontinuities: tuple[QuadNumber, ...]
    fundamental: tuple[QuadNumber, ...]
    chain_per_point: dict = field(repr=False)
    horizon: int
    zero_counts: bool  # 0 has an infinite orbit and is counted with the fundamentals

    @property
    def count_excluding_zero(self) -> int:
        return len(self.fundamental)

    @property
    def count_including_zero(self) -> int:
        return len(self.fundamental) + int(self.zero_counts)

    @property
    def count(self) -> int:
        return self.count_including_zero


def fundamental_discontinuities(f: IET, horizon: int = CHAIN_HORIZON) -> FDReport:
    r = reduce(f)
    D = discontinuity_set(r)
    Dset = set(D)
    chains = maximal_chains(r, horizon)
    per_point = {}
    for c in chains:
        for p in c.points:
            if p in per_point:
                continue
            if p == ZERO or p in Dset:
                per_point[p] = c
    fundamental = []
    for x in D:
        c = per_point[x]
        if c.periodic or c.points[0] != x:
            continue
        if power_discontinuous_at(r, x, len(c)):
            fundamental.append(x)
    zero_counts = not per_point[ZERO].periodic and not is_periodic(r, ZERO, horizon)
    return FDReport(tuple(D), tuple(fundamental), per_point, horizon, zero_counts)


@dataclass(frozen=True)
class FDInvariance:
    fd_f: int
    fd_conj: int

    @property
    def equal(self) -> bool:
        return self.fd_f == self.fd_conj


def conjugation_fd_invariance(f: IET, g: IET, horizon: int = CHAIN_HORIZON) -> FDInvariance:
    a = fundamental_discontinuities(f, horizon).count
    b = fundamental_discontinuities(conjugate(g, f), horizon).count
    return FDInvariance(a, b)


# -- rotation search ---------------------------------------------------------


@dataclass(frozen=True)
class RotationReduction:
    z: QuadNumber
    conjugator: IET  # g with reduced == reduce(g o f o g^-1)
    reduced: IET


def _candidate_angles(f: IET) -> list[QuadNumber]:
    base = []
    for v in f.breakpoints[1:-1] + f.image_breakpoints[1:-1]:
        if v not in base:
            base.append(v)
    out = list(base)
    seen = set(out) | {ZERO}
    for i, a in enumerate(base):
        for b in base[i:]:
            for c in (a + b, a - b, b - a):
                c = c - qn_floor(c)
                if c not in seen:
                    seen.add(c)
                    out.append(c)
    return out


def reduce_via_rotation(f: IET) -> Optional[RotationReduction]:
    """Find a rotation conjugating ``f`` to an IET with fewer intervals.

    The baseline is the interval count of the given presentation, so a plain
    merge of adjacent pieces (``z = 0``) is tried first.  Candidate angles are
    the (image) breakpoints of ``f`` and their pairwise sums and differences
    mod 1; for each, ``rotation(z)^-1`` and ``rotation(z)`` are tried.
    """
    r = reduce(f)
    if len(r) < len(f):
        return RotationReduction(ZERO, identity(), r)
    for z in _candidate_angles(r):
        rot = rotation(z)
        for g in (invert(rot), rot):
            h = conjugate(g, r)
            if len(h) < len(f):
                return RotationReduction(z, g, h)
    return None


# -- low-discrepancy criteria --------------------------------------------------


def ld_criterion_rotation(z: Number) -> str:
    """``yes`` iff the rotation by ``z`` has low-discrepancy orbits."""
    z = QuadNumber.coerce(z)
    if z.is_rational:
        return "no"
    return "yes" if has_bounded_partial_quotients(cf_expand(z)).status == "yes" else "no"


def nu_3iet(f: IET) -> QuadNumber:
    """``(lambda_2 + lambda_3) / (1 + lambda_2)`` of a reduced 3-IET."""
    r = reduce(f)
    if len(r) != 3:
        raise NotThreeIntervals(f"reduced form has {len(r)} intervals")
    l1, l2, l3 = r.lengths
    return (l2 + l3) / (ONE + l2)


def ld_criterion_3iet(f: IET) -> str:
    """Verdict for a 3-IET; one that is a rotation in disguise is not_applicable."""
    if len(f) != 3:
        raise NotThreeIntervals(f"{len(f)} intervals given")
    r = reduce(f)
    if r.rho != (3, 2, 1):
        return "not_applicable"
    return ld_criterion_rotation(nu_3iet(r))


# -- 4-IET classification ------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    verdict: str  # "old", "new" or "unknown"
    low_discrepancy: str  # "yes", "no" or "undecided"
    ld_tag: str  # rotation-criterion | 3iet-criterion | finite-order | undecided
    conjugator: Optional[IET] = None
    reduced: Optional[IET] = None
    evidence: Optional[FDReport] = None
    keane: Optional[KeaneVerdict] = None
    reason: Optional[str] = None


def _rational_data(f: IET) -> bool:
    return all(v.is_rational for v in f.lengths)


def _ld_of_small(h: IET) -> tuple[str, str]:
    """LD verdict for an IET with at most three intervals."""
    if _rational_data(h):
        return "no", "finite-order"
    if len(h) == 2:
        return ld_criterion_rotation(h.lengths[1]), "rotation-criterion"
    if len(h) == 3 and h.rho == (3, 2, 1):
        return ld_criterion_3iet(h), "3iet-criterion"
    return "undecided", "undecided"


def classify_4iet(f: IET, M: int = KEANE_HORIZON, horizon: int = CHAIN_HORIZON) -> Classification:
    r = reduce(f)
    if len(r) != 4:
        raise NotFourIntervals(f"reduced form has {len(r)} intervals")
    if r.rho != (4, 3, 2, 1):
        found = reduce_via_rotation(r)
        if found is None:
            ld, tag = ("no", "finite-order") if _rational_data(r) else ("undecided", "undecided")
            return Classification("unknown", ld, tag, reason="no reducing rotation among the candidates")
        ld, tag = _ld_of_small(found.reduced)
        return Classification("old", ld, tag, conjugator=found.conjugator, reduced=found.reduced)
    keane = keane_check(r, M)
    if keane.verified and power_discontinuous_at(r, evaluate_inverse(r, ZERO), 2):
        report = fundamental_discontinuities(r, horizon)
        return Classification("new", "undecided", "undecided", evidence=report, keane=keane)
    if not keane.verified:
        reason = f"Keane condition fails ({keane})"
    else:
        reason = "f^2 is continuous at f^-1(0)"
    ld, tag = ("no", "finite-order") if _rational_data(r) else ("undecided", "undecided")
    return Classification("unknown", ld, tag, keane=keane, reason=reason)
