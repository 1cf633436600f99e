"""Interval exchange transformations with exact length data.

An :class:`IET` is stored in normalized form: subintervals are numbered
``1..n`` from left to right, ``lengths[i-1]`` is the length of subinterval
``i``, and the monodromy ``rho`` lists the subintervals in the order in which
their images appear, i.e. position ``k`` of the image is occupied by
subinterval ``rho[k-1]``.

General combinatorial data ``(pi0, pi1)`` is accepted by :func:`new_iet`,
where ``pi0[k-1]`` / ``pi1[k-1]`` is the label of the subinterval at position
``k`` before / after the map.  Relabeling the alphabet leaves the normalized
form unchanged.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, Sequence

from .errors import BadLengths, MixedField, OutOfRange, SizeMismatch, ValidationError
from .exact import Number, QuadNumber, qn_sign, sorted_exact

Permutation = tuple[int, ...]

ONE = QuadNumber(1)
ZERO = QuadNumber(0)


def check_permutation(p: Iterable[int]) -> Permutation:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValidationError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q`` (apply ``q`` first)."""
    return tuple(p[v - 1] for v in q)


def is_admissible(rho: Sequence[int]) -> bool:
    """True iff no proper prefix ``{1..k}`` is mapped onto itself."""
    top = 0
    for k, v in enumerate(rho[:-1], 1):
        top = max(top, v)
        if top == k:
            return False
    return True


def common_field(values: Iterable[QuadNumber]) -> int:
    d = 0
    for v in values:
        if v.d:
            if d and v.d != d:
                raise MixedField(f"values from Q(sqrt({d})) and Q(sqrt({v.d}))")
            d = v.d
    return d


@dataclass(frozen=True, eq=False)
class IET:
    rho: Permutation
    lengths: tuple[QuadNumber, ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            return
        rho = check_permutation(self.rho)
        lengths = tuple(QuadNumber.coerce(v) for v in self.lengths)
        if len(rho) != len(lengths):
            raise SizeMismatch(f"{len(rho)} labels but {len(lengths)} lengths")
        if not rho:
            raise SizeMismatch("an IET needs at least one interval")
        common_field(lengths)
        for v in lengths:
            if qn_sign(v) <= 0:
                raise BadLengths(f"length {v} is not positive")
        total = sum(lengths, ZERO)
        if total != ONE:
            raise BadLengths(f"lengths sum to {total}, not 1")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def _trusted(cls, rho: Permutation, lengths: tuple[QuadNumber, ...]) -> "IET":
        return cls(rho, lengths, False)

    # -- derived data --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rho)

    def __len__(self) -> int:
        return len(self.rho)

    @cached_property
    def d(self) -> int:
        return common_field(self.lengths)

    @cached_property
    def breakpoints(self) -> tuple[QuadNumber, ...]:
        """``Lambda_0 = 0 < Lambda_1 < ... < Lambda_n = 1``."""
        out = [ZERO]
        for v in self.lengths:
            out.append(out[-1] + v)
        return tuple(out)

    @cached_property
    def image_breakpoints(self) -> tuple[QuadNumber, ...]:
        out = [ZERO]
        for i in self.rho:
            out.append(out[-1] + self.lengths[i - 1])
        return tuple(out)

    @cached_property
    def positions(self) -> Permutation:
        """``positions[i-1]``: image position of subinterval ``i``."""
        return perm_inverse(self.rho)

    @cached_property
    def translations(self) -> tuple[QuadNumber, ...]:
        img = self.image_breakpoints
        return tuple(img[p - 1] - self.breakpoints[i] for i, p in enumerate(self.positions))

    @cached_property
    def _float_breakpoints(self) -> list[float]:
        return [float(v) for v in self.breakpoints]

    @cached_property
    def _float_image_breakpoints(self) -> list[float]:
        return [float(v) for v in self.image_breakpoints]

    def interval_of(self, x: QuadNumber) -> int:
        """0-based index of the subinterval ``[Lambda_k, Lambda_{k+1})`` holding ``x``."""
        return _locate(self.breakpoints, self._float_breakpoints, x)

    # -- equality: reduced, normalized forms ---------------------------

    def same_presentation(self, other: "IET") -> bool:
        return self.rho == other.rho and self.lengths == other.lengths

    def __eq__(self, other) -> bool:
        if not isinstance(other, IET):
            return NotImplemented
        return reduce(self).same_presentation(reduce(other))

    def __hash__(self) -> int:
        r = reduce(self)
        return hash((r.rho, r.lengths))

    def __repr__(self) -> str:
        lens = ", ".join(str(v) for v in self.lengths)
        return f"IET(rho={self.rho}, lengths=({lens}))"

    def __call__(self, x: Number) -> QuadNumber:
        return evaluate(self, x)


def _locate(bps: tuple[QuadNumber, ...], fl: list[float], x: QuadNumber) -> int:
    n = len(bps) - 1
    k = bisect_right(fl, float(x)) - 1
    k = min(max(k, 0), n - 1)
    while k > 0 and x < bps[k]:
        k -= 1
    while k < n - 1 and x >= bps[k + 1]:
        k += 1
    return k


def _check_point(f: IET, x: Number) -> QuadNumber:
    x = QuadNumber.coerce(x)
    if x.d and f.d and x.d != f.d:
        raise MixedField(f"point in Q(sqrt({x.d})) but IET over Q(sqrt({f.d}))")
    if qn_sign(x) < 0 or qn_sign(x - 1) >= 0:
        raise OutOfRange(f"{x} is not in [0, 1)")
    return x


def as_point_set(points: Iterable[Number]) -> tuple[QuadNumber, ...]:
    """Validate a point set: every point in ``[0, 1)``."""
    out = []
    for p in points:
        p = QuadNumber.coerce(p)
        if qn_sign(p) < 0 or qn_sign(p - 1) >= 0:
            raise OutOfRange(f"{p} is not in [0, 1)")
        out.append(p)
    return tuple(out)


# -- constructors -------------------------------------------------------


def new_iet(pi0: Sequence[int] | None, pi1: Sequence[int], lengths: Sequence[Number]) -> IET:
    """Build an IET from combinatorial data and per-label lengths.

    ``lengths[a-1]`` is the length of the subinterval labeled ``a``.
    """
    pi1 = check_permutation(pi1)
    pi0 = check_permutation(pi0) if pi0 is not None else tuple(range(1, len(pi1) + 1))
    if len(pi0) != len(pi1):
        raise SizeMismatch(f"pi0 has {len(pi0)} entries, pi1 has {len(pi1)}")
    if len(lengths) != len(pi0):
        raise SizeMismatch(f"{len(pi0)} labels but {len(lengths)} lengths")
    pos0 = perm_inverse(pi0)  # label -> domain position
    rho = tuple(pos0[a - 1] for a in pi1)
    return IET(rho, tuple(lengths[a - 1] for a in pi0))


def identity() -> IET:
    return IET._trusted((1,), (ONE,))


def rotation(z: Number) -> IET:
    """``x -> x + z mod 1``."""
    z = QuadNumber.coerce(z)
    if qn_sign(z) < 0 or qn_sign(z - 1) >= 0:
        raise OutOfRange(f"rotation angle {z} is not in [0, 1)")
    if not z:
        return identity()
    return IET((2, 1), (ONE - z, z))


def beta_LS(L: int, S: int) -> QuadNumber:
    """Positive root of ``L*beta + S*beta**2 = 1``."""
    if L < 1 or S < 0:
        raise ValueError("need L >= 1 and S >= 0")
    if S == 0:
        return QuadNumber(Fraction(1, L))
    return QuadNumber(Fraction(-L, 2 * S), Fraction(1, 2 * S), L * L + 4 * S)


def rho_LS(L: int, S: int) -> Permutation:
    if S == 0:
        # the general display does not define a permutation here; use the cyclic shift
        return tuple(range(2, L + 1)) + (1,)
    rho = [i + 1 for i in range(1, L)]
    rho.append(L + S)
    rho.append(1)
    rho.extend(i - 1 for i in range(L + 2, L + S + 1))
    return tuple(rho)


def f_LS(L: int, S: int) -> IET:
    """The (L+S)-IET with ``L`` intervals of length beta and ``S`` of length beta**2."""
    beta = beta_LS(L, S)
    return IET(rho_LS(L, S), (beta,) * L + (beta * beta,) * S)


# -- dynamics -------------------------------------------------------------


def evaluate(f: IET, x: Number) -> QuadNumber:
    x = _check_point(f, x)
    return x + f.translations[f.interval_of(x)]


def evaluate_inverse(f: IET, y: Number) -> QuadNumber:
    y = _check_point(f, y)
    k = _locate(f.image_breakpoints, f._float_image_breakpoints, y)
    return y - f.translations[f.rho[k] - 1]


def orbit(f: IET, x0: Number, N: int, include_x0: bool = False) -> list[QuadNumber]:
    """``f(x0), ..., f^N(x0)`` (or ``x0, ..., f^(N-1)(x0)`` with ``include_x0``)."""
    x = _check_point(f, x0)
    bps, fl, tr = f.breakpoints, f._float_breakpoints, f.translations
    out = []
    if include_x0:
        out.append(x)
        N -= 1
    for _ in range(N):
        x = x + tr[_locate(bps, fl, x)]
        out.append(x)
    return out


def invert(f: IET) -> IET:
    lengths = tuple(f.lengths[i - 1] for i in f.rho)
    return IET._trusted(perm_inverse(f.rho), lengths)


def _from_pieces(cuts: list[QuadNumber], images: list[QuadNumber]) -> IET:
    # cuts: sorted left endpoints (cuts[0] == 0); images: image of each left endpoint
    lengths = [cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)]
    lengths.append(ONE - cuts[-1])
    order = sorted(range(len(cuts)), key=lambda i: float(images[i]))
    for a, b in zip(order, order[1:]):
        if images[a] > images[b]:
            order = sorted(range(len(cuts)), key=cmp_to_key(lambda i, j: images[i]._cmp(images[j])))
            break
    rho = tuple(i + 1 for i in order)
    return IET._trusted(rho, tuple(lengths))


def compose(f: IET, g: IET) -> IET:
    """``f o g`` on the common refinement (apply ``g`` first); not reduced."""
    if f.d and g.d and f.d != g.d:
        raise MixedField(f"IETs over Q(sqrt({f.d})) and Q(sqrt({g.d}))")
    pulled = [evaluate_inverse(g, c) for c in f.breakpoints[:-1]]
    cuts = sorted_exact(set(g.breakpoints[:-1]) | set(pulled))
    images = [evaluate(f, evaluate(g, c)) for c in cuts]
    return _from_pieces(cuts, images)


def conjugate(g: IET, f: IET, reduced: bool = True) -> IET:
    """``g o f o g^-1``."""
    h = compose(g, compose(f, invert(g)))
    return reduce(h) if reduced else h


def reduce(f: IET) -> IET:
    """Merge neighbouring subintervals that carry the same translation."""
    tr = f.translations
    keep = [0] + [i for i in range(1, f.n) if tr[i] != tr[i - 1]]
    if len(keep) == f.n:
        return f
    cuts = [f.breakpoints[i] for i in keep]
    images = [cuts[j] + tr[i] for j, i in enumerate(keep)]
    return _from_pieces(cuts, images)


def monodromy(f: IET) -> Permutation:
    return f.rho


def power(f: IET, k: int) -> IET:
    """``f^k`` (reduced); negative ``k`` uses the inverse."""
    if k < 0:
        return power(invert(f), -k)
    out = identity()
    for _ in range(k):
        out = reduce(compose(f, out))
    return out
