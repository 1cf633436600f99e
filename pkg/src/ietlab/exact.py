"""Exact arithmetic over Q and real quadratic fields Q(sqrt(d)).

Every length, point and translation in this package is a :class:`QuadNumber`
``a + b*sqrt(d)`` with rational ``a`` and ``b``.  Order comparisons reduce to
:func:`qn_sign`, which works on integers only, so no result ever depends on a
floating-point rounding decision.

Continued fractions of quadratic irrationals are computed on integer surd
states ``(P + sqrt(D)) / Q``; the expansion is eventually periodic and the
period is found by detecting the first repeated state.
"""

from __future__ import annotations

import decimal
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterator, Sequence, Union

from .errors import DivisionByZero, Exhausted, MixedField, NotIrrational

# Rationals are the stdlib Fraction; the alias documents intent in signatures.
Rational = Fraction

Number = Union["QuadNumber", Fraction, int]

_ZERO = Fraction(0)


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``d == s*s*r`` and ``r`` square-free."""
    if d < 0:
        raise ValueError(f"radicand must be non-negative, got {d}")
    if d < 2:
        return 1, d
    s, r = 1, d
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, r


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    if isinstance(v, _RationalABC):
        return Fraction(v.numerator, v.denominator)
    raise TypeError(f"cannot interpret {v!r} as a rational")


class QuadNumber:
    """The real number ``a + b*sqrt(d)``.

    ``d`` is square-free after construction; a value with ``b == 0`` always has
    ``d == 0`` so that equality and hashing are structural.
    """

    __slots__ = ("a", "b", "d", "_float")

    def __init__(self, a=0, b=0, d: int = 0):
        a = _as_fraction(a)
        b = _as_fraction(b)
        d = int(d)
        if b and d:
            s, d = _squarefree_split(d)
            if d == 1:
                a, b, d = a + b * s, _ZERO, 0
            elif s != 1:
                b = b * s
        else:
            b, d = _ZERO, 0
        self.a = a
        self.b = b
        self.d = d
        self._float = None

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadNumber":
        # trusted constructor: d already square-free, or b == 0 and d == 0
        obj = object.__new__(cls)
        if not b:
            b, d = _ZERO, 0
        obj.a = a
        obj.b = b
        obj.d = d
        obj._float = None
        return obj

    @classmethod
    def coerce(cls, v: Number) -> "QuadNumber":
        if isinstance(v, QuadNumber):
            return v
        return cls._raw(_as_fraction(v), _ZERO, 0)

    # -- structure -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def __repr__(self) -> str:
        if self.is_rational:
            return f"QuadNumber({self.a})"
        return f"QuadNumber({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        coeff = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        if not self.a:
            return f"{'-' if self.b < 0 else ''}{coeff}sqrt({self.d})"
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {coeff}sqrt({self.d})"

    def __hash__(self) -> int:
        if self.d == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadNumber):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.d == 0 and self.a == other
        return NotImplemented

    def __float__(self) -> float:
        f = self._float
        if f is None:
            if self.d == 0:
                f = float(self.a)
            else:
                f = float(self.a) + float(self.b) * math.sqrt(self.d)
            self._float = f
        return f

    def to_decimal(self, prec: int = 40) -> decimal.Decimal:
        with decimal.localcontext() as ctx:
            ctx.prec = prec + 10
            v = decimal.Decimal(self.a.numerator) / decimal.Decimal(self.a.denominator)
            if self.d:
                r = decimal.Decimal(self.d).sqrt()
                v += decimal.Decimal(self.b.numerator) / decimal.Decimal(self.b.denominator) * r
            ctx.prec = prec
            return +v

    def conjugate(self) -> "QuadNumber":
        """Galois conjugate ``a - b*sqrt(d)``."""
        return QuadNumber._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    # -- arithmetic ----------------------------------------------------

    def _field(self, other: "QuadNumber") -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise MixedField(f"cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))")

    def __add__(self, other):
        if not isinstance(other, QuadNumber):
            if isinstance(other, (int, Fraction)):
                return QuadNumber._raw(self.a + other, self.b, self.d)
            return NotImplemented
        d = self._field(other)
        return QuadNumber._raw(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if qn_sign(self) < 0 else self

    def __sub__(self, other):
        if not isinstance(other, QuadNumber):
            if isinstance(other, (int, Fraction)):
                return QuadNumber._raw(self.a - other, self.b, self.d)
            return NotImplemented
        d = self._field(other)
        return QuadNumber._raw(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadNumber._raw(other - self.a, -self.b, self.d)
        return NotImplemented

    def __mul__(self, other):
        if not isinstance(other, QuadNumber):
            if isinstance(other, (int, Fraction)):
                return QuadNumber._raw(self.a * other, self.b * other, self.d)
            return NotImplemented
        d = self._field(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QuadNumber._raw(a1 * a2 + b1 * b2 * d, a1 * b2 + b1 * a2, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadNumber":
        if not self.a and not self.b:
            raise DivisionByZero("division by zero")
        if self.d == 0:
            return QuadNumber._raw(1 / self.a, _ZERO, 0)
        n = self.norm()  # non-zero: sqrt(d) is irrational
        return QuadNumber._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, QuadNumber):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    raise DivisionByZero("division by zero")
                return QuadNumber._raw(self.a / other, self.b / other, self.d)
            return NotImplemented
        self._field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadNumber.coerce(other) * self.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        acc = QuadNumber._raw(Fraction(1), _ZERO, 0)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- order ---------------------------------------------------------

    def _cmp(self, other) -> int:
        if isinstance(other, QuadNumber):
            if other.d and self.d and other.d != self.d:
                raise MixedField(f"cannot compare Q(sqrt({self.d})) with Q(sqrt({other.d}))")
            return _sign_parts(self.a - other.a, self.b - other.b, self.d or other.d)
        if isinstance(other, (int, Fraction)):
            return _sign_parts(self.a - other, self.b, self.d)
        raise TypeError(f"cannot compare QuadNumber with {type(other).__name__}")

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)


def _sign_parts(a: Fraction, b: Fraction, d: int) -> int:
    if not b or not d:
        return (a > 0) - (a < 0)
    # clear denominators: sign(A + B*sqrt(d)) with integers A, B
    A = a.numerator * b.denominator
    B = b.numerator * a.denominator
    if A == 0:
        return 1 if B > 0 else -1
    if (A > 0) == (B > 0):
        return 1 if A > 0 else -1
    if A * A > B * B * d:
        return 1 if A > 0 else -1
    return 1 if B > 0 else -1


def qn(a=0, b=0, d: int = 0) -> QuadNumber:
    """Shorthand constructor."""
    return QuadNumber(a, b, d)


def sqrt(d: int) -> QuadNumber:
    return QuadNumber(0, 1, d)


def qn_sign(x: Number) -> int:
    """Exact sign of ``x`` in {-1, 0, 1}."""
    x = QuadNumber.coerce(x)
    return _sign_parts(x.a, x.b, x.d)


def qn_arith(x: Number, y: Number, op: str) -> QuadNumber:
    x = QuadNumber.coerce(x)
    y = QuadNumber.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qn_floor(x: Number) -> int:
    """The integer ``n`` with ``n <= x < n + 1``.

    A floating-point guess is certified with :func:`qn_sign` against ``n`` and
    ``n + 1``; if certification fails the guess is redone at higher decimal
    precision.
    """
    x = QuadNumber.coerce(x)
    if x.d == 0:
        return math.floor(x.a)
    prec = 0
    while True:
        try:
            if prec == 0:
                n = math.floor(float(x))
            else:
                n = int(x.to_decimal(prec).to_integral_value(decimal.ROUND_FLOOR))
        except (OverflowError, ValueError):
            n = None
        if n is not None:
            for cand in (n, n - 1, n + 1):
                if qn_sign(x - cand) >= 0 and qn_sign(x - (cand + 1)) < 0:
                    return cand
        prec = max(2 * prec, 50)


_RAT = r"\d+(?:/\d+)?"
_QN_TEXT = re.compile(
    rf"^(?P<a>[+-]?{_RAT})?(?:(?P<sign>[+-])?(?P<b>{_RAT})?\*?sqrt\((?P<d>\d+)\))?$"
)


def parse_quad(text: str) -> QuadNumber:
    """Parse ``"p/q"``, ``"p/q + r/s*sqrt(d)"``, ``"-r/s*sqrt(d)"`` and the like."""
    m = _QN_TEXT.match(re.sub(r"\s+", "", text))
    if not m or (m.group("a") is None and m.group("d") is None):
        raise ValueError(f"cannot parse quadratic number {text!r}")
    if re.search(r"/0+(?!\d)", m.group(0)):
        raise ValueError(f"zero denominator in {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else _ZERO
    if m.group("d") is None:
        return QuadNumber(a)
    if m.group("sign") is None:
        # no additive split: a leading signed rational is the coefficient
        if m.group("b") is not None:
            raise ValueError(f"missing operator before {m.group('b')!r} in {text!r}")
        b, a = (a if m.group("a") else Fraction(1)), _ZERO
    else:
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
    return QuadNumber(a, b, int(m.group("d")))


# -- continued fractions ----------------------------------------------------


@dataclass(frozen=True)
class Surd:
    """The quadratic irrational ``(P + sqrt(D)) / Q`` with ``Q | D - P**2``."""

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("Q must be non-zero")
        r = math.isqrt(self.D)
        if self.D <= 0 or r * r == self.D:
            raise ValueError(f"D must be a positive non-square, got {self.D}")
        if (self.D - self.P * self.P) % self.Q:
            raise ValueError("Q must divide D - P^2")

    @classmethod
    def from_quad(cls, x: QuadNumber) -> "Surd":
        if x.d == 0 or not x.b:
            raise NotIrrational(f"{x} is rational")
        # minimal polynomial A t^2 + B t + C with coprime integers, A > 0
        two_a = 2 * x.a
        c0 = x.a * x.a - x.b * x.b * x.d
        den = math.lcm(two_a.denominator, c0.denominator)
        A, B, C = den, -two_a.numerator * (den // two_a.denominator), c0.numerator * (den // c0.denominator)
        g = math.gcd(math.gcd(A, B), C)
        A, B, C = A // g, B // g, C // g
        # roots (-B +- sqrt(B^2 - 4AC)) / 2A; the sign of b picks the root
        D = B * B - 4 * A * C
        if x.b > 0:
            return cls(-B, 2 * A, D)
        return cls(B, -2 * A, D)

    def floor(self) -> int:
        s = math.isqrt(self.D)
        if self.Q > 0:
            return (self.P + s) // self.Q
        return (self.P + s + 1) // self.Q

    def step(self) -> tuple[int, "Surd"]:
        """Split off the integer part: ``x = a + 1/x'``."""
        a = self.floor()
        P = a * self.Q - self.P
        Q = (self.D - P * P) // self.Q
        return a, Surd(P, Q, self.D)


@dataclass(frozen=True)
class CFExpansion:
    """Continued fraction ``[a_0; a_1, ...]``, eventually periodic when infinite."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()
    finite: bool = False

    def __post_init__(self):
        if not self.preperiod and not self.period:
            raise ValueError("empty expansion")
        if self.finite == bool(self.period):
            raise ValueError("finite expansions have no period and vice versa")
        if any(q < 1 for q in (self.preperiod[1:] + self.period)):
            raise ValueError("partial quotients after a_0 must be positive")

    def quotients(self) -> Iterator[int]:
        """All partial quotients, starting with ``a_0``."""
        yield from self.preperiod
        if self.period:
            while True:
                yield from self.period

    def __str__(self) -> str:
        head = ", ".join(map(str, self.preperiod[1:]))
        if self.period:
            per = ", ".join(map(str, self.period))
            head = f"{head}, ({per})" if head else f"({per})"
        return f"[{self.preperiod[0]}; {head}]" if head else f"[{self.preperiod[0]}]"


def cf_expand_rational(x) -> CFExpansion:
    x = _as_fraction(x)
    p, q = x.numerator, x.denominator
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return CFExpansion(tuple(out), (), True)


def cf_expand_quadratic(x: QuadNumber) -> CFExpansion:
    if not isinstance(x, QuadNumber) or x.is_rational:
        raise NotIrrational(f"{x} is rational")
    state = Surd.from_quad(x)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    while (state.P, state.Q) not in seen:
        seen[(state.P, state.Q)] = len(quotients)
        a, state = state.step()
        quotients.append(a)
    start = seen[(state.P, state.Q)]
    pre = quotients[:start]
    per = quotients[start:]
    if not pre:
        # keep a_0 out of the period so preperiod[0] is always the integer part
        pre = [per[0]]
        per = per[1:] + per[:1]
    return CFExpansion(tuple(pre), tuple(per), False)


def cf_expand(x: Number) -> CFExpansion:
    x = QuadNumber.coerce(x)
    if x.is_rational:
        return cf_expand_rational(x.a)
    return cf_expand_quadratic(x)


def cesaro_profile(e: CFExpansion, m_max: int) -> list[Fraction]:
    """Cesaro means ``(1/m) * sum(a_1..a_m)`` for ``m = 1..m_max``."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    if e.finite and len(e.preperiod) - 1 < m_max:
        raise Exhausted(f"expansion has only {len(e.preperiod) - 1} quotients after a_0")
    it = e.quotients()
    next(it)
    out, total = [], 0
    for m in range(1, m_max + 1):
        total += next(it)
        out.append(Fraction(total, m))
    return out


@dataclass(frozen=True)
class Boundedness:
    """Outcome of :func:`has_bounded_partial_quotients`.

    ``status`` is ``"yes"`` (with ``sup``) or ``"finite"``.  Expansions this
    package can produce are finite or eventually periodic, so ``"no"`` is
    reserved and never returned.
    """

    status: str
    sup: int | None = None


def has_bounded_partial_quotients(e: CFExpansion) -> Boundedness:
    if e.finite:
        return Boundedness("finite")
    return Boundedness("yes", max(e.preperiod[1:] + e.period))


def convergents(quotients: Sequence[int]) -> list[Fraction]:
    h0, h1, k0, k1 = 0, 1, 1, 0
    out = []
    for a in quotients:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        out.append(Fraction(h1, k1))
    return out


def sorted_exact(values: Sequence[QuadNumber]) -> list[QuadNumber]:
    """Sort exactly.

    Values are ordered by their float approximations first; every adjacent
    pair is then certified with an exact comparison, falling back to a fully
    exact sort if any pair is out of order.
    """
    out = sorted(values, key=float)
    for i in range(len(out) - 1):
        if out[i] > out[i + 1]:
            from functools import cmp_to_key

            return sorted(values, key=cmp_to_key(lambda u, v: QuadNumber.coerce(u)._cmp(v)))
    return out


def max_exact(values: Sequence[QuadNumber]) -> tuple[int, QuadNumber]:
    """Index and value of the first maximum, compared exactly."""
    best_i, best = 0, values[0]
    for i in range(1, len(values)):
        if values[i] > best:
            best_i, best = i, values[i]
    return best_i, best
