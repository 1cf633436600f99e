import random
from fractions import Fraction

import pytest

from ietlab.classification import (
    classify_4iet,
    conjugation_fd_invariance,
    discontinuity_set,
    fundamental_discontinuities,
    is_periodic,
    keane_check,
    ld_criterion_3iet,
    ld_criterion_rotation,
    maximal_chains,
    nu_3iet,
    power_discontinuous_at,
    reduce_via_rotation,
)
from ietlab.errors import NotFourIntervals, NotThreeIntervals
from ietlab.exact import QuadNumber, qn, sqrt
from ietlab.iet import IET, conjugate, evaluate, evaluate_inverse, f_LS, identity, invert, power, reduce, rotation
from ietlab.sampling import random_iet, random_keane_iet

BETA = qn(Fraction(-1, 2), Fraction(1, 2), 3)
B2 = BETA * BETA
F22 = f_LS(2, 2)
QUARTERS = IET((4, 3, 2, 1), tuple(QuadNumber(Fraction(1, 4)) for _ in range(4)))


@pytest.fixture(scope="module")
def witness():
    # a (4,3,2,1) instance meeting both hypotheses of the "new" verdict
    rng = random.Random(7)
    while True:
        f = random_keane_iet(rng, (4, 3, 2, 1), d=2, M=1000)
        if power_discontinuous_at(f, evaluate_inverse(f, 0), 2):
            return f


# -- discontinuities and Keane -------------------------------------------------


def test_discontinuity_set_examples():
    assert discontinuity_set(identity()) == []
    assert discontinuity_set(rotation(Fraction(1, 3))) == [Fraction(2, 3)]
    assert discontinuity_set(F22) == [BETA, 2 * BETA, 2 * BETA + B2]


def test_discontinuities_are_jumps():
    # one-sided translation amounts differ at every reported point
    for x in discontinuity_set(F22):
        assert power_discontinuous_at(F22, x, 1)


def test_keane_rational_violated():
    v = keane_check(QUARTERS, 100)
    assert not v.verified and v.M <= 4
    assert str(v).startswith("violated(")


def test_keane_half_rotation():
    v = keane_check(rotation(Fraction(1, 2)), 10)
    assert not v.verified and v.M == 1


def test_keane_f22_has_a_connection():
    # f22 sends its second interior breakpoint straight onto the third
    v = keane_check(F22, 10_000)
    assert (v.status, v.M, v.alpha, v.beta) == ("violated", 1, 3, 4)
    assert evaluate(F22, 2 * BETA) == 2 * BETA + B2


def test_keane_irrational_rotation():
    v = keane_check(rotation(sqrt(2) - 1), 2000)
    assert v.verified and str(v) == "verified_up_to(2000)"


def test_keane_identity_and_horizon():
    assert not keane_check(identity(), 5).verified
    with pytest.raises(ValueError):
        keane_check(F22, 0)


def test_is_periodic():
    assert is_periodic(rotation(Fraction(2, 7)), QuadNumber(0), 7)
    assert not is_periodic(rotation(Fraction(2, 7)), QuadNumber(0), 6)
    assert not is_periodic(rotation(sqrt(2) - 1), QuadNumber(0), 500)


# -- chains --------------------------------------------------------------------


def test_chains_rotation_third():
    (c,) = maximal_chains(rotation(Fraction(1, 3)), 100)
    assert c.points == (Fraction(2, 3), 0)
    assert c.periodic and c.start_in_D and not c.end_in_D


def test_chains_identity():
    (c,) = maximal_chains(identity(), 10)
    assert c.points == (0,)


@pytest.mark.parametrize("f", [F22, reduce(conjugate(invert(rotation(BETA)), F22)), rotation(sqrt(3) - 1)])
def test_chain_invariants(f):
    r = reduce(f)
    universe = set(discontinuity_set(r)) | {QuadNumber(0)}
    covered = set()
    for c in maximal_chains(r, 1000):
        for a, b in zip(c.points, c.points[1:]):
            assert evaluate(r, a) == b
        covered |= universe & set(c.points)
        if not c.truncated:
            assert c.points[0] in universe and c.points[-1] in universe
    assert covered == universe


# -- fundamental discontinuities -------------------------------------------------


def test_fd_irrational_rotation():
    # the single discontinuity 2 - sqrt(2) maps to 0 and f^2 is continuous
    # there, so the one fundamental point is 0 itself
    rep = fundamental_discontinuities(rotation(sqrt(2) - 1), 1000)
    assert rep.discontinuities == (2 - sqrt(2),)
    assert rep.count_excluding_zero == 0
    assert rep.count_including_zero == rep.count == 1


def test_fd_identity():
    rep = fundamental_discontinuities(identity(), 10)
    assert rep.count == 0 and rep.discontinuities == ()


def test_fd_generic_three_iet():
    f = random_keane_iet(random.Random(3), (3, 2, 1), d=2, M=1000)
    rep = fundamental_discontinuities(f, 1000)
    assert rep.count_excluding_zero <= 3
    assert set(rep.fundamental) <= set(rep.discontinuities)


def test_fd_f22_frozen():
    # the connection found by the Keane check glues chains together
    rep = fundamental_discontinuities(F22, 1000)
    assert (rep.count_excluding_zero, rep.count) == (0, 1)
    red = reduce(conjugate(invert(rotation(BETA)), F22))
    assert fundamental_discontinuities(red, 1000).count == rep.count


def test_fd_witness_four(witness):
    rep = fundamental_discontinuities(witness, 1000)
    assert rep.count_excluding_zero == 3
    assert rep.count_including_zero == 4


def test_fd_report_consistency(witness):
    rep = fundamental_discontinuities(witness, 1000)
    for x in rep.fundamental:
        c = rep.chain_per_point[x]
        assert c.points[0] == x
        assert power_discontinuous_at(witness, x, len(c))


def test_power_discontinuity_matches_power_iet(witness):
    # cross-check the itinerary test against the breakpoints of the power map
    for N in (1, 2, 3):
        bps = set(reduce(power(witness, N)).breakpoints[1:-1])
        for x in discontinuity_set(witness):
            assert power_discontinuous_at(witness, x, N) == (x in bps)
    with pytest.raises(ValueError):
        power_discontinuous_at(witness, QuadNumber(0), 2)


def test_fd_invariance_examples():
    assert conjugation_fd_invariance(F22, identity(), 1000).equal
    inv = conjugation_fd_invariance(F22, invert(rotation(BETA)), 1000)
    assert inv.equal and inv.fd_f == inv.fd_conj


def test_fd_invariance_random_rotations():
    rng = random.Random(11)
    for _ in range(15):
        f = random_keane_iet(rng, rng.choice([(3, 2, 1), (4, 3, 2, 1), (2, 4, 1, 3)]), d=2, M=300)
        z = random_iet(rng, 2, 2).lengths[0]
        g = rotation(z) if rng.random() < 0.5 else invert(rotation(z))
        assert conjugation_fd_invariance(f, g, 1000).equal


# -- rotation search -------------------------------------------------------------


def test_reduce_via_rotation_f22():
    found = reduce_via_rotation(F22)
    assert found is not None and len(found.reduced) == 3
    assert reduce(conjugate(found.conjugator, F22)).same_presentation(found.reduced)


def test_reduce_via_rotation_plain_merge():
    h = IET((3, 4, 2, 1), (BETA, B2, B2, BETA))
    found = reduce_via_rotation(h)
    assert found.z == 0 and len(found.reduced) == 3


def test_reduce_via_rotation_witness_fails(witness):
    assert reduce_via_rotation(witness) is None


# -- low discrepancy ---------------------------------------------------------------


@pytest.mark.parametrize(
    "z, verdict",
    [(Fraction(3, 7), "no"), (sqrt(2) - 1, "yes"), ((sqrt(5) - 1) / 2, "yes"), (BETA, "yes")],
)
def test_ld_rotation(z, verdict):
    assert ld_criterion_rotation(z) == verdict


def test_ld_3iet_examples():
    f = IET((3, 2, 1), (BETA, BETA, 2 * B2))
    assert nu_3iet(f) == 2 * sqrt(3) - 3 == (1 - BETA) / (1 + BETA)
    assert ld_criterion_3iet(f) == "yes"
    g = IET((3, 2, 1), tuple(QuadNumber(v) for v in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))))
    assert nu_3iet(g) == Fraction(2, 5) and ld_criterion_3iet(g) == "no"
    h = IET((2, 3, 1), (BETA, BETA, 2 * B2))
    assert ld_criterion_3iet(h) == "not_applicable"
    with pytest.raises(NotThreeIntervals):
        ld_criterion_3iet(F22)


def test_ld_reduced_f22():
    red = reduce(conjugate(invert(rotation(BETA)), F22))
    assert red.lengths == (BETA, B2, QuadNumber(Fraction(1, 2)))
    assert nu_3iet(red) == (9 - sqrt(3)) / 13
    assert ld_criterion_3iet(red) == "yes"


# -- classification --------------------------------------------------------------


def test_classify_middle_case_old():
    f = conjugate(invert(rotation(2 * BETA)), F22)
    c = classify_4iet(f, 1000, 200)
    assert (c.verdict, c.low_discrepancy, c.ld_tag) == ("old", "yes", "3iet-criterion")
    # the witness replays exactly
    assert reduce(conjugate(c.conjugator, f)).same_presentation(c.reduced)
    assert len(c.reduced) < 4


def test_classify_rational_4321():
    c = classify_4iet(QUARTERS, 1000, 100)
    assert (c.verdict, c.low_discrepancy, c.ld_tag) == ("unknown", "no", "finite-order")
    assert not c.keane.verified


def test_classify_witness_new(witness):
    c = classify_4iet(witness, 10_000, 1000)
    assert c.verdict == "new" and c.low_discrepancy == "undecided"
    assert c.keane.verified and c.evidence.count_including_zero == 4


def test_classify_requires_four():
    with pytest.raises(NotFourIntervals):
        classify_4iet(rotation(BETA))
