from itertools import permutations

import pytest

from ietlab.combinatorics import (
    count_report,
    enumerate_admissible,
    is_strongly_separating,
    strongly_separating_not_admissible,
)
from ietlab.errors import TooLarge
from ietlab.worked import ADMISSIBLE_4


def brute_admissible(n):
    # filter all n! permutations by the prefix condition directly
    out = []
    for p in permutations(range(1, n + 1)):
        if not any(set(p[:k]) == set(range(1, k + 1)) for k in range(1, n)):
            out.append(p)
    return out


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    assert enumerate_admissible(n) == brute_admissible(n)


def test_known_counts():
    # indecomposable permutations: 1, 1, 3, 13, 71, 461, 3447
    assert [len(enumerate_admissible(n)) for n in range(1, 8)] == [1, 1, 3, 13, 71, 461, 3447]


def test_n4_list_and_n2():
    assert set(enumerate_admissible(4)) == set(ADMISSIBLE_4)
    assert enumerate_admissible(2) == [(2, 1)]


def test_guard():
    with pytest.raises(TooLarge):
        enumerate_admissible(11)
    with pytest.raises(TooLarge):
        count_report(11)


@pytest.mark.parametrize(
    "rho, expected, cond",
    [((4, 3, 2, 1), True, None), ((3, 4, 2, 1), False, 1), ((4, 2, 5, 3, 1), True, None), ((2, 4, 1, 3), False, 2), ((3, 1, 4, 2), False, 3)],
)
def test_strong_separation_examples(rho, expected, cond):
    s = is_strongly_separating(rho)
    assert bool(s) is expected and s.condition == cond


def test_separation_witness_index():
    s = is_strongly_separating((3, 4, 2, 1))
    assert (s.condition, s.index) == (1, 1)
    s = is_strongly_separating((2, 4, 1, 3))
    assert s.condition == 2 and s.index == 2


@pytest.mark.parametrize("n, adm, ss", [(4, 13, 1), (5, 71, 21), (6, 461, 126)])
def test_count_report(n, adm, ss):
    r = count_report(n)
    assert (r.admissible, r.strongly_separating) == (adm, ss)


def test_only_4321_separates_at_n4():
    assert [r for r in enumerate_admissible(4) if is_strongly_separating(r)] == [(4, 3, 2, 1)]


@pytest.mark.parametrize("n, count", [(2, 0), (3, 2), (4, 3), (5, 19), (6, 90)])
def test_separating_but_not_admissible(n, count):
    # strong separation does not imply admissibility; freeze the observed counterexamples
    bad = strongly_separating_not_admissible(n)
    assert len(bad) == count
    adm = set(brute_admissible(n))
    assert not adm & set(bad)
    assert (2, 1, 4, 3) in strongly_separating_not_admissible(4)
