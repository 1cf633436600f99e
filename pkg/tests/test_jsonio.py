import random
from fractions import Fraction

import pytest

from ietlab.errors import MalformedInput, ValidationError
from ietlab.exact import QuadNumber, qn, sqrt
from ietlab.iet import f_LS, rotation
from ietlab.jsonio import (
    dumps,
    iet_from_json,
    iet_to_json,
    loads,
    points_from_json,
    points_to_json,
    quad_from_json,
    quad_to_json,
)
from ietlab.sampling import random_iet


def test_number_forms():
    beta = qn(Fraction(-1, 2), Fraction(1, 2), 3)
    assert quad_to_json(beta) == {"a": "-1/2", "b": "1/2", "d": 3}
    assert quad_from_json({"a": "-1/2", "b": "1/2", "d": 3}) == beta
    assert quad_from_json("-1/2 + 1/2*sqrt(3)") == beta
    assert quad_from_json("3/4") == Fraction(3, 4)
    assert quad_from_json(2) == 2
    assert quad_from_json({"a": "1/3"}) == Fraction(1, 3)
    # square factors of the radicand are pulled out
    assert quad_from_json({"a": "0", "b": "1", "d": 12}) == 2 * sqrt(3)


@pytest.mark.parametrize(
    "bad",
    [0.5, True, None, {"a": 0.5}, {"a": "1", "b": "1", "d": 1}, {"a": "1", "x": 2}, "1/0", "sqrt(", {"b": "1"}],
)
def test_number_rejects(bad):
    with pytest.raises(MalformedInput):
        quad_from_json(bad)


def test_iet_round_trip():
    rng = random.Random(2)
    for _ in range(50):
        f = random_iet(rng, rng.randint(1, 6), rng.choice([2, 3, 5]))
        assert iet_from_json(loads(dumps(iet_to_json(f)))).same_presentation(f)


def test_iet_with_labels():
    # pi0 = (2, 1), pi1 = (1, 2): lengths are listed per label
    doc = {"pi0": [2, 1], "pi1": [1, 2], "lengths": ["2/3", "1/3"]}
    f = iet_from_json(doc)
    assert f.rho == (2, 1) and f.lengths == (Fraction(1, 3), Fraction(2, 3))


@pytest.mark.parametrize(
    "doc",
    [[], {"pi1": [2, 1]}, {"pi1": [2, 1], "lengths": "x"}, {"pi1": [2, 1.0], "lengths": ["1/2", "1/2"]},
     {"n": 3, "pi1": [2, 1], "lengths": ["1/2", "1/2"]}],
)
def test_iet_rejects_malformed(doc):
    with pytest.raises(MalformedInput):
        iet_from_json(doc)


def test_iet_rejects_invalid():
    with pytest.raises(ValidationError):
        iet_from_json({"pi1": [2, 1], "lengths": ["1/2", "1/3"]})


def test_points():
    pts = [QuadNumber(0), sqrt(2) - 1]
    assert points_from_json(loads(dumps(points_to_json(pts)))) == pts
    assert points_from_json({"points": ["1/2"]}) == [Fraction(1, 2)]
    with pytest.raises(MalformedInput):
        points_from_json("1/2")


def test_dumps_is_canonical():
    doc = iet_to_json(f_LS(2, 2))
    assert dumps(doc) == dumps(loads(dumps(doc)))
    assert dumps({"b": 1, "a": 2}).index('"a"') < dumps({"b": 1, "a": 2}).index('"b"')


def test_loads_rejects_garbage():
    with pytest.raises(MalformedInput):
        loads("{not json")


def test_rotation_doc():
    assert iet_to_json(rotation(Fraction(1, 3)))["lengths"] == [
        {"a": "2/3", "b": "0", "d": 0},
        {"a": "1/3", "b": "0", "d": 0},
    ]
