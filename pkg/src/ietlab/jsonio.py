"""JSON encoding of numbers, point sets and IETs.

Numbers are ``{"a": "p/q", "b": "r/s", "d": n}``; a bare string is read as a
rational ``"p/q"`` or as the text form ``"a + b*sqrt(d)"``.  Floats are
refused everywhere on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from .errors import MalformedInput
from .exact import QuadNumber, parse_quad
from .iet import IET, new_iet


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def quad_to_json(x: QuadNumber) -> dict:
    return {"a": _frac_str(x.a), "b": _frac_str(x.b), "d": x.d}


def _frac_from(v: Any, what: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise MalformedInput(f"{what}: expected an exact integer or 'p/q' string, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"{what}: bad rational {v!r}") from exc
    raise MalformedInput(f"{what}: expected a rational, got {type(v).__name__}")


def quad_from_json(v: Any) -> QuadNumber:
    if isinstance(v, dict):
        if set(v) - {"a", "b", "d"} or "a" not in v:
            raise MalformedInput(f"number object needs keys a, b, d; got {sorted(v)}")
        d = v.get("d", 0)
        if isinstance(d, bool) or not isinstance(d, int):
            raise MalformedInput(f"radicand must be an integer, got {d!r}")
        b = _frac_from(v.get("b", 0), "b")
        if b and d <= 1:
            raise MalformedInput(f"radicand {d} is not a positive non-square")
        try:
            return QuadNumber(_frac_from(v["a"], "a"), b, d)
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc
    if isinstance(v, str):
        try:
            return parse_quad(v)
        except ValueError as exc:
            raise MalformedInput(str(exc)) from exc
    if isinstance(v, int) and not isinstance(v, bool):
        return QuadNumber(v)
    raise MalformedInput(f"cannot read a number from {v!r}")


def iet_to_json(f: IET) -> dict:
    return {
        "n": f.n,
        "pi0": list(range(1, f.n + 1)),
        "pi1": list(f.rho),
        "lengths": [quad_to_json(v) for v in f.lengths],
    }


def _int_list(v: Any, what: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in v):
        raise MalformedInput(f"{what} must be a list of integers")
    return v


def iet_from_json(doc: Any) -> IET:
    if not isinstance(doc, dict):
        raise MalformedInput("an IET document must be an object")
    missing = {"pi1", "lengths"} - set(doc)
    if missing:
        raise MalformedInput(f"IET document lacks {sorted(missing)}")
    pi1 = _int_list(doc["pi1"], "pi1")
    pi0 = _int_list(doc["pi0"], "pi0") if doc.get("pi0") is not None else None
    if not isinstance(doc["lengths"], list):
        raise MalformedInput("lengths must be a list")
    lengths = [quad_from_json(v) for v in doc["lengths"]]
    if "n" in doc and doc["n"] != len(pi1):
        raise MalformedInput(f"n = {doc['n']} but pi1 has {len(pi1)} entries")
    return new_iet(pi0, pi1, lengths)


def points_to_json(points: Iterable[QuadNumber]) -> list:
    return [quad_to_json(p) for p in points]


def points_from_json(doc: Any) -> list[QuadNumber]:
    if isinstance(doc, dict) and "points" in doc:
        doc = doc["points"]
    if not isinstance(doc, list):
        raise MalformedInput("a point set must be a list (or an object with 'points')")
    return [quad_from_json(v) for v in doc]


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
