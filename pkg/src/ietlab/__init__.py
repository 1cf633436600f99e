"""Exact interval exchange transformations, discrepancy and classification."""

from .exact import QuadNumber, Rational, cf_expand, parse_quad, qn, qn_floor, qn_sign, sqrt
from .iet import (
    IET,
    compose,
    conjugate,
    evaluate,
    evaluate_inverse,
    f_LS,
    identity,
    invert,
    monodromy,
    new_iet,
    orbit,
    power,
    reduce,
    rotation,
)

__all__ = [
    "IET",
    "QuadNumber",
    "Rational",
    "cf_expand",
    "compose",
    "conjugate",
    "evaluate",
    "evaluate_inverse",
    "f_LS",
    "identity",
    "invert",
    "monodromy",
    "new_iet",
    "orbit",
    "parse_quad",
    "power",
    "qn",
    "qn_floor",
    "qn_sign",
    "reduce",
    "rotation",
    "sqrt",
]
