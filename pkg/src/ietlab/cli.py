"""Command-line front-end.

Every subcommand reads IETs and point sets as JSON (a path, or ``-`` for
stdin) and writes JSON with sorted keys, or CSV for tabular output.
Exit codes: 0 success, 2 invalid input, 3 input outside an operation's domain.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from typing import Any, Callable, Sequence

from . import classification as cls
from .combinatorics import enumerate_admissible, is_strongly_separating
from .discrepancy import discrepancy_profile, star_discrepancy, verify_bound
from .errors import DomainError, MalformedInput, ValidationError
from .exact import QuadNumber, parse_quad
from .iet import compose, conjugate, evaluate, evaluate_inverse, orbit, reduce
from .jsonio import (
    dumps,
    iet_from_json,
    iet_to_json,
    loads,
    points_from_json,
    points_to_json,
    quad_to_json,
)
from .sampling import random_admissible_iet, random_rational_points
from .worked import run_examples

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_DOMAIN = 0, 1, 2, 3


def _read(path: str) -> Any:
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc


def _number(text: str) -> QuadNumber:
    try:
        return parse_quad(text)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def _emit(obj: Any) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _emit_csv(header: Sequence[str], rows: list[Sequence[Any]]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


# -- IET operations ------------------------------------------------------------


def cmd_eval(args) -> int:
    f = iet_from_json(_read(args.iet))
    x = _number(args.x)
    y = evaluate_inverse(f, x) if args.inverse else evaluate(f, x)
    _emit({"x": quad_to_json(x), "y": quad_to_json(y), "inverse": args.inverse})
    return EXIT_OK


def cmd_orbit(args) -> int:
    f = iet_from_json(_read(args.iet))
    pts = orbit(f, _number(args.x0), args.n, include_x0=args.include_x0)
    _emit({"points": points_to_json(pts)})
    return EXIT_OK


def cmd_compose(args) -> int:
    h = compose(iet_from_json(_read(args.f)), iet_from_json(_read(args.g)))
    _emit(iet_to_json(reduce(h) if args.reduce else h))
    return EXIT_OK


def cmd_conjugate(args) -> int:
    h = conjugate(iet_from_json(_read(args.g)), iet_from_json(_read(args.f)), reduced=args.reduce)
    _emit(iet_to_json(h))
    return EXIT_OK


def cmd_reduce(args) -> int:
    _emit(iet_to_json(reduce(iet_from_json(_read(args.iet)))))
    return EXIT_OK


# -- combinatorics and classification ----------------------------------------------


def cmd_enumerate(args) -> int:
    rows = []
    for rho in enumerate_admissible(args.n):
        sep = is_strongly_separating(rho)
        if args.strongly_separating and not sep:
            continue
        rows.append((rho, sep))
    if args.format == "csv":
        _emit_csv(
            ["rho", "strongly_separating", "condition"],
            [(" ".join(map(str, r)), int(bool(s)), s.condition or "") for r, s in rows],
        )
    else:
        _emit({
            "n": args.n,
            "count": len(rows),
            "permutations": [{"rho": list(r), "strongly_separating": bool(s), "condition": s.condition} for r, s in rows],
        })
    return EXIT_OK


def _fd_json(rep: cls.FDReport) -> dict:
    chains = []
    seen = set()
    for c in rep.chain_per_point.values():
        if id(c) in seen:
            continue
        seen.add(id(c))
        chains.append({
            "start": quad_to_json(c.points[0]),
            "end": quad_to_json(c.points[-1]),
            "length": len(c),
            "periodic": c.periodic,
            "truncated": c.truncated,
        })
    return {
        "discontinuities": points_to_json(rep.discontinuities),
        "fundamental": points_to_json(rep.fundamental),
        "count_excluding_zero": rep.count_excluding_zero,
        "count_including_zero": rep.count_including_zero,
        "horizon": rep.horizon,
        "chains": chains,
    }


def cmd_classify(args) -> int:
    f = iet_from_json(_read(args.iet))
    c = cls.classify_4iet(f, args.keane_horizon, args.chain_horizon)
    out: dict = {
        "verdict": c.verdict,
        "low_discrepancy": c.low_discrepancy,
        "justification": c.ld_tag,
        "reason": c.reason,
        "keane": str(c.keane) if c.keane else None,
    }
    if c.conjugator is not None:
        out["conjugator"] = iet_to_json(c.conjugator)
        out["reduced"] = iet_to_json(c.reduced)
    if c.evidence is not None:
        out["fd_report"] = _fd_json(c.evidence)
    _emit(out)
    return EXIT_OK


# -- discrepancy ---------------------------------------------------------------


def cmd_discrepancy(args) -> int:
    rep = star_discrepancy(points_from_json(_read(args.points)))
    _emit({
        "N": rep.N,
        "d_star": quad_to_json(rep.d_star),
        "d_star_float": _fmt_float(rep.d_star_float),
        "argmax_index": rep.argmax_index,
    })
    return EXIT_OK


def cmd_verify_bound(args) -> int:
    f = iet_from_json(_read(args.iet))
    b = verify_bound(f, points_from_json(_read(args.points)))
    _emit({
        "n": b.n,
        "d_star_P": quad_to_json(b.d_star_P),
        "d_star_Pstar": quad_to_json(b.d_star_Pstar),
        "lower_ok": b.lower_ok,
        "upper_ok": b.upper_ok,
        "ratio_float": _fmt_float(b.ratio_float),
    })
    return EXIT_OK if b.lower_ok and b.upper_ok else EXIT_FAIL


def parse_checkpoints(text: str) -> list[int]:
    text = text.strip()
    try:
        if text.startswith("pow2:"):
            k = int(text[5:])
            return [2**i for i in range(1, k + 1)]
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise MalformedInput(f"bad checkpoint list {text!r}") from exc


def cmd_profile(args) -> int:
    f = iet_from_json(_read(args.iet))
    cps = parse_checkpoints(args.checkpoints)
    if not cps or any(c < 2 for c in cps) or cps != sorted(cps):
        raise MalformedInput("checkpoints must be ascending integers >= 2")
    prof = discrepancy_profile(f, _number(args.x0), cps)
    if args.format == "json":
        _emit({"profile": [
            {"N": p.N, "d_star": quad_to_json(p.d_star), "normalized": _fmt_float(p.normalized)} for p in prof
        ]})
    else:
        _emit_csv(["N", "d_star", "normalized"], [(p.N, str(p.d_star), _fmt_float(p.normalized)) for p in prof])
    return EXIT_OK


def cmd_bound_trials(args) -> int:
    """Randomized check of the image-discrepancy bound."""
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        f = random_admissible_iet(rng, rng.randint(2, args.max_n))
        pts = random_rational_points(rng, rng.randint(1, args.max_points))
        b = verify_bound(f, pts)
        failures += not (b.lower_ok and b.upper_ok)
    _emit({"seed": args.seed, "trials": args.trials, "failures": failures})
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_examples_paper(args) -> int:
    results = run_examples()
    for r in results:
        print(r.line())
    bad = sum(not r.ok for r in results)
    print(f"{len(results) - bad}/{len(results)} examples reproduced")
    return EXIT_OK if bad == 0 else EXIT_FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ietlab", description="Exact interval exchange transformations")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("eval", cmd_eval, "evaluate f (or its inverse) at a point")
    sp.add_argument("--iet", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--inverse", action="store_true")

    sp = add("orbit", cmd_orbit, "orbit f(x0), ..., f^n(x0)")
    sp.add_argument("--iet", required=True)
    sp.add_argument("--x0", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--include-x0", action="store_true", help="start the orbit at x0 itself")

    sp = add("compose", cmd_compose, "f o g on the common refinement")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--reduce", action="store_true")

    sp = add("conjugate", cmd_conjugate, "g o f o g^-1")
    sp.add_argument("--g", required=True)
    sp.add_argument("--f", required=True)
    sp.add_argument("--reduce", action="store_true")

    sp = add("reduce", cmd_reduce, "merge pieces with equal translation")
    sp.add_argument("--iet", required=True)

    sp = add("enumerate", cmd_enumerate, "admissible monodromy invariants")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--strongly-separating", action="store_true")
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = add("classify", cmd_classify, "old/new verdict for a 4-IET")
    sp.add_argument("--iet", required=True)
    sp.add_argument("--keane-horizon", type=int, default=cls.KEANE_HORIZON)
    sp.add_argument("--chain-horizon", type=int, default=cls.CHAIN_HORIZON)
    sp.add_argument("--format", choices=("json",), default="json")

    sp = add("discrepancy", cmd_discrepancy, "exact star-discrepancy of a point set")
    sp.add_argument("--points", required=True)

    sp = add("verify-bound", cmd_verify_bound, "compare D*(P) and D*(f(P))")
    sp.add_argument("--iet", required=True)
    sp.add_argument("--points", required=True)

    sp = add("profile", cmd_profile, "discrepancy growth along an orbit")
    sp.add_argument("--iet", required=True)
    sp.add_argument("--x0", required=True)
    sp.add_argument("--checkpoints", required=True, help="comma list, or pow2:K for 2,4,...,2^K")
    sp.add_argument("--format", choices=("json", "csv"), default="csv")

    sp = add("bound-trials", cmd_bound_trials, "randomized check of the discrepancy bound")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--max-points", type=int, default=64)

    add("examples-paper", cmd_examples_paper, "reproduce the published worked examples")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        _emit({"error": {"type": type(exc).__name__, "kind": "validation", "message": str(exc)}})
        return EXIT_INVALID
    except DomainError as exc:
        _emit({"error": {"type": type(exc).__name__, "kind": "domain", "message": str(exc)}})
        return EXIT_DOMAIN
    except ValueError as exc:
        _emit({"error": {"type": "ValueError", "kind": "validation", "message": str(exc)}})
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
