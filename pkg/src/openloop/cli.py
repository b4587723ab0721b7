"""Command-line front end: solve, verify, character, sumrule.

Exact values cross the boundary as strings: rationals like "5" or
"-3/7", or full field elements as colon-separated coefficient 4-tuples
like "0:1:0:0".  Output is JSON (schemaVersion 1) or CSV; every run
with the same flags and seed prints byte-identical text.

Exit codes: 0 success, 1 argument or parse error, 2 non-generic point
(degenerate fixed space, confluent character arguments), 3 singular
parameter (an operator pole at the given values).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from .chars import character_auto, symplectic_character, z_product
from .errors import (
    ConfluentPointError,
    ConsistencyError,
    ConventionError,
    NonGenericPointError,
    SingularParameterError,
)
from .exactfield import IMAG, ONE, Scalar
from .groundstate import GroundstateVector, solve, sum_components
from .transfer import SpectralPoint
from .verify import SUITE_NAMES, run_suite

SCHEMA_VERSION = "1"

_S_CHOICES = {"1": ONE, "-1": -ONE, "i": IMAG, "-i": -IMAG}


class _CliError(Exception):
    """Bad arguments or unparsable values; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _CliError(message)


def parse_scalar(text: str) -> Scalar:
    """A rational "p", "p/d", or a coefficient 4-tuple "a:b:c:d"."""
    text = text.strip()
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 4:
                raise ValueError("coefficient tuples need exactly 4 entries")
            return Scalar(tuple(Fraction(p) for p in parts))
        return Scalar.from_rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(f"cannot parse scalar {text!r}: {exc}") from None


def parse_scalar_list(text: str) -> list[Scalar]:
    if not text.strip():
        return []
    return [parse_scalar(part) for part in text.split(",")]


def _require_nonzero(name: str, value: Scalar) -> Scalar:
    if value.is_zero():
        raise _CliError(f"parameter {name} must be nonzero")
    return value


def _default_w(args) -> Scalar:
    """Deterministic small rational clear of every provided parameter."""
    from .groundstate import generic_parameters

    avoid = []
    fixed = list(getattr(args, "_zs", [])) + [args._zeta1, args._zeta2]
    for v in fixed:
        if v.is_rational():
            avoid.append(v.rational_value())
    (w,) = generic_parameters(random.Random(args.seed), 1, avoid=avoid)
    return w


def _build_point(args) -> SpectralPoint:
    zs = parse_scalar_list(args.z) if args.z else []
    if len(zs) != args.L:
        raise _CliError(f"--z must provide exactly L = {args.L} values, got {len(zs)}")
    for k, v in enumerate(zs, start=1):
        _require_nonzero(f"z_{k}", v)
    args._zs = zs
    args._zeta1 = _require_nonzero("zeta1", parse_scalar(args.zeta1))
    args._zeta2 = _require_nonzero("zeta2", parse_scalar(args.zeta2))
    w = parse_scalar(args.w) if args.w else _default_w(args)
    _require_nonzero("w", w)
    return SpectralPoint(tuple(zs), args._zeta1, args._zeta2, w, _S_CHOICES[args.s])


def _scalar_json(x: Scalar) -> list[str]:
    return [str(c) for c in x.coeffs]


def _point_json(pt: SpectralPoint) -> dict:
    return {
        "L": pt.length,
        "z": [_scalar_json(x) for x in pt.z],
        "zeta1": _scalar_json(pt.zeta1),
        "zeta2": _scalar_json(pt.zeta2),
        "w": _scalar_json(pt.w),
        "s": _scalar_json(pt.s),
    }


def _groundstate_json(gs: GroundstateVector) -> str:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "point": _point_json(gs.point),
        "normalization": gs.normalization,
        "components": {word: _scalar_json(x) for word, x in gs.as_dict().items()},
    }
    return json.dumps(doc, indent=2)


def _groundstate_csv(gs: GroundstateVector) -> str:
    lines = ["pattern,c0,c1,c2,c3"]
    for word, x in gs.as_dict().items():
        lines.append(",".join([word] + [str(c) for c in x.coeffs]))
    return "\n".join(lines)


def fmt_scalar(x: Scalar) -> str:
    """Rational as itself, anything else as the coefficient 4-tuple."""
    if x.is_rational():
        return str(x.rational_value())
    return "(" + ", ".join(str(c) for c in x.coeffs) + ")"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_solve(args) -> int:
    pt = _build_point(args)
    gs = solve(pt)
    out = _groundstate_csv(gs) if args.format == "csv" else _groundstate_json(gs)
    _emit(out, args.output)
    total = sum_components(gs)
    product = z_product(pt)
    print(f"component sum      = {fmt_scalar(total)}")
    print(f"character product  = {fmt_scalar(product)}")
    if gs.normalization == "raw":
        print("warning: every closed-form anchor vanished; raw normalization")
    return 0


def cmd_sumrule(args) -> int:
    pt = _build_point(args)
    gs = solve(pt)
    total = sum_components(gs)
    product = z_product(pt)
    print(f"component sum      = {fmt_scalar(total)}")
    print(f"character product  = {fmt_scalar(product)}")
    if total != product:
        print("sum rule FAILED")
        return 1
    print("sum rule holds")
    return 0


def cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, args.L, args.trials, args.seed)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    failed = 0
    for label, ok in report:
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        failed += 0 if ok else 1
    print(f"{len(report) - failed}/{len(report)} checks passed")
    return 0 if failed == 0 else 1


def cmd_character(args) -> int:
    try:
        lam = [int(part) for part in args.lam.split(",")] if args.lam.strip() else []
    except ValueError as exc:
        raise _CliError(f"cannot parse --lambda: {exc}") from None
    points = parse_scalar_list(args.points)
    for k, v in enumerate(points, start=1):
        _require_nonzero(f"point {k}", v)
    try:
        if args.confluent:
            value = character_auto(lam, points)
        else:
            value = symplectic_character(lam, points)
    except ConfluentPointError as exc:
        print(f"error: {exc}; re-run with --confluent", file=sys.stderr)
        return 2
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    print("(" + ", ".join(str(c) for c in value.coeffs) + ")")
    if value.is_rational():
        print(str(value.rational_value()))
    return 0


def _add_point_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--L", type=int, required=True, help="number of bulk sites")
    sub.add_argument("--z", default="", help="comma-separated z_1..z_L")
    sub.add_argument("--zeta1", default="2", help="left boundary parameter")
    sub.add_argument("--zeta2", default="3", help="right boundary parameter")
    sub.add_argument("--s", choices=sorted(_S_CHOICES), default="1",
                     help="fourth root of unity in the right reflection")
    sub.add_argument("--w", default="", help="auxiliary parameter (default: from seed)")
    sub.add_argument("--seed", type=int, default=0, help="seed for generated values")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="openloop", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    sol = subs.add_parser("solve", help="exact groundstate at a spectral point")
    _add_point_flags(sol)
    sol.add_argument("--format", choices=("json", "csv"), default="json")
    sol.add_argument("--output", default="", help="write to this path instead of stdout")

    sr = subs.add_parser("sumrule", help="check the component sum against the product")
    _add_point_flags(sr)

    ver = subs.add_parser("verify", help="run a named identity suite")
    ver.add_argument("--suite", choices=SUITE_NAMES, required=True)
    ver.add_argument("--L", type=int, default=3)
    ver.add_argument("--trials", type=int, default=3)
    ver.add_argument("--seed", type=int, default=0)

    cha = subs.add_parser("character", help="evaluate one symplectic character")
    cha.add_argument("--lambda", dest="lam", required=True,
                     help="comma-separated partition, e.g. 1,0,0")
    cha.add_argument("--points", required=True, help="comma-separated arguments")
    cha.add_argument("--confluent", action="store_true",
                     help="allow colliding arguments via the substitution formula")
    return parser


_COMMANDS = {
    "solve": cmd_solve,
    "sumrule": cmd_sumrule,
    "verify": cmd_verify,
    "character": cmd_character,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "L", 0) < 0:
            raise _CliError("--L must be nonnegative")
        return _COMMANDS[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        NonGenericPointError,
        ConfluentPointError,
        ConventionError,
        ConsistencyError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SingularParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
