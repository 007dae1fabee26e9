"""Command-line front end.

Scalar syntax at the CLI boundary: a rational (``-2``, ``5/2``) optionally
combined with generic symbol terms (``tau``, ``sigma``), e.g. ``1/2+tau``,
``-5/2-tau``, ``2-3/2*sigma``.  Exactly the two symbol names tau and sigma
are accepted.  Every scalar the tool prints re-parses to an equal value.
Values starting with ``-`` are safest passed as ``--z1=-5/2``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import ExactScalar
from .gk import gk_dimension
from .harness import (
    GridSpec,
    SweepRow,
    grid_from_spec,
    render_diagram,
    report_to_csv,
    report_to_json,
    row_record,
    standard_grid,
    sweep,
    verify_family,
)
from .rootdata import LieType, ParabolicSetup
from .tableaux import render_tableau, rs_shape, rs_tableau
from .verdict import evaluate

GENERIC_NAMES = ("tau", "sigma")


def parse_scalar(text: str) -> ExactScalar:
    """Parse the CLI scalar syntax into an ExactScalar."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    tokens = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-" and s[i - 1] not in "+-*/":
            tokens.append(s[start:i])
            start = i
    tokens.append(s[start:])
    rational = Fraction(0)
    generic: dict[str, Fraction] = {}
    for tok in tokens:
        sign = Fraction(1)
        body = tok
        if body and body[0] in "+-":
            sign = Fraction(-1) if body[0] == "-" else Fraction(1)
            body = body[1:]
        if not body:
            raise ValueError(f"bad scalar {text!r}")
        name = None
        for candidate in GENERIC_NAMES:
            if body == candidate:
                name, coeff = candidate, Fraction(1)
                break
            if body.endswith("*" + candidate):
                name, coeff = candidate, Fraction(body[: -len(candidate) - 1])
                break
        if name is not None:
            generic[name] = generic.get(name, Fraction(0)) + sign * coeff
        else:
            try:
                rational += sign * Fraction(body)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad scalar {text!r}: {exc}") from None
    return ExactScalar(rational, generic)


def format_scalar(value: ExactScalar) -> str:
    return str(value)


def _setup_from_args(args) -> ParabolicSetup:
    return ParabolicSetup(LieType(args.type, args.n), args.p, args.q)


def _add_setup_flags(parser):
    parser.add_argument("--type", required=True, choices=("A", "D"))
    parser.add_argument("--n", required=True, type=int)
    parser.add_argument("--p", required=True, type=int)
    parser.add_argument("--q", required=True, type=int)


def _add_parameter_flags(parser):
    parser.add_argument("--z1", required=True, type=parse_scalar)
    parser.add_argument("--z2", required=True, type=parse_scalar)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvmred",
        description="Reducibility of scalar generalized Verma modules for "
        "sl(n,C) and so(2n,C) with two removed simple roots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gkdim = sub.add_parser("gkdim", help="GK dimension and dim u at one point")
    _add_setup_flags(p_gkdim)
    _add_parameter_flags(p_gkdim)

    p_reduce = sub.add_parser("reduce", help="full verdict at one point")
    _add_setup_flags(p_reduce)
    _add_parameter_flags(p_reduce)
    p_reduce.add_argument("--format", choices=("text", "json"), default="text")

    p_rs = sub.add_parser("rs", help="insertion tableau and shape of a sequence")
    p_rs.add_argument("--seq", required=True, help="comma-separated scalars")

    p_sweep = sub.add_parser("sweep", help="evaluate a parameter grid")
    _add_setup_flags(p_sweep)
    p_sweep.add_argument("--grid", choices=("standard", "custom"), default="standard")
    p_sweep.add_argument("--lo", type=Fraction, help="custom grid lower bound")
    p_sweep.add_argument("--hi", type=Fraction, help="custom grid upper bound")
    p_sweep.add_argument("--step", type=Fraction, default=Fraction(1, 2))
    p_sweep.add_argument("--out", help="output path (default stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="criterion vs oracle over a family")
    p_verify.add_argument("--type", required=True, choices=("A", "D"))
    p_verify.add_argument("--max-n", required=True, type=int)

    p_diag = sub.add_parser("diagram", help="reducible-point diagram")
    _add_setup_flags(p_diag)
    p_diag.add_argument("--out", help="SVG output path")
    p_diag.add_argument("--ascii", action="store_true", help="print ASCII grid")

    return parser


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gkdim(args) -> int:
    setup = _setup_from_args(args)
    gk = gk_dimension(setup, args.z1, args.z2)
    print(f"gk={gk} dim_u={setup.dim_u}")
    return 0


def _cmd_reduce(args) -> int:
    setup = _setup_from_args(args)
    verdict = evaluate(setup, args.z1, args.z2)
    record = row_record(setup, SweepRow(args.z1, args.z2, verdict))
    if args.format == "json":
        print(json.dumps(record))
    else:
        print(" ".join(f"{key}={_text_value(value)}" for key, value in record.items()))
    return 0


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_rs(args) -> int:
    seq = tuple(parse_scalar(part) for part in args.seq.split(","))
    tableau = rs_tableau(seq)
    rendered = render_tableau(tableau)
    if rendered:
        print(rendered)
    print("shape: " + " ".join(str(p) for p in rs_shape(seq)))
    return 0


def _cmd_sweep(args) -> int:
    setup = _setup_from_args(args)
    if args.grid == "custom":
        if args.lo is None or args.hi is None:
            raise ValueError("custom grid needs --lo and --hi")
        grid = grid_from_spec(GridSpec(lo=args.lo, hi=args.hi, step=args.step))
    else:
        grid = standard_grid(setup)
    report = sweep(setup, grid)
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    report = verify_family(args.type, args.max_n)
    if report.mismatches:
        for setup, row in report.mismatches:
            record = row_record(setup, row)
            print(
                "mismatch " + " ".join(f"{k}={_text_value(v)}" for k, v in record.items())
            )
        print(
            f"verified {report.setups_checked} setups, {report.points_checked} points: "
            f"{len(report.mismatches)} mismatches"
        )
        return 1
    print(
        f"verified {report.setups_checked} setups, {report.points_checked} points: "
        "no mismatches"
    )
    return 0


def _cmd_diagram(args) -> int:
    setup = _setup_from_args(args)
    if bool(args.out) == bool(args.ascii):
        raise ValueError("diagram needs exactly one of --out FILE.svg or --ascii")
    report = sweep(setup, standard_grid(setup))
    if args.ascii:
        sys.stdout.write(render_diagram(report, "ascii"))
    else:
        _emit(render_diagram(report, "svg"), args.out)
    return 0


_COMMANDS = {
    "gkdim": _cmd_gkdim,
    "reduce": _cmd_reduce,
    "rs": _cmd_rs,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "diagram": _cmd_diagram,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
