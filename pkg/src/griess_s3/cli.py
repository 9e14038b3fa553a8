"""Command-line front end.

Every subcommand writes one JSON document (or Markdown for
``paper-report --format md``) to stdout.  Exit codes: 0 when every check
passes, 1 on a verification failure, 2 on bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__, fusion, series
from .ansatz import admissible_lambdas, audit_tabulated_constants, build_algebra, omega_1, virasoro_formula
from .exact import format_rational, parse_rational
from .griess import central_charge, dump_algebra, load_algebra
from .pipeline import full_report, highlights, lambda_summary, verify_algebra
from .report import expect, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r} ({exc})") from None


def _emit(doc: Any) -> None:
    print(json.dumps(render(doc), indent=2, ensure_ascii=False))


def cmd_solve_lambda(args: argparse.Namespace) -> int:
    _emit(lambda_summary())
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    lam = args.lam
    if lam not in admissible_lambdas():
        allowed = ", ".join(format_rational(x) for x in sorted(admissible_lambdas()))
        raise UsageError(f"lam = {format_rational(lam)} is not admissible (choose from {allowed})")
    alg = build_algebra(lam)
    dump_algebra(alg, args.out)
    _emit({
        "lambda": lam,
        "out": str(args.out),
        "dim": alg.dim,
        "basis": list(alg.basis_names),
        "charges": {
            "e": central_charge(alg["e"]),
            "omega_1": central_charge(omega_1(alg, lam)),
            "omega": central_charge(virasoro_formula(alg, lam)),
        },
    })
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        alg = load_algebra(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror or exc}") from None
    except ValueError as exc:
        raise UsageError(f"malformed algebra file {args.file}: {exc}") from None
    report = verify_algebra(alg)
    _emit({"file": str(args.file), "dim": alg.dim, "strict": args.strict, **report.as_dict()})
    return EXIT_OK if report.ok(args.strict) else EXIT_FAIL


def cmd_audit(args: argparse.Namespace) -> int:
    report = audit_tabulated_constants()
    _emit({"strict": args.strict, **report.as_dict()})
    return EXIT_OK if report.ok(args.strict) else EXIT_FAIL


def cmd_series(args: argparse.Namespace) -> int:
    if args.m is not None:
        if args.m < 0:
            raise UsageError("m must be non-negative")
        _emit(series.MinimalModelTable.of(args.m).as_dict())
        return EXIT_OK
    m = series.find_m(args.charge)
    if m is None:
        _emit({"m": None, "c": args.charge, "weights": None})
    else:
        _emit(series.MinimalModelTable.of(m).as_dict())
    return EXIT_OK


def cmd_fusion(args: argparse.Namespace) -> int:
    if args.file is not None:
        try:
            ring = fusion.FusionRing.from_json_dict(json.loads(Path(args.file).read_text()), str(args.file))
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror or exc}") from None
        except (ValueError, KeyError) as exc:
            raise UsageError(f"malformed fusion ring {args.file}: {exc}") from None
    else:
        ring = fusion.builtin(args.ring)
    doc: dict[str, Any] = ring.to_json_dict()
    code = EXIT_OK
    if args.check:
        report = fusion.verify(ring)
        if args.ring == "w3_4_5":
            bad = fusion.grading_violations(ring, fusion.W3_GRADING, 3)
            report.extend("grading", bad or [expect("Z/3 grading", True, anchor="grading")])
        doc["verification"] = report.as_dict()
        code = EXIT_OK if report.ok() else EXIT_FAIL
    _emit(doc)
    return code


def cmd_pairs(args: argparse.Namespace) -> int:
    ms = []
    for c in (args.c1, args.c2):
        m = series.find_m(c)
        if m is None:
            raise UsageError(f"{format_rational(c)} is not a discrete-series central charge")
        ms.append(m)
    pairs = series.integer_weight_pairs(series.weights(ms[0]), series.weights(ms[1]))
    _emit({"c1": args.c1, "m1": ms[0], "c2": args.c2, "m2": ms[1], "pairs": [list(p) for p in sorted(pairs)]})
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    if args.lower <= 0:
        raise UsageError("--min must be positive")
    found = series.decompose_charge(args.charge, args.lower, args.upper)
    _emit({
        "charge": args.charge,
        "min": args.lower,
        "max": args.upper,
        "decompositions": [list(x) for x in sorted(found)],
    })
    return EXIT_OK


def cmd_paper_report(args: argparse.Namespace) -> int:
    report = full_report()
    title = "Verification report for the lam = 1/64 and lam = 13/256 algebras"
    if args.format == "md":
        lines = report.to_markdown(title).splitlines()
        intro = ["", "Headline values:", ""] + [f"- {h}" for h in highlights()]
        sys.stdout.write("\n".join(lines[:1] + intro + lines[1:]) + "\n")
    else:
        _emit({"title": title, "highlights": highlights(), **report.as_dict()})
    return EXIT_OK if report.ok(args.strict) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="griess-s3", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve-lambda", help="classify the admissible values of lam")
    s.set_defaults(func=cmd_solve_lambda)

    s = sub.add_parser("build", help="write the algebra for an admissible lam as JSON")
    s.add_argument("--lambda", dest="lam", type=_rational, required=True, metavar="P/Q")
    s.add_argument("--out", type=Path, required=True, metavar="FILE")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", help="run every check on an algebra file")
    s.add_argument("file", type=Path)
    s.add_argument("--strict", action="store_true", help="treat flagged entries as failures")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("audit", help="recompute the tabulated structure constants")
    s.add_argument("--strict", action="store_true", help="treat flagged entries as failures")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("series", help="discrete-series data for m or for a central charge")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--charge", type=_rational, metavar="P/Q")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("fusion", help="print a fusion ring, optionally verified")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ring", choices=fusion.BUILTIN_NAMES)
    g.add_argument("--file", type=Path, help="ring in JSON form")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_fusion)

    s = sub.add_parser("pairs", help="integer-weight module pairs for two charges")
    s.add_argument("--c1", type=_rational, required=True, metavar="P/Q")
    s.add_argument("--c2", type=_rational, required=True, metavar="P/Q")
    s.set_defaults(func=cmd_pairs)

    s = sub.add_parser("decompose", help="write a charge as a sum of discrete-series charges")
    s.add_argument("--charge", type=_rational, required=True, metavar="P/Q")
    s.add_argument("--min", dest="lower", type=_rational, required=True, metavar="P/Q")
    s.add_argument("--max", dest="upper", type=_rational, required=True, metavar="P/Q")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("paper-report", help="full reproduction report")
    s.add_argument("--format", choices=("json", "md"), default="json")
    s.add_argument("--strict", action="store_true", help="treat flagged entries as failures")
    s.set_defaults(func=cmd_paper_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
