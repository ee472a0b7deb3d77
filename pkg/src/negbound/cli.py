"""Command-line interface.

Subcommands: analyze (cluster combinatorics), dvalue (per-origin minimal
degrees), bounds (evaluated bound formulas), nu (empirical infimum over a
curve list), dot (proximity graph export).  Exit codes: 0 success, 1 parse or
validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    BoundReport,
    empirical_nu,
    epsilon_family_bounds,
    nef_pullback_bounds,
    rational_json,
)
from .config import analysis_report, classify, dot_export
from .errors import NegboundError
from .fileformat import load_configuration, load_curves, parse_divisor
from .sufficiency import d_value_report
from .surfaces import parse_surface


def format_rational(value: Fraction) -> str:
    """Exact form, with a 6-significant-digit decimal for non-integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value} ({float(value):.6g})"


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"invalid rational {text!r} (expected 'p' or 'p/q')") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negbound",
        description="Cluster combinatorics and negativity bounds for blowups "
                    "of the plane and Hirzebruch surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_json: bool = True):
        p.add_argument("input", type=Path, help="cluster file")
        if with_json:
            p.add_argument("--json", action="store_true",
                           help="emit a JSON report")
        p.add_argument("--output", type=Path, default=None,
                       help="write the report to a file instead of stdout")
        p.add_argument("--surface", default=None, metavar="SPEC",
                       help="override the file's surface ('p2' or 'f <delta>')")

    add_common(sub.add_parser("analyze", help="validate and describe a cluster"))
    add_common(sub.add_parser("dvalue", help="per-origin minimal degrees"))

    bounds_p = sub.add_parser("bounds", help="evaluate the bound formulas")
    add_common(bounds_p)
    bounds_p.add_argument("--epsilon", type=_fraction_arg, default=None,
                          metavar="P/Q",
                          help="positive rational epsilon for the epsilon-family bound")
    bounds_p.add_argument("--n-convention", choices=("stated", "example"),
                          default="stated", dest="n_convention")
    bounds_p.add_argument("--pullback", action="store_true",
                          help="bound for pullbacks of nef divisors "
                               "(no epsilon needed)")

    nu_p = sub.add_parser("nu", help="empirical infimum over a curve list")
    add_common(nu_p)
    nu_p.add_argument("--divisor", required=True, metavar="LITERAL",
                      help="nef divisor literal, e.g. '3L - E2'")
    nu_p.add_argument("--curves", required=True, type=Path,
                      help="file with one curve-class literal per line")

    add_common(sub.add_parser("dot", help="export the proximity graph as DOT"),
               with_json=False)
    return parser


def _load(args):
    config = load_configuration(args.input)
    if args.surface is not None:
        config = dataclasses.replace(config,
                                     surface=parse_surface(args.surface))
    return config


def _cmd_analyze(args) -> str:
    config = _load(args)
    report = analysis_report(config)
    if args.json:
        return json.dumps(report, indent=2)
    lines = [f"surface: {config.surface}",
             f"points: {len(config)}   "
             f"origins: {' '.join(map(str, config.origins))}   "
             f"ends: {' '.join(map(str, config.ends))}",
             f"gamma: {report['gamma']}",
             f"{'id':>4} {'level':>5}  {'kind':<9} {'proximities':<12} E^2"]
    esq = {p["id"]: p["e_sq"] for p in report["points"]}
    for item in classify(config):
        prox = " ".join(map(str, config.point(item.id).proximities)) or "-"
        lines.append(f"{item.id:>4} {item.level:>5}  {item.kind:<9} "
                     f"{prox:<12} {esq[item.id]}")
    return "\n".join(lines)


def _cmd_dvalue(args) -> str:
    config = _load(args)
    report = d_value_report(config)
    if args.json:
        return json.dumps(report, indent=2)
    lines = [f"origin {entry['id']}: d = {entry['d']}   "
             f"(hat size {entry['hat_size']})"
             for entry in report["origins"]]
    lines.append(f"total d: {report['total_d']}")
    return "\n".join(lines)


def _render_bounds(report: BoundReport) -> str:
    lines = [f"surface: {report.surface}",
             f"n: {report.n} ({report.convention})   "
             f"[stated {report.n_stated}, example {report.n_example}]",
             f"d: {report.d}   gamma: {report.gamma}"]
    if report.epsilon is not None:
        lines.append(f"epsilon: {format_rational(report.epsilon)}")
    width = max(len(name) for name, _ in report.terms)
    lines.append("terms:")
    for name, value in report.terms:
        lines.append(f"  {name:<{width}} = {format_rational(value)}")
    lines.append(f"bound: {format_rational(report.bound)}")
    return "\n".join(lines)


def _cmd_bounds(args) -> str:
    config = _load(args)
    if args.pullback:
        report = nef_pullback_bounds(config, args.n_convention)
    else:
        report = epsilon_family_bounds(config, args.epsilon, args.n_convention)
    if report.conventions_disagree:
        print(f"warning: n conventions disagree "
              f"(stated {report.n_stated}, example {report.n_example}); "
              f"using {report.convention}", file=sys.stderr)
    if args.json:
        return json.dumps(report.as_json_dict(), indent=2)
    return _render_bounds(report)


def _cmd_nu(args) -> str:
    config = _load(args)
    divisor = parse_divisor(args.divisor, config.surface, len(config))
    curves = load_curves(args.curves, config.surface, len(config))
    report = empirical_nu(curves, divisor)
    if args.json:
        return json.dumps({
            "divisor": str(divisor),
            "value": None if report.value is None else rational_json(report.value),
            "curves": [{"index": r.index,
                        "c_sq": rational_json(r.self_intersection),
                        "d_dot_c": rational_json(r.pairing_with_divisor),
                        "qualifies": r.qualifies,
                        "ratio": None if r.ratio is None
                                 else rational_json(r.ratio)}
                       for r in report.ratios],
        }, indent=2)
    lines = [f"divisor: {divisor}"]
    for r in report.ratios:
        ratio = "-" if r.ratio is None else format_rational(r.ratio)
        note = "" if r.qualifies else "   (not counted)"
        lines.append(f"curve {r.index}: C^2 = {format_rational(r.self_intersection)}   "
                     f"D.C = {format_rational(r.pairing_with_divisor)}   "
                     f"ratio = {ratio}{note}")
    value = "undefined" if report.value is None else format_rational(report.value)
    lines.append(f"nu over {len(report.ratios)} supplied curve(s): {value}")
    return "\n".join(lines)


def _cmd_dot(args) -> str:
    return dot_export(_load(args)).rstrip("\n")


_COMMANDS = {
    "analyze": _cmd_analyze,
    "dvalue": _cmd_dvalue,
    "bounds": _cmd_bounds,
    "nu": _cmd_nu,
    "dot": _cmd_dot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds" and not args.pullback and args.epsilon is None:
        parser.error("--epsilon is required unless --pullback is given")
    try:
        text = _COMMANDS[args.command](args)
    except NegboundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if args.output is not None:
        args.output.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
