"""Command-line entry point: ``qpowersums verify | eval | limit``."""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Union

import mpmath

from . import __version__, closed, numeric, qobjects, sums
from .errors import PoleAtOne, QSumsError, SingularUnresolved, UnknownSuite, VersionMismatch
from .field import limit_at_v1, to_canonical_string
from .harness import SUITES, RunConfig, build_report
from .report import CheckRecord, Report, compare_golden

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3

_EXACT = re.compile(r"^[+-]?\d+(/\d+)?$")


def exact_fraction(text: str) -> Fraction:
    """Parse ``a`` or ``a/b``; decimals are refused to keep evaluation exact."""
    if not _EXACT.match(text.strip()):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact integer or fraction a/b")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"{text!r} has a zero denominator") from None


def tolerance(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad tolerance {text!r}") from None


def emit_report(report: Union[Report, Iterable[CheckRecord]], fmt: str = "json",
                out: Optional[str] = None) -> None:
    """Write ``report`` (or bare records, grouped by suite) as JSON or markdown."""
    if not isinstance(report, Report):
        report = Report.from_records(report)
    text = report.to_json() if fmt == "json" else report.to_markdown()
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# -- limit operations ----------------------------------------------------------

LIMIT_OPS = {
    "q-bracket": (("e", "base"), lambda e, base=1: qobjects.q_bracket(e, int(base))),
    "q-binomial": (("n", "k"), lambda n, k: qobjects.q_binomial(int(n), int(k))),
    "q-factorial": (("n",), lambda n: qobjects.q_factorial(int(n))),
    "schlosser-sum": (("m", "n"), lambda m, n: sums.schlosser_sum(int(m), int(n))),
    "warnaar": (("n",), lambda n: sums.warnaar_lhs(int(n))),
    "garrett-hummel": (("n",), lambda n: sums.garrett_hummel_lhs(int(n))),
    "thm3-lhs": (("n", "k"), lambda n, k: sums.thm3_lhs(int(n), int(k))),
}


def _parse_params(items: Sequence[str]) -> Dict[str, Fraction]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise argparse.ArgumentTypeError(f"expected key=value, got {item!r}")
        out[key] = exact_fraction(value)
    return out


# -- subcommands -------------------------------------------------------------


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    cfg = RunConfig(args.n_max, args.k_max, args.m_max, args.q, args.precision, args.tol)
    report = build_report(names, cfg)
    emit_report(report, args.format, args.out)

    verdicts = [r.verdict for r in report.records()]
    if args.strict and "singular" in verdicts:
        print("unresolved singular records present", file=sys.stderr)
        return EXIT_SINGULAR
    if args.golden:
        golden = Report.from_json(Path(args.golden).read_text(encoding="utf-8"))
        try:
            diff, status = compare_golden(report, golden)
        except VersionMismatch as exc:
            print(f"golden: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        for line in diff:
            print(line, file=sys.stderr)
        return EXIT_MISMATCH if status else EXIT_OK
    if "error" in verdicts:
        print("some records ended in error", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_eval(args) -> int:
    if args.what == "beta-star":
        for label, fn in (("beta_star", closed.beta_star_reference if args.source == "reference"
                           else closed.beta_star_paper),
                          ("beta_star_poly", closed.beta_star_poly_reference if args.source == "reference"
                           else closed.beta_star_poly_paper)):
            val = fn(args.n, args.k, args.strict)
            shown = "singular" if val.value is None else to_canonical_string(val.value)
            print(f"{label}: {shown}  [{val.status}]")
            if args.strict and val.value is None:
                return EXIT_SINGULAR
        return EXIT_OK
    if args.what == "sum":
        print(to_canonical_string(sums.schlosser_sum(args.m, args.n)))
        return EXIT_OK
    # zeta
    if args.s <= 0:
        val = numeric.zeta_special_value(1 - args.s, args.k, args.source, args.strict)
        shown = "singular" if val.value is None else to_canonical_string(val.value)
        print(f"zeta*({args.s}): {shown}  [{val.status}]")
        return EXIT_SINGULAR if (args.strict and val.value is None) else EXIT_OK
    if args.q is None:
        print("eval zeta: --q is required for s >= 3", file=sys.stderr)
        return EXIT_USAGE
    p = numeric.NumericParams(q=args.q, tol=args.tol, precision=args.precision)
    digits = 30
    print(f"numbers:     {mpmath.nstr(numeric.zeta_star_series(args.s, args.k, p, 'numbers'), digits)}")
    print(f"polynomials: {mpmath.nstr(numeric.zeta_star_series(args.s, args.k, p, 'polynomials', args.variant), digits)}"
          f"  [{args.variant}]")
    return EXIT_OK


def cmd_limit(args) -> int:
    if args.op not in LIMIT_OPS:
        print(f"unknown op {args.op!r}; choose from {', '.join(sorted(LIMIT_OPS))}", file=sys.stderr)
        return EXIT_USAGE
    names, fn = LIMIT_OPS[args.op]
    params = _parse_params(args.params)
    unknown = set(params) - set(names)
    if unknown:
        print(f"unexpected parameters {sorted(unknown)} for {args.op}", file=sys.stderr)
        return EXIT_USAGE
    try:
        print(limit_at_v1(fn(**params)))
    except PoleAtOne:
        print("pole at q = 1")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qpowersums", description="Exact q-power-sum identity checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and emit a report")
    v.add_argument("--suite", default="all", help=f"'all' or comma-separated ids: {', '.join(SUITES)}")
    v.add_argument("--n-max", type=int)
    v.add_argument("--k-max", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--q", type=exact_fraction, help="exact q for numeric suites, e.g. 3/2")
    v.add_argument("--precision", type=int, default=256, help="bits (default 256)")
    v.add_argument("--tol", type=tolerance, default=Fraction(1, 10**30), help="series truncation tolerance")
    v.add_argument("--format", choices=("json", "md"), default="json")
    v.add_argument("--out", help="output path (default stdout)")
    v.add_argument("--golden", help="golden JSON report to compare against")
    v.add_argument("--strict", action="store_true", help="exit 3 on unresolved singular records")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a single closed form or series")
    e.add_argument("what", choices=("beta-star", "sum", "zeta"))
    e.add_argument("--n", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--s", type=int)
    e.add_argument("--q", type=exact_fraction)
    e.add_argument("--source", choices=("paper", "reference"), default="paper")
    e.add_argument("--variant", choices=("paper", "derived"), default="derived")
    e.add_argument("--precision", type=int, default=256)
    e.add_argument("--tol", type=tolerance, default=Fraction(1, 10**30))
    e.add_argument("--strict", action="store_true")
    e.set_defaults(func=cmd_eval)

    lim = sub.add_parser("limit", help="classical value at q = 1")
    lim.add_argument("--op", required=True, help=", ".join(sorted(LIMIT_OPS)))
    lim.add_argument("--params", nargs="*", default=[], help="key=value pairs, values exact")
    lim.set_defaults(func=cmd_limit)
    return parser


_REQUIRED = {"beta-star": ("n", "k"), "sum": ("m", "n"), "zeta": ("s", "k")}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        missing = [f"--{name}" for name in _REQUIRED[args.what] if getattr(args, name) is None]
        if missing:
            parser.error(f"eval {args.what} needs {' '.join(missing)}")
    try:
        return args.func(args)
    except SingularUnresolved as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (UnknownSuite, argparse.ArgumentTypeError) as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QSumsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
