"""Command line front end.

Exit codes: 0 success, 1 a fallacy was found (``check-claims``), 2 usage
error, 3 data error (unreadable or invalid case file, incomplete table,
undefined quantity).
"""

from __future__ import annotations

import argparse
import sys

from .case_io import CaseFile, load_case, load_scale, resolve_case_path
from .errors import DataError, IncompleteTable
from .fallacy import check_claim, independence_finding, naive_independence_combination
from .odds_core import EvidenceTable, ExactOdds, analyze
from .report import FORMATS, render_report
from .sensitivity import DEFAULT_GUESSES, complete_table, sweep
from .verbal_scale import DEFAULT_SCALE, verbal_equivalent

EXIT_OK = 0
EXIT_FALLACY = 1
EXIT_USAGE = 2
EXIT_DATA = 3


def _count(text: str) -> int:
    try:
        value = int(text.replace(",", "").replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"counts must be nonnegative: {text!r}")
    return value


def _count_list(text: str) -> tuple[int, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("need at least one guess")
    return tuple(_count(p.strip()) for p in parts)


def _odds(text: str) -> ExactOdds:
    try:
        return ExactOdds.parse(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a likelihood ratio: {text!r} ({exc})") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format (default: text)")
    common.add_argument("--exact", action="store_true", help="print exact fractions only")

    parser = argparse.ArgumentParser(
        prog="forensic-lr",
        description="Exact likelihood-ratio analysis of forensic evidence count tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="conditionals, LR, prior and posterior odds")
    p.add_argument("case", help="case file, or the name of a bundled case (zipper, toy_city, sally_clark)")
    p.add_argument("--guess", type=_count, help="value for the unknown not-E/Hd cell")
    p.add_argument("--scale", help="verbal scale file (JSON)")
    p.add_argument("--rounded-prior", type=int, metavar="SIG",
                   help="also show LR x prior with the prior rounded to SIG significant figures")

    p = sub.add_parser("sweep", parents=[common], help="sweep guesses for the unknown not-E/Hd cell")
    p.add_argument("case")
    p.add_argument("--guesses", type=_count_list, help="comma-separated guesses")

    p = sub.add_parser("check-claims", parents=[common], help="run the fallacy detectors over the claims")
    p.add_argument("case")
    p.add_argument("--guess", type=_count, help="value for the unknown not-E/Hd cell")

    p = sub.add_parser("verbal", parents=[common], help="verbal equivalent of a likelihood ratio")
    p.add_argument("lr", type=_odds, help="likelihood ratio, e.g. 5000, 1/500 or inf")
    p.add_argument("--scale", help="verbal scale file (JSON)")
    return parser


def _load(arg: str) -> CaseFile:
    return load_case(resolve_case_path(arg))


def _working_table(case: CaseFile, guess: int | None) -> EvidenceTable:
    table = case.table
    if table.is_complete:
        return table
    guess = guess if guess is not None else case.assumed_guess
    if guess is None:
        raise IncompleteTable(
            f"unknown cells: {', '.join(table.unknown_cells)}; supply --guess or assumed_guess"
        )
    return complete_table(table, guess)


def _scale(args, case: CaseFile | None = None):
    if getattr(args, "scale", None):
        return load_scale(args.scale)
    if case is not None and case.scale is not None:
        return case.scale
    return DEFAULT_SCALE


def cmd_analyze(args) -> tuple[bytes, int]:
    case = _load(args.case)
    if case.independence is not None and not any(v is not None for v in case.table.cells):
        ind = case.independence
        result = naive_independence_combination(ind.per_event_probability, ind.n_events)
        return render_report(result, args.format, exact=args.exact), EXIT_OK
    result = analyze(_working_table(case, args.guess))
    verbal = verbal_equivalent(result.likelihood_ratio, _scale(args, case))
    out = render_report(result, args.format, exact=args.exact, verbal=verbal,
                        rounded_prior_sig=args.rounded_prior)
    return out, EXIT_OK


def cmd_sweep(args) -> tuple[bytes, int]:
    case = _load(args.case)
    guesses = args.guesses or case.sweep_guesses or DEFAULT_GUESSES
    return render_report(sweep(case.table, guesses), args.format, exact=args.exact), EXIT_OK


def cmd_check_claims(args) -> tuple[bytes, int]:
    case = _load(args.case)
    try:
        table = _working_table(case, args.guess)
    except IncompleteTable:
        table = None
    findings = []
    if case.independence is not None:
        ind = case.independence
        result = naive_independence_combination(ind.per_event_probability, ind.n_events)
        findings.append(independence_finding(result, asserter=ind.asserter))
    findings += [check_claim(c, table) for c in case.claims]
    code = EXIT_FALLACY if any(f.is_fallacy for f in findings) else EXIT_OK
    return render_report(findings, args.format, exact=args.exact), code


def cmd_verbal(args) -> tuple[bytes, int]:
    statement = verbal_equivalent(args.lr, _scale(args))
    return render_report(statement, args.format, exact=args.exact), EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "check-claims": cmd_check_claims,
    "verbal": cmd_verbal,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        out, code = COMMANDS[args.command](args)
    except DataError as exc:
        print(f"forensic-lr: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
