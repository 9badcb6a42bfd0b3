"""Command-line interface.

    icg-energy energy   --pair 3,5 --dstar [--spectrum]
    icg-energy energy   --n 15 --divisors 1,3,5
    icg-energy maximise --pair 3,5
    icg-energy survey   --bound 100000000 --workers 4 --output orders.csv
    icg-energy table3

Exit codes: 0 all checks pass, 1 mathematical failure, 2 usage or
validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import icg, report
from .search import SMALLEST_ORDER, find_maximiser, survey
from .two_prime import DivisorSet, PrimePair, closed_form_energy, dstar

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

TABLE3_PAIRS = ((3, 5), (3, 7), (5, 7), (5, 11), (7, 11), (11, 13), (13, 17))

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pair_arg(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected P,Q, got {text!r}")
    return vals[0], vals[1]


def _make_pair(pq: tuple[int, int]) -> PrimePair:
    try:
        return PrimePair(*pq)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")


def cmd_energy(args) -> int:
    ds = None
    try:
        if args.pair is not None:
            pair = _make_pair(args.pair)
            chosen = [args.dstar, args.mask is not None, args.divisors is not None]
            if sum(chosen) != 1:
                raise UsageError("with --pair give exactly one of --dstar, --mask, --divisors")
            if args.dstar:
                ds = dstar(pair)
            elif args.mask is not None:
                ds = DivisorSet(pair, args.mask)
            else:
                ds = DivisorSet.from_divisors(pair, args.divisors)
            n, D = pair.n, ds.to_general()
        else:
            if args.n is None or args.divisors is None:
                raise UsageError("give --pair P,Q or both --n and --divisors")
            if args.dstar or args.mask is not None:
                raise UsageError("--dstar and --mask need --pair")
            n = args.n
            D = icg.GeneralDivisorSet.of(n, args.divisors)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    spec = icg.spectrum(n, D)
    rec = icg.EnergyRecord(n, D, spec.energy())
    _emit(report.format_energy(rec, args.format, ds, spec if args.spectrum else None), args.output)
    return EXIT_OK


def cmd_maximise(args) -> int:
    res = find_maximiser(_make_pair(args.pair))
    _emit(report.format_maximiser(res, args.format), args.output)
    ok = res.matches_dstar and res.kronecker_ok and res.formula_ok
    return EXIT_OK if ok else EXIT_MATH


def cmd_survey(args) -> int:
    if args.bound < SMALLEST_ORDER:
        raise UsageError(f"bound below smallest order {SMALLEST_ORDER}")
    cap = None if args.all_primes else ("auto" if args.max_prime is None else args.max_prime)
    result = survey(args.bound, max_prime=cap, workers=args.workers)
    rep = result.report
    if args.output is not None:
        row_fmt = "json" if args.format == "json" else "csv"
        _emit(report.format_results(result.results, row_fmt), args.output)
    if args.summary is not None:
        _emit(report.format_summary(rep, "json"), args.summary)
    sys.stdout.write(report.format_summary(rep, args.format))
    if rep.failures:
        log.error("%d failing orders", rep.failures)
        return EXIT_MATH
    return EXIT_OK


def table3_rows() -> list[dict]:
    rows = []
    for p, q in TABLE3_PAIRS:
        pair = PrimePair(p, q)
        closed = closed_form_energy(pair)
        direct = icg.energy(pair.n, dstar(pair).to_general()).energy
        rows.append({
            "p": p, "q": q, "n": pair.n,
            "energy_closed_form": closed,
            "energy_divisor_class": direct,
            "agree": closed == direct,
        })
    return rows


def cmd_table3(args) -> int:
    rows = table3_rows()
    _emit(report.format_table3(rows, args.format), args.output)
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icg-energy",
        description="Exact energies of integral circulant graphs and the p^2 q^3 maximiser survey.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=report.FORMATS, default="human")
        sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("energy", help="energy (and spectrum) of one ICG(n, D)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--pair", type=_pair_arg, metavar="P,Q")
    sp.add_argument("--divisors", type=_int_list, metavar="D1,D2,...")
    sp.add_argument("--mask", type=int, help="11-bit exponent-pair mask (needs --pair)")
    sp.add_argument("--dstar", action="store_true", help="use D* (needs --pair)")
    sp.add_argument("--spectrum", action="store_true", help="also emit the class spectrum")
    common(sp)
    sp.set_defaults(func=cmd_energy)

    sp = sub.add_parser("maximise", aliases=["maximize"], help="search all 2047 sets for one order")
    sp.add_argument("--pair", type=_pair_arg, metavar="P,Q", required=True)
    common(sp)
    sp.set_defaults(func=cmd_maximise)

    sp = sub.add_parser("survey", help="search every order p^2 q^3 <= bound")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    cap = sp.add_mutually_exclusive_group()
    cap.add_argument("--max-prime", type=int,
                     help="cap both primes (default: first prime >= cube root of bound)")
    cap.add_argument("--all-primes", action="store_true", help="no prime cap")
    sp.add_argument("--output", help="per-order records (csv, or json with --format json)")
    sp.add_argument("--summary", help="also write the summary as JSON to this file")
    sp.add_argument("--format", choices=report.FORMATS, default="human",
                    help="format of the summary on stdout")
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("table3", help="sample energies of D* by both formulas")
    common(sp)
    sp.set_defaults(func=cmd_table3)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
