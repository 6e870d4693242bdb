"""Command-line interface.

Subcommands: gen (emit a .tour), count (counting report as JSON),
classify (classification report as JSON), verify (bound and identity
drivers as JSON), enumerate (regular corpus generation/verification).

Exit codes: 0 success, 1 a mathematical claim failed its check, 2 usage,
parse, or input errors.  JSON output never contains floats; exact
rationals are {"num": ..., "den": ...}.  TOURNEY_THREADS seeds the
default worker count; --threads overrides it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import classify, counting, enumeration, extremal, generators, io
from .errors import (
    InternalParityError,
    InvalidInput,
    TourneyError,
    VerificationFailedError,
)


@dataclass(frozen=True)
class RunConfig:
    """Options shared by every subcommand."""

    command: str
    threads: int
    time_budget: float | None


def _rational(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def _bound_report_json(report: extremal.BoundReport) -> dict[str, Any]:
    return {
        "bound_name": report.bound_name,
        "n": report.n,
        "bound_value": _rational(report.bound_value),
        "observed": report.observed,
        "tight": report.tight,
        "witnesses": list(report.witnesses),
    }


def _emit(doc: Any) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


# -- subcommand handlers -----------------------------------------------------

def _cmd_gen(args: argparse.Namespace, config: RunConfig) -> int:
    family = args.family
    if family == "transitive":
        t = generators.gen_transitive(_need(args, "n"))
    elif family == "rlt":
        t = generators.gen_rlt(_need(args, "n"))
    elif family == "rotational":
        n = _need(args, "n")
        if args.symbol is None:
            raise InvalidInput("gen rotational needs --symbol")
        diffs = frozenset(int(part) for part in args.symbol.split(","))
        t = generators.gen_rotational(generators.RotationalSymbol(n, diffs))
    elif family == "qr":
        if args.p is None:
            raise InvalidInput("gen qr needs --p")
        t = (generators.gen_qr_power(args.p, args.power)
             if args.power != 1 else generators.gen_qr(args.p))
    elif family == "named":
        if args.name is None:
            raise InvalidInput("gen named needs --name")
        t = generators.gen_named(args.name)
    else:  # random
        n = _need(args, "n")
        if args.seed is None:
            raise InvalidInput("gen random needs --seed")
        t = generators.gen_random(n, args.seed)
    _write_text(io.format_tour(t), args.out)
    return 0


def _need(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise InvalidInput(f"this generator needs --{name}")
    return value


def _cmd_count(args: argparse.Namespace, config: RunConfig) -> int:
    t = io.read_tour(args.input)
    names: list[str] = [q for q in ("c3", "c4", "c5", "s3", "s4", "s5")
                        if getattr(args, q)]
    names += [f"w{m}" for m in args.w or []]
    names += [f"tr{m}" for m in args.trace or []]
    if not names:
        names = ["c3", "c4", "c5", "s3", "s4", "s5"]
    report = counting.count_report(t, names, args.method)
    _emit({
        "n": report.n,
        "quantities": [{"name": e.name, "method": e.method, "value": e.value}
                       for e in report.quantities],
        "cross_checked": report.cross_checked,
    })
    return 0 if report.cross_checked else 1


def _cmd_classify(args: argparse.Namespace, config: RunConfig) -> int:
    t = io.read_tour(args.input)
    report = classify.classification_report(t)
    _emit({
        "n": report.n,
        "flags": report.flags,
        "semi_degree": report.semi_degree,
    })
    return 0


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    target = args.target
    if target == "thm1":
        result = extremal.verify_c5_max(_need(args, "n"))
        _emit({
            "n": result.n,
            "total_codes": result.total_codes,
            "regular_codes": result.regular_codes,
            "c5": _bound_report_json(result.c5),
            "s5": _bound_report_json(result.s5),
        })
    elif target == "prop2":
        if args.corpus is None:
            raise InvalidInput("verify prop2 needs --corpus")
        corpus = enumeration.read_corpus(args.corpus)
        enumeration.verify_corpus(corpus)
        reports = extremal.verify_regular9(corpus)
        _emit({name: _bound_report_json(rep) for name, rep in reports.items()})
    elif target == "lemma1":
        if args.p is None:
            raise InvalidInput("verify lemma1 needs --p")
        result = extremal.verify_binomial_sum_min(_need(args, "n"), args.p)
        _emit({
            "bound": _bound_report_json(result.bound),
            "p": result.p,
            "balanced": list(result.balanced),
            "unique_minimizer": result.unique_minimizer,
            "within_uniqueness_range": result.within_uniqueness_range,
        })
    else:  # eq7
        if args.input is None:
            raise InvalidInput("verify eq7 needs --input")
        t = io.read_tour(args.input)
        lhs, rhs = extremal.regular_identity(t)
        tl, tr = extremal.regular_identity_trace(t)
        if lhs != rhs or tl != tr:
            raise VerificationFailedError(
                f"identity failed: {lhs} != {rhs} or {tl} != {tr}")
        _emit({
            "n": t.n,
            "lhs": lhs,
            "rhs": rhs,
            "trace_lhs": _rational(Fraction(tl)),
            "trace_rhs": _rational(Fraction(tr)),
            "equal": True,
        })
    return 0


def _cmd_enumerate(args: argparse.Namespace, config: RunConfig) -> int:
    if args.verify is not None:
        corpus = enumeration.read_corpus(args.verify)
        enumeration.verify_corpus(corpus)
    else:
        if args.n is None:
            raise InvalidInput("enumerate needs --n (or --verify FILE)")
        if args.constraint != "regular":
            raise InvalidInput("only --constraint regular is supported")
        corpus = enumeration.enumerate_regular(
            args.n, threads=config.threads, time_budget=config.time_budget,
            symmetry_break=args.symmetry_break)
        if args.out is not None:
            enumeration.write_corpus(corpus, args.out)
    _emit({
        "n": corpus.n,
        "constraint": corpus.constraint,
        "labeled_count": corpus.labeled_count,
        "classes": len(corpus.classes),
        "keys": [cf.hex() for cf, _ in corpus.classes],
    })
    return 0


# -- parser ------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourney",
        description="Construct, count, classify and verify small tournaments.")
    parser.add_argument("--threads", type=int,
                        default=int(os.environ.get("TOURNEY_THREADS", "1")),
                        help="worker cap for enumeration (default "
                             "TOURNEY_THREADS or 1)")
    parser.add_argument("--time-budget", type=float, default=None,
                        help="wall-clock budget in seconds for enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a tournament in .tour form")
    gen.add_argument("family",
                     choices=["transitive", "rlt", "rotational", "qr",
                              "named", "random"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=int, help="prime for the qr family")
    gen.add_argument("--power", type=int, default=1,
                     help="odd extension degree for qr over a prime power")
    gen.add_argument("--symbol", help="comma-separated differences")
    gen.add_argument("--name", help="named family (see gen_named)")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", help="output path (default stdout)")

    count = sub.add_parser("count", help="counting report as JSON")
    count.add_argument("--input", required=True)
    for q in ("c3", "c4", "c5", "s3", "s4", "s5"):
        count.add_argument(f"--{q}", action="store_true")
    count.add_argument("--w", type=int, action="append", metavar="M",
                       help="sink-and-source-free subset count of order M")
    count.add_argument("--trace", type=int, action="append", metavar="M",
                       help="adjacency-power trace of order M")
    count.add_argument("--method",
                       choices=["formula", "oracle", "trace", "all"],
                       default="all")

    cls = sub.add_parser("classify", help="classification report as JSON")
    cls.add_argument("--input", required=True)

    verify = sub.add_parser("verify", help="bound and identity checks")
    verify.add_argument("target", choices=["thm1", "prop2", "lemma1", "eq7"],
                        help="thm1: exhaustive 5-cycle maximum at order 5 or "
                             "7; prop2: order-9 regular corpus extremes; "
                             "lemma1: score-sequence minimization; eq7: the "
                             "regular c5 + 2 c4 identity")
    verify.add_argument("--n", type=int)
    verify.add_argument("--p", type=int)
    verify.add_argument("--corpus")
    verify.add_argument("--input")

    enum = sub.add_parser("enumerate", help="regular corpus generation")
    enum.add_argument("--n", type=int)
    enum.add_argument("--constraint", default="regular")
    enum.add_argument("--out", help="write a .corpus file")
    enum.add_argument("--verify", metavar="FILE",
                      help="verify an existing .corpus instead")
    enum.add_argument("--no-symmetry-break", dest="symmetry_break",
                      action="store_false",
                      help="enumerate without fixing vertex 0's out-set")
    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "count": _cmd_count,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = RunConfig(args.command, max(1, args.threads), args.time_budget)
    try:
        return _HANDLERS[args.command](args, config)
    except (VerificationFailedError, InternalParityError) as exc:
        print(f"claim violated: {exc}", file=sys.stderr)
        return 1
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TourneyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
