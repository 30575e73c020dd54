"""Command-line front end.

Subcommands: next, seq, verify, eval, bench.  All results go to stdout,
diagnostics to stderr.  Exit codes: 0 success, 1 verification or oracle
failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .bench import run_bench, write_report
from .core import divisor_count_literal, next_prime, p_literal, prime_sequence
from .errors import BackendError, DomainError, OracleMismatchError, WindowExhaustedError
from .oracle import build_sieve, next_prime_oracle
from .strategies import OpCounter, Strategy, evaluate


@dataclass
class VerificationReport:
    """Outcome of checking the recurrence against the oracle for primes <= limit."""

    limit: int
    checked: int
    failures: list[tuple[int, int, int]]  # (p, got, expected)
    strategy: Strategy

    @property
    def passed(self) -> bool:
        return not self.failures


def run_verify(limit: int, strategy: Strategy) -> VerificationReport:
    """Check next_prime(p) for every prime p <= limit against the oracle.

    Primes come from a sieve rather than from chaining the recurrence, so
    one failure cannot cascade into spurious later ones.
    """
    if limit < 2:
        raise DomainError(f"verify requires limit >= 2 (got {limit})")
    failures = []
    primes = build_sieve(limit).primes()
    for p in primes:
        got = evaluate(p, strategy, OpCounter())
        expected = next_prime_oracle(p)
        if got != expected:
            failures.append((p, got, expected))
    return VerificationReport(
        limit=limit, checked=len(primes), failures=failures, strategy=strategy
    )


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1 (got {value})")
    return value


def _int_at_least_2(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2 (got {value})")
    return value


def _size_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list") from None


def _strategy(text: str) -> Strategy:
    try:
        return Strategy.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _strategy_list(text: str) -> list[Strategy]:
    return [_strategy(part) for part in text.split(",") if part != ""]


def _add_strategy_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--strategy",
        type=_strategy,
        default=Strategy.WINDOWED_SIEVE,
        metavar="{literal,windowed,oracle}",
        help="evaluation strategy (default: windowed)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primerec",
        description="Next-prime recurrence: evaluate, verify, and benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_next = sub.add_parser("next", help="print the smallest prime greater than n")
    p_next.add_argument("n", type=_positive_int)
    _add_strategy_option(p_next)
    p_next.set_defaults(func=_cmd_next)

    p_seq = sub.add_parser("seq", help="print the first <count> primes, one per line")
    p_seq.add_argument("count", type=_positive_int)
    _add_strategy_option(p_seq)
    p_seq.set_defaults(func=_cmd_seq)

    p_verify = sub.add_parser(
        "verify", help="check the recurrence against trial division for all primes <= limit"
    )
    p_verify.add_argument("limit", type=_int_at_least_2)
    _add_strategy_option(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate one literal formula")
    p_eval.add_argument("kind", choices=("dcount", "pfunc"))
    p_eval.add_argument("i", type=int)
    p_eval.set_defaults(func=_cmd_eval)

    p_bench = sub.add_parser("bench", help="operation-count benchmark across strategies")
    p_bench.add_argument("--sizes", type=_size_list, required=True, metavar="a,b,c")
    p_bench.add_argument(
        "--strategies",
        type=_strategy_list,
        default=[Strategy.WINDOWED_SIEVE],
        metavar="x,y",
        help="comma-separated strategy names (default: windowed)",
    )
    p_bench.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p_bench.add_argument(
        "--deterministic",
        action="store_true",
        help="write wall_nanos as 0 so output is byte-identical across runs",
    )
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def _cmd_next(args) -> int:
    print(next_prime(args.n, args.strategy))
    return 0


def _cmd_seq(args) -> int:
    for p in prime_sequence(args.count, args.strategy):
        print(p)
    return 0


def _cmd_verify(args) -> int:
    report = run_verify(args.limit, args.strategy)
    print(f"checked={report.checked} failures={len(report.failures)}")
    for p, got, expected in report.failures:
        print(f"{p} {got} {expected}")
    return 0 if report.passed else 1


def _cmd_eval(args) -> int:
    if args.kind == "dcount":
        print(divisor_count_literal(args.i))
    else:
        print(p_literal(args.i))
    return 0


def _cmd_bench(args) -> int:
    suite = run_bench(args.sizes, args.strategies, deterministic=args.deterministic)
    write_report(suite, args.format)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, BackendError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OracleMismatchError, WindowExhaustedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
