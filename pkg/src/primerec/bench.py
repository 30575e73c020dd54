"""Deterministic benchmark harness over strategies and input sizes.

Acceptance rests on operation counts, which are exact functions of the
input; wall-clock numbers are recorded for orientation only and are
written as 0 in deterministic mode so reports are byte-identical across
runs.  Every result is validated against the trial-division oracle before
it is recorded.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence

from .errors import DomainError, OracleMismatchError
from .oracle import next_prime_oracle
from .strategies import OpCounter, Strategy, evaluate

CSV_HEADER = "n,strategy,result,floor_pair_evals,multiple_marks,p_evals,wall_nanos"


@dataclass(frozen=True)
class BenchRecord:
    n: int
    strategy: Strategy
    result: int
    floor_pair_evals: int
    multiple_marks: int
    p_evals: int
    wall_nanos: int


@dataclass(frozen=True)
class BenchSuite:
    sizes: list[int]
    records: list[BenchRecord]


def run_bench(
    sizes: Sequence[int],
    strategies: Sequence[Strategy],
    deterministic: bool = False,
) -> BenchSuite:
    """One record per (size, strategy) pair, size-major, oracle-checked.

    Sizes must be nonempty, strictly increasing, and >= 1.
    """
    sizes = list(sizes)
    if not sizes:
        raise DomainError("bench requires at least one size")
    if any(n < 1 for n in sizes):
        raise DomainError(f"bench sizes must be >= 1 (got {sizes})")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise DomainError(f"bench sizes must be strictly increasing (got {sizes})")
    strategies = list(strategies)
    if not strategies:
        raise DomainError("bench requires at least one strategy")

    records = []
    for n in sizes:
        expected = next_prime_oracle(n)
        for strategy in strategies:
            counter = OpCounter()
            start = time.perf_counter_ns()
            result = evaluate(n, strategy, counter)
            elapsed = time.perf_counter_ns() - start
            if result != expected:
                raise OracleMismatchError(n=n, strategy=strategy, got=result, expected=expected)
            records.append(
                BenchRecord(
                    n=n,
                    strategy=strategy,
                    result=result,
                    floor_pair_evals=counter.floor_pair_evals,
                    multiple_marks=counter.multiple_marks,
                    p_evals=counter.p_evals,
                    wall_nanos=0 if deterministic else elapsed,
                )
            )
    return BenchSuite(sizes=sizes, records=records)


def emit_report(suite: BenchSuite, format: str) -> str:
    """Render a suite as `csv` or `jsonl` text, one line per record."""
    if format == "csv":
        lines = [CSV_HEADER]
        for r in suite.records:
            lines.append(
                f"{r.n},{r.strategy.value},{r.result},{r.floor_pair_evals},"
                f"{r.multiple_marks},{r.p_evals},{r.wall_nanos}"
            )
        return "\n".join(lines) + "\n"
    if format == "jsonl":
        lines = []
        for r in suite.records:
            lines.append(
                json.dumps(
                    {
                        "n": r.n,
                        "strategy": r.strategy.value,
                        "result": r.result,
                        "floor_pair_evals": r.floor_pair_evals,
                        "multiple_marks": r.multiple_marks,
                        "p_evals": r.p_evals,
                        "wall_nanos": r.wall_nanos,
                    }
                )
            )
        return "\n".join(lines) + "\n" if lines else ""
    raise DomainError(f"unknown report format {format!r}; choose csv or jsonl")


def write_report(suite: BenchSuite, format: str, dest: str | Path | IO[str] | None = None) -> None:
    """Emit to stdout (default), an open stream, or a file path."""
    text = emit_report(suite, format)
    if dest is None:
        sys.stdout.write(text)
    elif hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
