"""Faster evaluations of the recurrence, instrumented with operation counters.

Three observations let the literal double sum be cut down without changing
its value:

* the inner product over P is 1 until the range reaches the next prime q
  and 0 from then on, so the outer sum can stop at the first zero product
  (``f_shortcircuit``);
* once it is known that the product's first zero sits at q, F(n) is just
  q itself, so scanning divisor counts for the first d = 2 in (n, 2n]
  suffices (``f_windowed``);
* d(i) for the whole window (n, 2n] comes cheaper from one pass marking
  the multiples of every j <= 2n than from per-i divisor sums
  (``window_divisor_counts``).

The optimized paths read the indicator off the divisor count directly
(d = 2 -> 0, d > 2 -> 1); the floor-expression form survives as the
reference in :mod:`primerec.core`.

Counters are explicit per-call state owned by the caller.  Counts are a
deterministic function of the input, identical across backends: one
floor-pair evaluation per (i, j) term of a literal divisor count, one
mark per multiple enumerated by the windowed sieve, one P evaluation per
indicator produced.  Evaluations with distinct counters are safe to run
concurrently; a single counter must not be shared.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import _backend, core, oracle
from .errors import DomainError, WindowExhaustedError


class Strategy(enum.Enum):
    """How to evaluate the next-prime recurrence."""

    LITERAL_FORMULA = "literal"
    WINDOWED_SIEVE = "windowed"
    ORACLE_DIRECT = "oracle"

    @classmethod
    def parse(cls, token: str) -> "Strategy":
        try:
            return cls(token.strip().lower())
        except ValueError:
            valid = ", ".join(s.value for s in cls)
            raise DomainError(f"unknown strategy {token!r}; choose one of {valid}") from None


@dataclass
class OpCounter:
    """Monotone counters of elementary work done during one evaluation."""

    floor_pair_evals: int = 0
    multiple_marks: int = 0
    p_evals: int = 0


@dataclass(frozen=True, eq=False)
class Window:
    """Divisor counts over the scan range (n, 2n]: lo = n+1, hi = 2n."""

    lo: int
    hi: int
    dcounts: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.hi != 2 * (self.lo - 1):
            raise DomainError(f"window must span (n, 2n] (got lo={self.lo}, hi={self.hi})")
        if len(self.dcounts) != self.hi - self.lo + 1:
            raise DomainError("window length does not match its bounds")

    def d_at(self, i: int) -> int:
        if not self.lo <= i <= self.hi:
            raise DomainError(f"index {i} outside window [{self.lo}, {self.hi}]")
        return int(self.dcounts[i - self.lo])


def _window_python(n: int) -> tuple[np.ndarray, int]:
    lo, hi = n + 1, 2 * n
    dcounts = [0] * n
    marks = 0
    for j in range(1, hi + 1):
        for multiple in range((n // j + 1) * j, hi + 1, j):
            dcounts[multiple - lo] += 1
            marks += 1
    return np.asarray(dcounts, dtype=np.int64), marks


def window_divisor_counts(n: int, counter: OpCounter) -> Window:
    """d(i) for all i in (n, 2n] at once, counting one mark per multiple."""
    if n < 1:
        raise DomainError(f"window requires n >= 1 (got {n})")
    kernels = _backend.kernels()
    if kernels is not None and n <= core._KERNEL_MAX_N:
        dcounts, marks = kernels.window_divisor_counts(n)
    else:
        dcounts, marks = _window_python(n)
    counter.multiple_marks += int(marks)
    return Window(lo=n + 1, hi=2 * n, dcounts=dcounts)


def f_windowed(n: int, counter: OpCounter) -> int:
    """F(n) as the first i in (n, 2n] whose windowed divisor count is 2."""
    window = window_divisor_counts(n, counter)
    counter.p_evals += len(window.dcounts)
    hits = np.flatnonzero(window.dcounts == 2)
    if hits.size == 0:
        raise WindowExhaustedError(
            f"no prime found in ({n}, {2 * n}]: windowed scan exhausted"
        )
    return window.lo + int(hits[0])


def f_shortcircuit(n: int, counter: OpCounter) -> int:
    """Literal sum-of-products, stopping at the first zero inner product.

    Each P(i) enters the running product once; every later product would
    contain that same zero factor, so the remaining outer terms are zero.
    """
    if n < 1:
        raise DomainError(f"the recurrence is defined for n >= 1 (got {n})")
    running = 1
    acc = 0
    for m in range(n + 1, 2 * n + 1):
        counter.floor_pair_evals += m
        counter.p_evals += 1
        running *= core.p_literal(m)
        if running == 0:
            break
        acc += running
    return n + 1 + acc


def predicted_literal_cost(n: int) -> int:
    """Floor pairs f_shortcircuit(n) performs: sum of i over n < i <= q, q = next prime."""
    if n < 1:
        raise DomainError(f"predicted_literal_cost requires n >= 1 (got {n})")
    q = oracle.next_prime_oracle(n)
    return (q * (q + 1) - n * (n + 1)) // 2


def evaluate(n: int, strategy: Strategy, counter: OpCounter) -> int:
    """Run one strategy, accumulating its work into `counter`."""
    if n < 1:
        raise DomainError(f"the recurrence is defined for n >= 1 (got {n})")
    if strategy is Strategy.LITERAL_FORMULA:
        value, floor_pairs, p_evals = core.f_literal_counted(n)
        counter.floor_pair_evals += floor_pairs
        counter.p_evals += p_evals
        return value
    if strategy is Strategy.WINDOWED_SIEVE:
        return f_windowed(n, counter)
    if strategy is Strategy.ORACLE_DIRECT:
        return oracle.next_prime_oracle(n)
    raise DomainError(f"unknown strategy {strategy!r}")
