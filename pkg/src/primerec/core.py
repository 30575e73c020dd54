"""Literal evaluation of the next-prime recurrence.

Formula-to-code map (all arithmetic exact, floor = toward negative
infinity):

* ``floor_div(a, b)``        -> floor(a / b), b > 0
* ``floor_div_delta(i, j)``  -> floor(i/j) - floor((i-1)/j), which is 1
  when j divides i and 0 otherwise
* ``divisor_count_literal``  -> d(i) = sum of the deltas over j = 1..i
* ``p_literal(i)``           -> P(i) = -floor(-(d(i) - 2) / i) for i >= 2;
  0 when i is prime (d = 2), 1 when i is composite (0 < (d-2)/i < 1)
* ``f_literal(n)``           -> F(n) = n + 1 + sum over m = n+1..2n of the
  product of P(i) for i = n+1..m

P carries a leading minus outside the floor.  Dropping it (i.e. using
floor(-(d-2)/i) directly) gives -1 for composite arguments, which breaks
the product telescoping that makes F(n) land on the next prime; the form
implemented here is the one that takes values in {0, 1}.

F(n) equals the smallest prime greater than n for every n >= 1, prime or
not.  Evaluating each inner product term costs one P per (m, i) index
pair, but P(i) is a pure function of i, so one evaluation covers all the
products it appears in: the literal evaluator computes P once per i in
(n, 2n] and then forms the full Theta(n^2)-term double sum with no early
exit.  That keeps `f_literal` the slow-but-transparent reference the
strategies in :mod:`primerec.strategies` are tested against.

Everything here is a pure function of its arguments; Python ints keep all
intermediates exact at any size.  Inputs small enough that every
intermediate (including operation counts) fits in int64 may be routed to
the compiled kernels selected by :mod:`primerec._backend`; larger inputs
always take the plain-int path.
"""

from __future__ import annotations

from . import _backend
from .errors import DomainError

# Largest n for which the literal kernels stay inside int64:
# floor-pair counts reach (3n^2 + n) / 2.
_KERNEL_MAX_N = 2**31
# divisor_count / p_literal kernels only hold values <= i.
_KERNEL_MAX_I = 2**62


def floor_div(numer: int, denom: int) -> int:
    """Greatest integer q with q <= numer/denom; denom must be positive.

    Distinct from C-style truncation: floor_div(-1, 5) is -1, not 0.
    """
    if denom <= 0:
        raise DomainError(f"floor_div requires a positive denominator (got {denom})")
    return numer // denom


def floor_div_delta(i: int, j: int) -> int:
    """floor(i/j) - floor((i-1)/j): 1 if j divides i, else 0.

    Defined for 1 <= j <= i.
    """
    if i < 1:
        raise DomainError(f"floor_div_delta requires i >= 1 (got i={i})")
    if j < 1 or j > i:
        raise DomainError(f"floor_div_delta requires 1 <= j <= i (got i={i}, j={j})")
    return floor_div(i, j) - floor_div(i - 1, j)


def divisor_count_literal(i: int) -> int:
    """d(i) as the sum of floor_div_delta(i, j) over j = 1..i."""
    if i < 1:
        raise DomainError(f"divisor_count_literal requires i >= 1 (got {i})")
    kernels = _backend.kernels()
    if kernels is not None and i <= _KERNEL_MAX_I:
        return int(kernels.divisor_count(i))
    return sum(floor_div_delta(i, j) for j in range(1, i + 1))


def _indicator(value: int) -> int:
    if value not in (0, 1):
        raise DomainError(f"indicator value must be 0 or 1 (got {value})")
    return value


def p_literal(i: int) -> int:
    """Prime indicator P(i) = -floor(-(d(i) - 2) / i): 0 if prime, 1 if composite.

    Only defined for i >= 2 (d(1) - 2 is negative enough to leave {0, 1}).
    """
    if i < 2:
        raise DomainError(f"the prime indicator is defined for i >= 2 (got {i})")
    kernels = _backend.kernels()
    if kernels is not None and i <= _KERNEL_MAX_I:
        return _indicator(int(kernels.prime_indicator(i)))
    d = divisor_count_literal(i)
    return _indicator(-floor_div(-(d - 2), i))


def _f_literal_counted(n: int) -> tuple[int, int, int]:
    """Plain-int literal evaluation returning (value, floor_pair_evals, p_evals)."""
    indicators = []
    floor_pairs = 0
    for i in range(n + 1, 2 * n + 1):
        indicators.append(p_literal(i))
        floor_pairs += i
    total = n + 1
    for m_idx in range(len(indicators)):
        prod = 1
        for value in indicators[: m_idx + 1]:
            prod *= value
        total += prod
    return total, floor_pairs, len(indicators)


def f_literal_counted(n: int) -> tuple[int, int, int]:
    """Literal F(n) with its operation counts (value, floor_pair_evals, p_evals)."""
    if n < 1:
        raise DomainError(f"the recurrence is defined for n >= 1 (got {n})")
    kernels = _backend.kernels()
    if kernels is not None and n <= _KERNEL_MAX_N:
        value, floor_pairs, p_evals = kernels.f_literal_full(n)
        return int(value), int(floor_pairs), int(p_evals)
    return _f_literal_counted(n)


def f_literal(n: int) -> int:
    """F(n) = n + 1 + sum_{m=n+1}^{2n} prod_{i=n+1}^{m} P(i), evaluated literally."""
    return f_literal_counted(n)[0]


def next_prime(n: int, strategy=None) -> int:
    """Smallest prime greater than n (n >= 1), via the chosen strategy.

    Defaults to the windowed sieve; all strategies return identical values.
    """
    from . import strategies

    if strategy is None:
        strategy = strategies.Strategy.WINDOWED_SIEVE
    return strategies.evaluate(n, strategy, strategies.OpCounter())


def prime_sequence(count: int, strategy=None) -> list[int]:
    """First `count` primes [2, 3, 5, ...] by iterating the recurrence from 2."""
    if count < 0:
        raise DomainError(f"prime_sequence requires count >= 0 (got {count})")
    if count == 0:
        return []
    primes = [2]
    while len(primes) < count:
        primes.append(next_prime(primes[-1], strategy))
    return primes
