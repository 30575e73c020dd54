"""Independent ground truth: trial division, an Eratosthenes table, and
direct divisor enumeration.

Nothing here touches the formula code in :mod:`primerec.core` or
:mod:`primerec.strategies`; equivalence tests between the two sides are
only meaningful because this module stands alone.  ``math.isqrt`` supplies
the exact integer square root (pure integer Newton iteration, no floating
point), so trial-division bounds are never off by one near perfect
squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import DomainError


def is_prime_trial(i: int) -> bool:
    """Trial division: i >= 2 with no divisor d in [2, isqrt(i)]."""
    if i < 2:
        return False
    for d in range(2, isqrt(i) + 1):
        if i % d == 0:
            return False
    return True


@dataclass(frozen=True)
class SieveTable:
    """Primality flags for 0..limit; flags[i] is True exactly for prime i."""

    limit: int
    flags: np.ndarray

    def is_prime(self, i: int) -> bool:
        return bool(self.flags[i])

    def primes(self) -> list[int]:
        return np.flatnonzero(self.flags).tolist()


def build_sieve(limit: int) -> SieveTable:
    """Sieve of Eratosthenes over 0..limit (limit >= 1)."""
    if limit < 1:
        raise DomainError(f"sieve limit must be >= 1 (got {limit})")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    flags.setflags(write=False)
    return SieveTable(limit=limit, flags=flags)


def next_prime_oracle(n: int) -> int:
    """Smallest prime strictly greater than n, by incremental trial division."""
    if n < 0:
        raise DomainError(f"next_prime_oracle requires n >= 0 (got {n})")
    candidate = n + 1
    while not is_prime_trial(candidate):
        candidate += 1
    return candidate


def divisor_count_enum(i: int) -> int:
    """Number of divisors of i by direct enumeration of [1, i]."""
    if i < 1:
        raise DomainError(f"divisor_count_enum requires i >= 1 (got {i})")
    count = 0
    for d in range(1, i + 1):
        if i % d == 0:
            count += 1
    return count
