"""Numba-compiled hot loops.

Import through :mod:`primerec._backend`, never directly: the import cost
(and the first-call JIT compile, amortized by ``cache=True``) should only
be paid when the numba backend is actually selected.

Python division semantics carry over into ``@njit`` code: ``//`` floors
toward negative infinity for int64 operands, which the prime-indicator
expression depends on.  Callers guard operand ranges so every intermediate
fits in int64.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def divisor_count(i):
    """d(i) as the literal floor-pair sum over j = 1..i."""
    d = 0
    for j in range(1, i + 1):
        d += i // j - (i - 1) // j
    return d


@njit(cache=True)
def prime_indicator(i):
    """0 for prime i, 1 for composite i, from the floored divisor-count excess."""
    d = divisor_count(i)
    return -((-(d - 2)) // i)


@njit(cache=True)
def f_literal_full(n):
    """Literal recurrence value plus (floor_pair_evals, p_evals).

    Evaluates the indicator once per i in (n, 2n] (i floor pairs each),
    then the full double sum-of-products over the stored indicators with
    no early exit.
    """
    lo = n + 1
    p = np.empty(n, dtype=np.int64)
    floor_pairs = 0
    for idx in range(n):
        i = lo + idx
        d = 0
        for j in range(1, i + 1):
            d += i // j - (i - 1) // j
        floor_pairs += i
        p[idx] = -((-(d - 2)) // i)
    total = n + 1
    for m_idx in range(n):
        prod = 1
        for k in range(m_idx + 1):
            prod *= p[k]
        total += prod
    return total, floor_pairs, n


@njit(cache=True)
def window_divisor_counts(n):
    """Divisor counts for every i in (n, 2n] by marking multiples.

    Returns (dcounts, marks) where dcounts[i - (n+1)] = d(i) and marks is
    the number of individual mark events, one per multiple of each
    j in [1, 2n] landing inside the window.
    """
    lo = n + 1
    hi = 2 * n
    dcounts = np.zeros(n, dtype=np.int64)
    marks = 0
    for j in range(1, hi + 1):
        k = n // j + 1
        top = hi // j
        while k <= top:
            dcounts[j * k - lo] += 1
            marks += 1
            k += 1
    return dcounts, marks
