"""Vectorized numpy fallbacks for the hot loops.

Same contracts as :mod:`primerec._kernels_numba`: identical return values
and identical operation counts, with the counts of the array paths
accounted per formula evaluation (one floor pair per (i, j) term, one
mark per materialized multiple) rather than by scalar increments.
"""

import numpy as np


def divisor_count(i: int) -> int:
    js = np.arange(1, i + 1, dtype=np.int64)
    return int((i // js - (i - 1) // js).sum())


def prime_indicator(i: int) -> int:
    d = divisor_count(i)
    return -((-(d - 2)) // i)


def f_literal_full(n: int) -> tuple[int, int, int]:
    lo = n + 1
    p = np.empty(n, dtype=np.int64)
    floor_pairs = 0
    for idx in range(n):
        i = lo + idx
        js = np.arange(1, i + 1, dtype=np.int64)
        d = int((i // js - (i - 1) // js).sum())
        floor_pairs += i
        p[idx] = -((-(d - 2)) // i)
    # Full double sum: cumprod keeps every inner product, no early exit.
    total = n + 1 + int(np.cumprod(p).sum())
    return total, floor_pairs, n


def window_divisor_counts(n: int) -> tuple[np.ndarray, int]:
    lo = n + 1
    hi = 2 * n
    js = np.arange(1, hi + 1, dtype=np.int64)
    counts = hi // js - n // js
    marks = int(counts.sum())
    jrep = np.repeat(js, counts)
    kfirst = np.repeat(n // js + 1, counts)
    group_starts = np.repeat(np.cumsum(counts) - counts, counts)
    offsets = np.arange(marks, dtype=np.int64) - group_starts
    idx = jrep * (kfirst + offsets) - lo
    dcounts = np.bincount(idx, minlength=n).astype(np.int64)
    return dcounts, marks
