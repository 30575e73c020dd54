#!/usr/bin/env python3
"""Time the hot kernels across backends (numba JIT, numpy, pure python).

Every backend must produce identical values and identical operation
counts; this script re-checks that while it times them, so a speedup
never comes from computing something else.

Usage:
    python benchmarks/compare_backends.py
    python benchmarks/compare_backends.py --window-sizes 4096,65536 --repeats 5
"""

import argparse
import time

from primerec import OpCounter, available_backends, use_backend
from primerec.core import f_literal_counted
from primerec.strategies import f_windowed, window_divisor_counts


def _time_best(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def _bench_path(label, make_fn, sizes, backends, repeats):
    print(f"\n{label}")
    header = f"{'n':>8}  " + "".join(f"{b:>12}" for b in backends) + "   speedup vs last"
    print(header)
    print("-" * len(header))
    for n in sizes:
        timings = []
        outcomes = []
        for backend in backends:
            with use_backend(backend):
                fn = make_fn(n)
                fn()  # warm-up: JIT compile / cache load outside the timing
                best, outcome = _time_best(fn, repeats)
            timings.append(best)
            outcomes.append(outcome)
        if any(o != outcomes[0] for o in outcomes[1:]):
            raise SystemExit(f"backend disagreement at n={n}: {outcomes}")
        cells = "".join(f"{t * 1e3:>10.3f}ms" for t in timings)
        speedup = timings[-1] / timings[0] if timings[0] > 0 else float("inf")
        print(f"{n:>8}  {cells}   {speedup:>8.1f}x")


def _window_fn(n):
    def fn():
        counter = OpCounter()
        window = window_divisor_counts(n, counter)
        return int(window.dcounts.sum()), counter.multiple_marks

    return fn


def _literal_fn(n):
    def fn():
        return f_literal_counted(n)

    return fn


def _next_prime_fn(n):
    def fn():
        counter = OpCounter()
        value = f_windowed(n, counter)
        return value, counter.multiple_marks, counter.p_evals

    return fn


def _int_list(text):
    return [int(part) for part in text.split(",") if part]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--window-sizes", type=_int_list, default=[1024, 8192, 65536])
    parser.add_argument("--literal-sizes", type=_int_list, default=[64, 256, 1024])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument(
        "--backends",
        type=lambda t: [p for p in t.split(",") if p],
        default=None,
        help="comma-separated subset, fastest first (default: all available)",
    )
    args = parser.parse_args()

    backends = args.backends or list(available_backends())
    print(f"backends: {', '.join(backends)}  (best of {args.repeats})")

    _bench_path("windowed divisor counts over (n, 2n]", _window_fn, args.window_sizes,
                backends, args.repeats)
    _bench_path("literal recurrence evaluation", _literal_fn, args.literal_sizes,
                backends, args.repeats)
    _bench_path("next prime via windowed scan", _next_prime_fn, args.window_sizes,
                backends, args.repeats)


if __name__ == "__main__":
    main()
