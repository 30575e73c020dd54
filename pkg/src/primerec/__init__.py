"""primerec: next-prime generation through an exact divisor-count recurrence.

The value F(n) = n + 1 + sum_{m=n+1}^{2n} prod_{i=n+1}^{m} P(i), with P the
floor-arithmetic prime indicator, equals the smallest prime greater than n.
The package evaluates F literally, by short-circuit, and by a windowed
divisor sieve; verifies every path against independent trial-division
oracles; and benchmarks the strategies with deterministic operation
counters.
"""

from ._backend import available_backends, get_backend, set_backend, use_backend
from .bench import BenchRecord, BenchSuite, emit_report, run_bench, write_report
from .cli import VerificationReport, run_verify
from .core import (
    divisor_count_literal,
    f_literal,
    f_literal_counted,
    floor_div,
    floor_div_delta,
    next_prime,
    p_literal,
    prime_sequence,
)
from .errors import (
    BackendError,
    DomainError,
    OracleMismatchError,
    WindowExhaustedError,
)
from .oracle import (
    SieveTable,
    build_sieve,
    divisor_count_enum,
    is_prime_trial,
    next_prime_oracle,
)
from .strategies import (
    OpCounter,
    Strategy,
    Window,
    evaluate,
    f_shortcircuit,
    f_windowed,
    predicted_literal_cost,
    window_divisor_counts,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BenchSuite",
    "BackendError",
    "DomainError",
    "OpCounter",
    "OracleMismatchError",
    "SieveTable",
    "Strategy",
    "VerificationReport",
    "Window",
    "WindowExhaustedError",
    "available_backends",
    "build_sieve",
    "divisor_count_enum",
    "divisor_count_literal",
    "emit_report",
    "evaluate",
    "f_literal",
    "f_literal_counted",
    "f_shortcircuit",
    "f_windowed",
    "floor_div",
    "floor_div_delta",
    "get_backend",
    "is_prime_trial",
    "next_prime",
    "next_prime_oracle",
    "p_literal",
    "predicted_literal_cost",
    "prime_sequence",
    "run_bench",
    "run_verify",
    "set_backend",
    "use_backend",
    "window_divisor_counts",
    "write_report",
    "__version__",
]
