"""Exception types shared across the package.

Exit-code mapping used by the CLI: DomainError and BackendError are usage
problems (exit 2); OracleMismatchError and WindowExhaustedError are
verification failures (exit 1).
"""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class BackendError(RuntimeError):
    """The requested kernel backend is unknown or unavailable."""


class WindowExhaustedError(RuntimeError):
    """No prime indicator hit zero inside a (n, 2n] window.

    Cannot happen for correct inputs (there is always a prime in (n, 2n]);
    raised loudly instead of silently scanning out of bounds.
    """


class OracleMismatchError(RuntimeError):
    """A strategy disagreed with the trial-division oracle."""

    def __init__(self, n: int, strategy, got: int, expected: int):
        self.n = n
        self.strategy = strategy
        self.got = got
        self.expected = expected
        token = getattr(strategy, "value", strategy)
        super().__init__(
            f"oracle mismatch: n={n} strategy={token} got={got} expected={expected}"
        )
