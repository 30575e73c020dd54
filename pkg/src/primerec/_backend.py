"""Kernel backend selection.

The hot loops (per-number divisor counts, the literal double sum, and the
windowed divisor sieve) have three interchangeable implementations:

* ``numba``  - ``@njit``-compiled loops; the default whenever numba imports.
* ``numpy``  - vectorized array code; fallback when numba is unavailable.
* ``python`` - plain-int reference loops; exact for arbitrarily large
  operands and the ground truth the other two are tested against.

The backend is picked once from the ``PRIMEREC_BACKEND`` environment
variable ("numba", "numpy", "python", or "auto"), and can be switched at
runtime with :func:`set_backend` / :func:`use_backend`.  All backends
return identical values and identical operation counts; only speed
differs.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from .errors import BackendError

ENV_VAR = "PRIMEREC_BACKEND"
_CHOICES = ("numba", "numpy", "python")

_active: str | None = None
_numba_usable: bool | None = None


def numba_available() -> bool:
    """True if the numba JIT can actually be imported."""
    global _numba_usable
    if _numba_usable is None:
        try:
            import numba  # noqa: F401

            _numba_usable = True
        except Exception:
            _numba_usable = False
    return _numba_usable


def available_backends() -> tuple[str, ...]:
    if numba_available():
        return _CHOICES
    return tuple(c for c in _CHOICES if c != "numba")


def _resolve(requested: str | None) -> str:
    if requested is None:
        requested = os.environ.get(ENV_VAR, "auto")
    requested = requested.strip().lower() or "auto"
    if requested == "auto":
        return "numba" if numba_available() else "numpy"
    if requested not in _CHOICES:
        raise BackendError(
            f"unknown backend {requested!r}; choose one of "
            f"{', '.join(_CHOICES)} or 'auto'"
        )
    if requested == "numba" and not numba_available():
        raise BackendError("backend 'numba' requested but numba is not importable")
    return requested


def get_backend() -> str:
    """Name of the active backend, resolving it on first use."""
    global _active
    if _active is None:
        _active = _resolve(None)
    return _active


def set_backend(name: str | None) -> str:
    """Switch backends; ``None`` re-resolves from the environment."""
    global _active
    _active = _resolve(name)
    return _active


@contextmanager
def use_backend(name: str):
    """Temporarily switch backends (used by tests and the comparison bench)."""
    previous = get_backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def kernels():
    """Kernel module for the active backend, or ``None`` for pure python."""
    backend = get_backend()
    if backend == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if backend == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    return None
