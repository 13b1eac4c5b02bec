"""Runtime limits for the exact solvers."""

from __future__ import annotations

import os

DEFAULT_MAX_N = 5


class ExactCapExceeded(ValueError):
    """An exact computation was requested above the configured variable cap."""


def max_exact_n() -> int:
    """Hard cap on arity for exhaustive/exact operations (BOOLDEG_MAX_N)."""
    raw = os.environ.get("BOOLDEG_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"BOOLDEG_MAX_N must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"BOOLDEG_MAX_N must be positive, got {value}")
    return value


def check_cap(n: int, what: str) -> None:
    cap = max_exact_n()
    if n > cap:
        raise ExactCapExceeded(
            f"{what} on {n} variables exceeds the exact-computation cap "
            f"{cap}; raise BOOLDEG_MAX_N to override"
        )
