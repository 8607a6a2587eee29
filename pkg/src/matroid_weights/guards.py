"""Enumeration guards.

Subset/circuit/flat enumeration is exponential in the ground set size, so
every enumerating operation checks the ground set against a guard and fails
loudly (``GroundSetTooLarge``) instead of hanging.  The default guard of 24
elements can be raised per call, or globally through the ``MW_GUARD_N``
environment variable (the CLI exposes this as ``--unsafe-n``).
"""

from __future__ import annotations

import os

from .errors import GroundSetTooLarge

DEFAULT_GUARD_N = 24

# Hard cap: ground subsets are bitmask-valued.
MAX_GROUND_SET = 64


def effective_guard(override: int | None = None) -> int:
    """Resolve the enumeration guard: explicit override > env var > default."""
    if override is not None:
        return min(int(override), MAX_GROUND_SET)
    env = os.environ.get("MW_GUARD_N")
    if env is not None:
        try:
            return min(int(env), MAX_GROUND_SET)
        except ValueError:
            pass
    return DEFAULT_GUARD_N


def check_enumeration(n: int, override: int | None = None, what: str = "enumeration") -> None:
    guard = effective_guard(override)
    if n > guard:
        raise GroundSetTooLarge(
            f"{what} on {n} elements exceeds the guard of {guard} "
            f"(raise it with MW_GUARD_N or an explicit override)"
        )
