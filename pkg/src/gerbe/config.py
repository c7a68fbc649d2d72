"""Tunable tolerances and bounds.

All numeric thresholds used by the library live here so they can be
adjusted in one place.  The enumeration bound may also be overridden with
the ``GERBE_MAX_N`` environment variable.
"""

import os

DEFAULT_MAX_N = 10

GRAM_TOL = 1e-9
RANK_TOL = 1e-9
COLINEAR_TOL = 1e-8
ISOMETRY_TOL = 1e-8
PIVOT_TOL = 1e-10
ROOT_INTERVAL_WIDTH = 1e-12

JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-13


def enumeration_bound() -> int:
    """Maximum vertex count for group enumerations (env: GERBE_MAX_N)."""
    raw = os.environ.get("GERBE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"GERBE_MAX_N must be an integer, got {raw!r}") from None
