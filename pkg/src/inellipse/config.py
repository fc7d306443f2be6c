"""Tolerance configuration shared by every predicate in the package."""

from __future__ import annotations

import os

DEFAULT_TOLERANCE = 1e-9
TOLERANCE_ENV_VAR = "INELLIPSE_TOLERANCE"

# r is accepted on [PARAM_MARGIN, 1 - PARAM_MARGIN]; the ellipse collapses onto a vertex at the ends.
PARAM_MARGIN = 1e-12


def default_tolerance() -> float:
    """Relative tolerance used when a caller passes ``tol=None``.

    Reads ``INELLIPSE_TOLERANCE`` on every call so the CLI and tests can
    override it without re-importing.
    """
    raw = os.environ.get(TOLERANCE_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_TOLERANCE
    value = float(raw)
    if not value > 0:
        raise ValueError(f"{TOLERANCE_ENV_VAR} must be positive, got {raw!r}")
    return value


def resolve(tol: float | None) -> float:
    return default_tolerance() if tol is None else tol
