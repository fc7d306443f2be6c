"""Reference kernels in numpy/pure Python.

Same contract as the compiled ``_ckernels`` module; selected by
:mod:`inellipse.kernels` when the extension is unavailable.
"""

from __future__ import annotations

import math

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2


def _polys(s, t, v, w):
    """Coefficients of A(r)..F(r) as (r^2, r, 1) triples."""
    N = v * t - w * s
    sv = s * v
    return (
        ((w - 1) ** 2 * s * s - 2 * v * (w * t + t - 2 * w) * s + t * t * v * v, 2 * v * (s * t - 2 * w * s - t * N), t * t * v * v),
        (-4 * sv * (v - s), -2 * sv * (s - 2 * v - N), -2 * sv * v * t),
        (0.0, 0.0, sv * sv),
        (2 * sv * (N - s), 2 * sv * (s * w - N), 0.0),
        (0.0, -2 * sv * sv, 0.0),
        (sv * sv, 0.0, 0.0),
    )


def _eval(polys, r):
    return [p2 * r * r + p1 * r + p0 for p2, p1, p0 in polys]


def _eval_d(polys, r):
    return [2 * p2 * r + p1 for p2, p1, _ in polys]


def _discriminants(A, B, C, D, E, F):
    Delta = 4 * A * C - B * B
    delta = C * D * D + A * E * E - B * D * E - F * Delta
    return Delta, delta


def family_foci(s: float, t: float, v: float, w: float, rs) -> np.ndarray:
    """Foci of the inscribed ellipse at each r, from its coefficients.

    Returns an ``(n, 4)`` array of ``x1, y1, x2, y2``.
    """
    r = np.asarray(rs, dtype=float)
    A, B, C, D, E, F = _eval(_polys(s, t, v, w), r)
    C = np.broadcast_to(C, r.shape)
    Delta, delta = _discriminants(A, B, C, D, E, F)
    x0 = (B * E - 2 * C * D) / Delta
    y0 = (B * D - 2 * A * E) / Delta
    mu = 4 * delta / (Delta * Delta)
    root = np.sqrt((A - C) ** 2 + B * B)
    dx = np.sqrt(np.maximum(mu / 2 * (C - A + root), 0.0))
    dy = np.sqrt(np.maximum(mu / 2 * (A - C + root), 0.0))
    sgn = np.where(B < 0, -1.0, 1.0)
    return np.stack([x0 - dx, y0 + sgn * dy, x0 + dx, y0 - sgn * dy], axis=-1)


def family_area(s: float, t: float, v: float, w: float, rs) -> np.ndarray:
    r = np.asarray(rs, dtype=float)
    A, B, C, D, E, F = _eval(_polys(s, t, v, w), r)
    Delta, delta = _discriminants(A, B, C, D, E, F)
    return 2 * np.pi * delta / Delta ** 1.5


def _area_scalar(polys, r: float) -> float:
    Delta, delta = _discriminants(*_eval(polys, r))
    return delta / Delta ** 1.5


def _slope(polys, r: float) -> float:
    A, B, C, D, E, F = _eval(polys, r)
    dA, dB, dC, dD, dE, dF = _eval_d(polys, r)
    Delta, delta = _discriminants(A, B, C, D, E, F)
    dDelta = 4 * (dA * C + A * dC) - 2 * B * dB
    ddelta = (
        dC * D * D + 2 * C * D * dD + dA * E * E + 2 * A * E * dE
        - dB * D * E - B * dD * E - B * D * dE - dF * Delta - F * dDelta
    )
    return ddelta * Delta - 1.5 * delta * dDelta


def log_area_slope(s: float, t: float, v: float, w: float, r: float) -> float:
    """Positive multiple of d(log area)/dr at r."""
    return _slope(_polys(s, t, v, w), r)


def max_area_r(s: float, t: float, v: float, w: float, tol: float = 1e-12, margin: float = 1e-12) -> float:
    """Golden-section bracket of the max-area r, then bisection on the slope sign."""
    polys = _polys(s, t, v, w)
    a, b = margin, 1.0 - margin
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = _area_scalar(polys, c), _area_scalar(polys, d)
    while b - a > 1e-4:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = _area_scalar(polys, c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = _area_scalar(polys, d)
    lo, hi = a, b
    if not (_slope(polys, lo) > 0 > _slope(polys, hi)):
        lo, hi = margin, 1.0 - margin
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g = _slope(polys, mid)
        if g > 0:
            lo = mid
        elif g < 0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)
