# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for scans along the inscribed-ellipse family.

Mirrors ``_pykernels`` function for function.
"""

from libc.math cimport sqrt, M_PI

import numpy as np

cdef double INV_PHI = (sqrt(5.0) - 1.0) / 2.0


cdef struct Polys:
    double a2, a1, a0
    double b2, b1, b0
    double c0
    double d2, d1
    double e1
    double f2


cdef Polys _polys(double s, double t, double v, double w) noexcept nogil:
    cdef Polys p
    cdef double N = v * t - w * s
    cdef double sv = s * v
    p.a2 = (w - 1) * (w - 1) * s * s - 2 * v * (w * t + t - 2 * w) * s + t * t * v * v
    p.a1 = 2 * v * (s * t - 2 * w * s - t * N)
    p.a0 = t * t * v * v
    p.b2 = -4 * sv * (v - s)
    p.b1 = -2 * sv * (s - 2 * v - N)
    p.b0 = -2 * sv * v * t
    p.c0 = sv * sv
    p.d2 = 2 * sv * (N - s)
    p.d1 = 2 * sv * (s * w - N)
    p.e1 = -2 * sv * sv
    p.f2 = sv * sv
    return p


cdef inline void _coeffs(Polys* p, double r, double* out) noexcept nogil:
    out[0] = (p.a2 * r + p.a1) * r + p.a0
    out[1] = (p.b2 * r + p.b1) * r + p.b0
    out[2] = p.c0
    out[3] = (p.d2 * r + p.d1) * r
    out[4] = p.e1 * r
    out[5] = p.f2 * r * r


cdef inline double _area(Polys* p, double r) noexcept nogil:
    cdef double c[6]
    _coeffs(p, r, c)
    cdef double Delta = 4 * c[0] * c[2] - c[1] * c[1]
    cdef double delta = c[2] * c[3] * c[3] + c[0] * c[4] * c[4] - c[1] * c[3] * c[4] - c[5] * Delta
    return delta / (Delta * sqrt(Delta))


cdef double _slope(Polys* p, double r) noexcept nogil:
    cdef double c[6]
    _coeffs(p, r, c)
    cdef double A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5]
    cdef double dA = 2 * p.a2 * r + p.a1
    cdef double dB = 2 * p.b2 * r + p.b1
    cdef double dD = 2 * p.d2 * r + p.d1
    cdef double dE = p.e1
    cdef double dF = 2 * p.f2 * r
    cdef double Delta = 4 * A * C - B * B
    cdef double delta = C * D * D + A * E * E - B * D * E - F * Delta
    cdef double dDelta = 4 * dA * C - 2 * B * dB
    cdef double ddelta = (2 * C * D * dD + dA * E * E + 2 * A * E * dE
                          - dB * D * E - B * dD * E - B * D * dE - dF * Delta - F * dDelta)
    return ddelta * Delta - 1.5 * delta * dDelta


def family_foci(double s, double t, double v, double w, rs):
    cdef double[::1] r = np.ascontiguousarray(rs, dtype=np.float64).reshape(-1)
    cdef Py_ssize_t n = r.shape[0], i
    out = np.empty((n, 4), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Polys p = _polys(s, t, v, w)
    cdef double c[6]
    cdef double A, B, C, D, E, F, Delta, delta, x0, y0, mu, root, kA, kC, dx, dy, sgn
    with nogil:
        for i in range(n):
            _coeffs(&p, r[i], c)
            A = c[0]; B = c[1]; C = c[2]; D = c[3]; E = c[4]; F = c[5]
            Delta = 4 * A * C - B * B
            delta = C * D * D + A * E * E - B * D * E - F * Delta
            x0 = (B * E - 2 * C * D) / Delta
            y0 = (B * D - 2 * A * E) / Delta
            mu = 4 * delta / (Delta * Delta)
            root = sqrt((A - C) * (A - C) + B * B)
            kA = mu / 2 * (C - A + root)
            kC = mu / 2 * (A - C + root)
            dx = sqrt(kA) if kA > 0 else 0.0
            dy = sqrt(kC) if kC > 0 else 0.0
            sgn = -1.0 if B < 0 else 1.0
            o[i, 0] = x0 - dx
            o[i, 1] = y0 + sgn * dy
            o[i, 2] = x0 + dx
            o[i, 3] = y0 - sgn * dy
    return out.reshape(np.shape(rs) + (4,))


def family_area(double s, double t, double v, double w, rs):
    cdef double[::1] r = np.ascontiguousarray(rs, dtype=np.float64).reshape(-1)
    cdef Py_ssize_t n = r.shape[0], i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Polys p = _polys(s, t, v, w)
    with nogil:
        for i in range(n):
            o[i] = 2 * M_PI * _area(&p, r[i])
    return out.reshape(np.shape(rs))


def log_area_slope(double s, double t, double v, double w, double r):
    cdef Polys p = _polys(s, t, v, w)
    return _slope(&p, r)


def max_area_r(double s, double t, double v, double w, double tol=1e-12, double margin=1e-12):
    cdef Polys p = _polys(s, t, v, w)
    cdef double a = margin, b = 1.0 - margin
    cdef double c = b - INV_PHI * (b - a)
    cdef double d = a + INV_PHI * (b - a)
    cdef double fc = _area(&p, c), fd = _area(&p, d)
    cdef double lo, hi, mid, g
    with nogil:
        while b - a > 1e-4:
            if fc > fd:
                b = d; d = c; fd = fc
                c = b - INV_PHI * (b - a)
                fc = _area(&p, c)
            else:
                a = c; c = d; fc = fd
                d = a + INV_PHI * (b - a)
                fd = _area(&p, d)
        lo = a
        hi = b
        if not (_slope(&p, lo) > 0 and _slope(&p, hi) < 0):
            lo = margin
            hi = 1.0 - margin
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            g = _slope(&p, mid)
            if g > 0:
                lo = mid
            elif g < 0:
                hi = mid
            else:
                lo = mid
                hi = mid
    return 0.5 * (lo + hi)
