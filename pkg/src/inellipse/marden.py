"""Foci of inscribed ellipses as roots of a complex quadratic (Marden's theorem).

Points are complex numbers ``x + iy`` throughout this module.  For a triangle
with vertices ``z1, z2, z3`` and weights ``t1 + t2 + t3 = 1`` the zeros of

    F(z) = t1/(z - z1) + t2/(z - z2) + t3/(z - z3)

are the foci of an ellipse tangent to the three side lines.  Applying this
to the triangle cut out by sides S1, S3, S4 of ``Q(s,t,v,w)`` gives the
foci quadratic of every member of the inscribed family.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import config
from .conic import Conic
from .errors import CollinearVertices, InvalidWeights, ParamOutOfRange, TrapezoidInput
from .inscribed import _require_family_form, check_cyclic_trapezoid, check_param, tau
from .quad import CanonicalQuad, is_trapezoid


@dataclass(frozen=True)
class TriangleWeights:
    t1: float
    t2: float
    t3: float

    def __post_init__(self) -> None:
        total = self.t1 + self.t2 + self.t3
        if abs(total - 1.0) > 1e-9 * max(1.0, abs(self.t1), abs(self.t2), abs(self.t3)):
            raise InvalidWeights(f"weights must sum to 1, got {total}")
        if not self.t1 * self.t2 * self.t3 > 0:
            raise InvalidWeights("weights need t1*t2*t3 > 0")

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3))


@dataclass(frozen=True)
class FociQuadratic:
    """``p(z) = z^2 + c1 z + c0``."""

    c1: complex
    c0: complex

    def __call__(self, z: complex) -> complex:
        return (z + self.c1) * z + self.c0

    def roots(self) -> tuple[complex, complex]:
        # larger-magnitude root first, the other from the product
        c1, c0 = complex(self.c1), complex(self.c0)
        sq = cmath.sqrt(c1 * c1 - 4 * c0)
        if (c1.conjugate() * sq).real < 0:
            sq = -sq
        q = -(c1 + sq) / 2
        if q == 0:
            return 0j, 0j
        return q, c0 / q

    @property
    def scale(self) -> float:
        """Magnitude of the roots; residuals of ``p`` are compared against its square."""
        return max(1.0, abs(self.c1), math.sqrt(abs(self.c0)))


def _quadratic(s: float, t: float, v: float, w: float, r: float) -> FociQuadratic:
    N = v * t - w * s
    ta = (s - v) * r + v
    c1 = complex(-s * v, (N - s) * r - v * t) / ta
    c0 = r * s * complex(-w, v) / ta
    return FociQuadratic(c1, c0)


def foci_quadratic(cq: CanonicalQuad, r: float) -> FociQuadratic:
    r = check_param(r)
    if is_trapezoid(cq):
        raise TrapezoidInput("use foci_quadratic_trapezoid (or family_foci_quadratic) for trapezoids")
    return _quadratic(cq.s, cq.t, cq.v, cq.w, r)


def foci_quadratic_trapezoid(s: float, t: float, r: float) -> FociQuadratic:
    """Foci quadratic for the cyclic trapezoid ``Q(s,t,s,1-t)``."""
    check_cyclic_trapezoid(s, t)
    r = check_param(r)
    return FociQuadratic(complex(-s, 2 * r * t - 2 * r - t), 1j * complex(s, 1 - t) * r)


def family_foci_quadratic(cq: CanonicalQuad, r: float) -> FociQuadratic:
    """Foci quadratic for any canonical quad; ``v == s`` trapezoids included."""
    r = check_param(r)
    _require_family_form(cq)
    return _quadratic(cq.s, cq.t, cq.v, cq.w, r)


def triangle_vertices(cq: CanonicalQuad) -> tuple[complex, complex, complex]:
    """Vertices of the triangle bounded by the lines S1, S3 and S4."""
    s, t, v, w = cq.s, cq.t, cq.v, cq.w
    if abs(s - v) <= config.default_tolerance() * max(1.0, s, v):
        raise TrapezoidInput("S1 and S3 are parallel; they do not meet")
    return complex(0, t - s * (t - w) / (s - v)), 0j, complex(v, w)


def t_weights(cq: CanonicalQuad, r: float) -> TriangleWeights:
    """Weights that make ``F`` on :func:`triangle_vertices` vanish at the foci."""
    r = check_param(r)
    if is_trapezoid(cq):
        raise TrapezoidInput("t-weights are defined on the S1, S3, S4 triangle of a non-trapezoid")
    s, v, N = cq.s, cq.v, cq.N
    denom = N * tau(cq, r)
    t1 = s * ((s - v) * r + N) / denom
    t2 = s * (v - s) * r / denom
    return TriangleWeights(t1, t2, 1.0 - t1 - t2)


@dataclass(frozen=True)
class MardenResult:
    foci: tuple[complex, complex]
    tangency: tuple[complex, complex, complex]
    quadratic: FociQuadratic


def marden_foci(z1: complex, z2: complex, z3: complex, wts: TriangleWeights) -> MardenResult:
    """Zeros of ``F`` and the tangency points on the sides opposite z1, z2, z3."""
    z1, z2, z3 = complex(z1), complex(z2), complex(z3)
    side = max(abs(z1 - z2), abs(z2 - z3), abs(z1 - z3))
    area2 = ((z2 - z1).conjugate() * (z3 - z1)).imag
    if side == 0 or abs(area2) <= 1e-12 * side * side:
        raise CollinearVertices("triangle vertices are collinear or repeated")
    if not isinstance(wts, TriangleWeights):
        wts = TriangleWeights(*wts)
    t1, t2, t3 = wts
    # numerator of F, monic because t1 + t2 + t3 = 1
    total = t1 * (z2 + z3) + t2 * (z1 + z3) + t3 * (z1 + z2)
    prod = t1 * z2 * z3 + t2 * z1 * z3 + t3 * z1 * z2
    quad = FociQuadratic(-total, prod)
    zeta = (
        (t2 * z3 + t3 * z2) / (t2 + t3),
        (t1 * z3 + t3 * z1) / (t1 + t3),
        (t1 * z2 + t2 * z1) / (t1 + t2),
    )
    return MardenResult(quad.roots(), zeta, quad)


def _check_unit_square(w: float, t: float) -> None:
    if not (0 < w < 1 and 0 < t < 1):
        raise ParamOutOfRange(f"(w, t) must lie in (0,1)^2, got ({w}, {t})")


def unit_triangle_inellipse(w: float, t: float) -> tuple[Conic, tuple[tuple[float, float], ...]]:
    """Ellipse inscribed in the triangle (0,0), (1,0), (0,1) touching the legs at (t,0) and (0,w).

    Returns the conic and the three contact points, the last on the hypotenuse.
    """
    _check_unit_square(w, t)
    conic = Conic(
        w * w,
        -2 * w * t * (2 * w * t - 2 * w - 2 * t + 1),
        t * t,
        -2 * w * w * t,
        -2 * t * t * w,
        t * t * w * w,
    )
    k = t + (1 - 2 * t) * w
    contacts = ((t, 0.0), (0.0, w), (t * (1 - w) / k, w * (1 - t) / k))
    return conic, contacts


def unit_triangle_weights(w: float, t: float) -> TriangleWeights:
    """Marden weights for the same ellipse on the triangle ``z1 = 0, z2 = i, z3 = 1``."""
    _check_unit_square(w, t)
    k = t + (1 - t) * w
    return TriangleWeights(t * w / k, t * (1 - w) / k, (1 - t) * w / k)
