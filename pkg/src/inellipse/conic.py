"""General conics ``Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0`` and ellipse geometry.

Coefficients are scale-equivalent, so every quantity here is invariant
under ``(A..F) -> (lam*A..lam*F)``.  Instances are stored with ``A >= 0``
(``C > 0`` when ``A == 0``) so that ``sign(B)`` is meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import config
from .errors import DegenerateConic, DegenerateLine, NotEllipse
from .quad import Point, PointLike, Similarity


@dataclass(frozen=True)
class Conic:
    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self) -> None:
        coeffs = [float(c) for c in self.coefficients]
        if not all(math.isfinite(c) for c in coeffs):
            raise DegenerateConic("non-finite coefficient")
        if coeffs[0] == coeffs[1] == coeffs[2] == 0:
            raise DegenerateConic("A, B and C are all zero")
        if coeffs[0] < 0 or (coeffs[0] == 0 and coeffs[2] < 0):
            coeffs = [-c for c in coeffs]
        for name, c in zip("ABCDEF", coeffs):
            object.__setattr__(self, name, c + 0.0)

    @property
    def coefficients(self) -> tuple[float, float, float, float, float, float]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> Conic:
        return cls(m[0, 0], 2 * m[0, 1], m[1, 1], 2 * m[0, 2], 2 * m[1, 2], m[2, 2])

    def matrix(self) -> np.ndarray:
        A, B, C, D, E, F = self.coefficients
        return np.array([[A, B / 2, D / 2], [B / 2, C, E / 2], [D / 2, E / 2, F]])

    def __call__(self, x: float, y: float) -> float:
        A, B, C, D, E, F = self.coefficients
        return A * x * x + B * x * y + C * y * y + D * x + E * y + F

    def normalized(self) -> Conic:
        """Scaled so the largest-magnitude coefficient is +-1 (A stays >= 0)."""
        m = max(abs(c) for c in self.coefficients)
        return Conic(*(c / m for c in self.coefficients))

    def proportional_to(self, other: Conic, tol: float | None = None) -> bool:
        return coefficient_deviation(self, other) <= config.resolve(tol)

    def transformed(self, sim: Similarity) -> Conic:
        """The image of this conic under ``sim``."""
        inv = sim.inverse().matrix()
        return Conic.from_matrix(inv.T @ self.matrix() @ inv)

    @property
    def Delta(self) -> float:
        return 4 * self.A * self.C - self.B ** 2

    @property
    def delta(self) -> float:
        A, B, C, D, E, F = self.coefficients
        return C * D * D + A * E * E - B * D * E - F * self.Delta


def coefficient_deviation(a: Conic, b: Conic) -> float:
    """Largest coefficient difference after both are normalized to max |coef| = 1."""
    na, nb = a.normalized(), b.normalized()
    return max(abs(x - y) for x, y in zip(na.coefficients, nb.coefficients))


def _quad_scale(c: Conic) -> float:
    return c.A * c.A + c.B * c.B + c.C * c.C


def is_real_ellipse(c: Conic, tol: float | None = None) -> bool:
    """Delta > 0 and delta > 0 (``tol`` is accepted for signature symmetry)."""
    return c.Delta > 0 and c.delta > 0


def center(c: Conic, tol: float | None = None) -> Point:
    """Solution of grad(phi) = 0."""
    Delta = c.Delta
    if abs(Delta) <= config.resolve(tol) * _quad_scale(c):
        raise DegenerateConic("Delta = 4AC - B^2 vanishes; no unique center")
    return Point((c.B * c.E - 2 * c.C * c.D) / Delta, (c.B * c.D - 2 * c.A * c.E) / Delta)


def _require_ellipse(c: Conic, tol: float | None) -> None:
    if not is_real_ellipse(c, tol):
        raise NotEllipse(f"not a real ellipse (Delta={c.Delta:.3g}, delta={c.delta:.3g})")


def focal_terms(c: Conic) -> tuple[float, float, float, float]:
    """``(mu, M, k_A, k_C)`` with the squared focal offsets ``k_A``, ``k_C``."""
    A, B, C = c.A, c.B, c.C
    Delta = c.Delta
    mu = 4 * c.delta / (Delta * Delta)
    M = (A - C) ** 2 + B * B
    root = math.sqrt(M)
    return mu, M, mu / 2 * (C - A + root), mu / 2 * (A - C + root)


def foci(c: Conic, tol: float | None = None) -> tuple[Point, Point]:
    """Foci ``(F1, F2)`` of an ellipse; ``F2`` is the rightmost (uppermost on an x tie).

    A circle returns its center twice.
    """
    tol = config.resolve(tol)
    _require_ellipse(c, tol)
    x0, y0 = center(c, tol)
    _, _, kA, kC = focal_terms(c)
    dx, dy = math.sqrt(max(kA, 0.0)), math.sqrt(max(kC, 0.0))
    sgn = -1.0 if c.B < 0 else 1.0
    f1 = Point(x0 - dx, y0 + sgn * dy)
    f2 = Point(x0 + dx, y0 - sgn * dy)
    # vertical major axis: F2 is the upper focus
    if dx <= tol * max(dx, dy):
        return (f1, f2) if f1.y <= f2.y else (f2, f1)
    return f1, f2


@dataclass(frozen=True)
class EllipseGeometry:
    center: Point
    a: float
    b: float
    rotation: float
    foci: tuple[Point, Point]
    Delta: float
    delta: float

    @property
    def area(self) -> float:
        return math.pi * self.a * self.b


def semi_axes_and_area(c: Conic, tol: float | None = None) -> tuple[float, float, float]:
    _require_ellipse(c, tol)
    Delta, delta = c.Delta, c.delta
    k = delta / Delta  # -phi(center)
    root = math.sqrt((c.A - c.C) ** 2 + c.B ** 2)
    lam_small = (c.A + c.C - root) / 2
    lam_big = (c.A + c.C + root) / 2
    a = math.sqrt(k / lam_small)
    b = math.sqrt(k / lam_big)
    return a, b, 2 * math.pi * delta / Delta ** 1.5


def geometry(c: Conic, tol: float | None = None) -> EllipseGeometry:
    a, b, _ = semi_axes_and_area(c, tol)
    # direction of the major axis (eigenvector of the smaller eigenvalue)
    rotation = 0.5 * math.atan2(-c.B, c.C - c.A)
    if rotation <= -math.pi / 2:
        rotation += math.pi
    elif rotation > math.pi / 2:
        rotation -= math.pi
    return EllipseGeometry(center(c, tol), a, b, rotation, foci(c, tol), c.Delta, c.delta)


def ellipse_from_geometry(center: PointLike, a: float, b: float, rotation: float) -> Conic:
    """Conic of the ellipse with the given center, semi-axes and major-axis angle."""
    x0, y0 = Point.coerce(center)
    co, si = math.cos(rotation), math.sin(rotation)
    ia, ib = 1 / (a * a), 1 / (b * b)
    A = co * co * ia + si * si * ib
    B = 2 * co * si * (ia - ib)
    C = si * si * ia + co * co * ib
    D = -2 * A * x0 - B * y0
    E = -B * x0 - 2 * C * y0
    F = A * x0 * x0 + B * x0 * y0 + C * y0 * y0 - 1
    return Conic(A, B, C, D, E, F)


class Contact(str, Enum):
    SECANT = "secant"
    TANGENT = "tangent"
    DISJOINT = "disjoint"


@dataclass(frozen=True)
class TangencyResult:
    kind: Contact
    point: Point | None = None
    # position of the contact along p1 -> p2 (0 at p1, 1 at p2)
    param: float | None = None
    residual: float = 0.0

    @property
    def on_segment(self) -> bool:
        return self.param is not None and 0.0 <= self.param <= 1.0

    @property
    def interior(self) -> bool:
        return self.param is not None and 0.0 < self.param < 1.0


def line_tangency(c: Conic, p1: PointLike, p2: PointLike, tol: float | None = None) -> TangencyResult:
    """Classify the line through ``p1`` and ``p2`` against the conic.

    ``residual`` is the discriminant of ``phi(p1 + u (p2 - p1))`` relative to
    the size of its terms, so it is scale invariant in both the conic and the
    line parametrization.
    """
    tol = config.resolve(tol)
    p1, p2 = Point.coerce(p1), Point.coerce(p2)
    d = p2 - p1
    if d.norm() == 0:
        raise DegenerateLine("p1 == p2")
    A, B, C, D, E, F = c.coefficients
    qa = A * d.x * d.x + B * d.x * d.y + C * d.y * d.y
    qb = 2 * A * p1.x * d.x + B * (p1.x * d.y + p1.y * d.x) + 2 * C * p1.y * d.y + D * d.x + E * d.y
    qc = c(p1.x, p1.y)
    if qa == 0:
        raise DegenerateLine("line is parallel to an asymptotic direction")
    disc = qb * qb - 4 * qa * qc
    residual = abs(disc) / max(qb * qb, abs(4 * qa * qc), 1e-300)
    u = -qb / (2 * qa)
    if residual <= tol:
        return TangencyResult(Contact.TANGENT, p1 + d * u, u, residual)
    kind = Contact.SECANT if disc > 0 else Contact.DISJOINT
    return TangencyResult(kind, None, None, residual)
