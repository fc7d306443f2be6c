"""Besant quadrilaterals: cyclic quadrilaterals with an inscribed ellipse
having one focus at the circumcenter EP.

The other focus is then the diagonal intersection IP, and such
quadrilaterals are exactly the cyclic orthodiagonal ones.  This module
decides membership, builds the (unique) Besant ellipse and checks the
surrounding claims numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Literal, Sequence

import numpy as np

from . import config, kernels
from .conic import Conic, foci
from .errors import ConstraintViolation, NonIsoscelesTrapezoid, NotBesant, NotConvex
from .inscribed import check_param, conic_at, inscribed_conic, inscribed_conic_trapezoid
from .quad import (
    CanonicalQuad,
    ConvexQuad,
    Point,
    PointLike,
    canonicalize,
    circle_through,
    circumcenter,
    diagonal_intersection,
    is_cyclic,
    is_orthodiagonal,
    is_parallelogram,
    is_trapezoid,
    midpoint_circumcenter,
    midpoint_quad,
)

# "focus equals EP" is decided at this fraction of the quad diameter
FOCUS_TOL = 1e-6


class Reason(str, Enum):
    OK = "Ok"
    NOT_CYCLIC = "NotCyclic"
    NOT_ORTHODIAGONAL = "NotOrthodiagonal"
    PARALLELOGRAM = "Parallelogram"


@dataclass(frozen=True)
class BesantResult:
    """Outcome of :func:`classify_besant`; every point and the conic are in the input's pose."""

    is_besant: bool
    reason: Reason
    IP: Point
    EP: Point | None = None
    ellipse: Conic | None = None
    r_canonical: float | None = None
    center: Point | None = None
    canonical: CanonicalQuad | None = None


def diameter(cq: CanonicalQuad) -> float:
    return cq.as_quad().diameter


def pair_distance(found: Sequence[Point], target: Sequence[Point]) -> float:
    """Largest point distance under the better of the two pairings."""
    a, b = found
    p, q = target
    return min(max(a.distance(p), b.distance(q)), max(a.distance(q), b.distance(p)))


def besant_ellipse(cq: CanonicalQuad, tol: float | None = None) -> tuple[Conic, float]:
    """The inscribed ellipse with foci EP and IP, with its family parameter."""
    tol = config.resolve(tol)
    if is_parallelogram(cq, tol):
        raise NotBesant("parallelograms are excluded (EP == IP for a cyclic parallelogram)")
    if not is_cyclic(cq, tol):
        raise NotBesant("quadrilateral is not cyclic")
    if not is_orthodiagonal(cq, tol):
        raise NotBesant("quadrilateral is not orthodiagonal")
    if is_trapezoid(cq, tol):
        if abs(cq.s - cq.t) > tol * max(1.0, cq.s, cq.t):
            raise NonIsoscelesTrapezoid(f"cyclic orthodiagonal trapezoid needs s == t (s={cq.s}, t={cq.t})")
        return inscribed_conic_trapezoid(cq.t, cq.t, 0.5), 0.5
    r = cq.v / (cq.s + cq.v)
    return inscribed_conic(cq, r), r


def generate_besant_quad(s: float, t: float, tol: float | None = None) -> CanonicalQuad:
    """The cyclic orthodiagonal ``Q(s,t,v,w)`` determined by ``s`` and ``t``."""
    tol = config.resolve(tol)
    beta = s * s + t * t
    I = t**3 - t**2 + s * s * (t + 1)
    if not (s > 0 and t > 0 and I > 0):
        raise ConstraintViolation(f"need s, t > 0 and I > 0 (s={s}, t={t}, I={I})")
    v = t * I / (s * beta)
    w = 1 - s * v / t
    N = v * t - w * s
    scale = max(1.0, s, t, v, abs(w))
    checks = {
        "t >= w": t >= w,
        "N + s - v > 0": N + s - v > tol * scale,
        "N > 0": N > tol * scale,
        "N != v": abs(N - v) > tol * scale,
        "s != v": abs(s - v) > tol * scale,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise ConstraintViolation(f"(s={s}, t={t}) gives v={v}, w={w} violating {', '.join(failed)}")
    try:
        return CanonicalQuad(s, t, v, w)
    except NotConvex as exc:
        raise ConstraintViolation(str(exc)) from exc


def classify_besant(q: ConvexQuad | Sequence[PointLike], tol: float | None = None) -> BesantResult:
    tol = config.resolve(tol)
    cq = canonicalize(q, tol)
    to = cq.to_original
    ip = to.apply(diagonal_intersection(cq))
    if is_parallelogram(cq, tol):
        return BesantResult(False, Reason.PARALLELOGRAM, ip, canonical=cq)
    if not is_cyclic(cq, tol):
        return BesantResult(False, Reason.NOT_CYCLIC, ip, canonical=cq)
    ep_c = circumcenter(cq, tol)
    ep = to.apply(ep_c)
    if not is_orthodiagonal(cq, tol):
        return BesantResult(False, Reason.NOT_ORTHODIAGONAL, ip, ep, canonical=cq)
    conic, r = besant_ellipse(cq, tol)
    center = to.apply((ep_c + diagonal_intersection(cq)) / 2)
    return BesantResult(True, Reason.OK, ip, ep, conic.transformed(to), r, center, cq)


@dataclass(frozen=True)
class VerificationReport:
    """Each clause of the EP/IP focus theorem for one family member.

    Clauses are ``None`` when no focus sits at EP or IP, so the theorem
    says nothing about that member.
    """

    r: float
    foci: tuple[Point, Point]
    focus_at_EP: bool
    focus_at_IP: bool
    other_focus: bool | None
    orthodiagonal: bool | None
    midpoint_quad_cyclic: bool | None
    center_is_midpoint_circumcenter: bool | None

    @property
    def applicable(self) -> bool:
        return self.focus_at_EP or self.focus_at_IP

    @property
    def passed(self) -> bool:
        clauses = (self.other_focus, self.orthodiagonal, self.midpoint_quad_cyclic,
                   self.center_is_midpoint_circumcenter)
        return self.applicable and all(clauses)


def _midpoints_concyclic(cq: CanonicalQuad, tol: float) -> bool:
    m = midpoint_quad(cq).vertices
    try:
        c, radius = circle_through(m[0], m[1], m[2], tol)
    except ValueError:
        return False
    return abs(c.distance(m[3]) - radius) <= tol * max(1.0, radius)


def verify_theorem_besant(
    cq: CanonicalQuad, r: float, tol: float | None = None, focus_tol: float = FOCUS_TOL
) -> VerificationReport:
    tol = config.resolve(tol)
    r = check_param(r)
    if is_parallelogram(cq, tol):
        raise NotBesant("parallelograms are excluded")
    ep = circumcenter(cq, tol)
    ip = diagonal_intersection(cq)
    f1, f2 = foci(conic_at(cq, r, tol), tol)
    near = focus_tol * diameter(cq)
    if f1.distance(f2) <= near:
        raise NotBesant("the ellipse at this r is a circle")
    at_ep = min(f1.distance(ep), f2.distance(ep)) <= near
    at_ip = min(f1.distance(ip), f2.distance(ip)) <= near
    if not (at_ep or at_ip):
        return VerificationReport(r, (f1, f2), False, False, None, None, None, None)
    ortho = is_orthodiagonal(cq, tol)
    center_ok = False
    if ortho:
        c0 = midpoint_circumcenter(cq, tol)
        center_ok = c0.distance((f1 + f2) / 2) <= near
    return VerificationReport(
        r,
        (f1, f2),
        at_ep,
        at_ip,
        pair_distance((f1, f2), (ep, ip)) <= near,
        ortho,
        _midpoints_concyclic(cq, tol),
        center_ok,
    )


Target = Literal["both", "EP", "IP"]


def focus_residuals(cq: CanonicalQuad, rs: np.ndarray, target: Target = "both") -> np.ndarray:
    """Distance of the family foci at each ``r`` from EP, IP, or the pair {EP, IP}."""
    ip = diagonal_intersection(cq)
    ep = Point((cq.derived.beta - cq.t) / (2 * cq.s), 0.5)
    f = kernels.family_foci(cq.s, cq.t, cq.v, cq.w, rs)
    f1 = f[..., 0] + 1j * f[..., 1]
    f2 = f[..., 2] + 1j * f[..., 3]
    zp, zi = complex(ep), complex(ip)
    if target == "EP":
        return np.minimum(abs(f1 - zp), abs(f2 - zp))
    if target == "IP":
        return np.minimum(abs(f1 - zi), abs(f2 - zi))
    straight = np.maximum(abs(f1 - zp), abs(f2 - zi))
    crossed = np.maximum(abs(f1 - zi), abs(f2 - zp))
    return np.minimum(straight, crossed)


def nearest_focus_distance(cq: CanonicalQuad, point: Point, n: int = 2001) -> float:
    """Smallest distance from ``point`` to a family focus over an ``n``-point r-grid."""
    rs = np.linspace(0.0, 1.0, n + 2)[1:-1]
    f = kernels.family_foci(cq.s, cq.t, cq.v, cq.w, rs)
    z = complex(point)
    return float(min(np.abs(f[:, 0] + 1j * f[:, 1] - z).min(), np.abs(f[:, 2] + 1j * f[:, 3] - z).min()))


_INV_PHI = (math.sqrt(5) - 1) / 2


def _golden_min(f, a: float, b: float, tol: float = 1e-15) -> float:
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return c if fc < fd else d


@dataclass(frozen=True)
class ScanResult:
    """Local minima of the focus residual over r, refined and sorted best first."""

    candidates: tuple[tuple[float, float], ...]
    matches: tuple[float, ...]
    runner_up: float
    threshold: float

    @property
    def best(self) -> tuple[float, float]:
        return self.candidates[0]

    @property
    def separation(self) -> float:
        """How many times larger the runner-up residual is than the best one."""
        best = self.candidates[0][1]
        return math.inf if best == 0 else self.runner_up / best


def besant_scan(
    cq: CanonicalQuad,
    n: int = 10001,
    target: Target = "both",
    focus_tol: float = FOCUS_TOL,
    exclusion: float = 0.01,
) -> ScanResult:
    """Search the r-grid for family members with foci at EP and/or IP.

    ``runner_up`` is the smallest residual among the other refined minima and
    grid points farther than ``exclusion`` from the best r.
    """
    rs = np.linspace(0.0, 1.0, n + 2)[1:-1]
    res = focus_residuals(cq, rs, target)
    inner = np.flatnonzero((res[1:-1] <= res[:-2]) & (res[1:-1] <= res[2:])) + 1
    idx = set(inner.tolist())
    idx.update(i for i in (0, len(rs) - 1) if res[i] == res.min())
    f = lambda r: float(focus_residuals(cq, np.array([r]), target)[0])  # noqa: E731
    refined = []
    for i in sorted(idx):
        lo, hi = rs[max(i - 1, 0)], rs[min(i + 1, len(rs) - 1)]
        r = _golden_min(f, lo, hi)
        refined.append((r, f(r)))
    refined.sort(key=lambda c: c[1])
    best_r = refined[0][0]
    far = np.abs(rs - best_r) > exclusion
    others = [c[1] for c in refined[1:] if abs(c[0] - best_r) > exclusion]
    runner_up = min(others + ([float(res[far].min())] if far.any() else []), default=math.inf)
    threshold = focus_tol * diameter(cq)
    matches = tuple(r for r, v in refined if v <= threshold)
    # neighbouring grid minima around the same root refine to the same r
    unique = []
    for r in sorted(matches):
        if not unique or r - unique[-1] > 2.0 / (n + 1):
            unique.append(r)
    return ScanResult(tuple(refined), tuple(unique), runner_up, threshold)
