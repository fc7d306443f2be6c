"""The one-parameter family of ellipses inscribed in ``Q(s,t,v,w)``.

Each ``r`` in the open interval (0, 1) selects one member.  Coefficients are
returned unnormalized, exactly as the closed forms produce them.
"""

from __future__ import annotations

from . import config, kernels
from .conic import Conic
from .errors import InvalidTrapezoid, ParamOutOfRange, TrapezoidInput
from .quad import CanonicalQuad, Point, is_cyclic, is_trapezoid


def check_param(r: float) -> float:
    r = float(r)
    if not (config.PARAM_MARGIN <= r <= 1.0 - config.PARAM_MARGIN):
        raise ParamOutOfRange(f"r must lie in (0, 1), got {r}")
    return r


def tau(cq: CanonicalQuad, r: float) -> float:
    return (cq.s - cq.v) * r + cq.v


def family_coefficients(s: float, t: float, v: float, w: float, r: float) -> tuple[float, ...]:
    """``(A, B, C, D, E, F)`` at ``r``; also valid for ``v == s``."""
    N = v * t - w * s
    A = ((w - 1) ** 2 * s * s - 2 * v * (w * t + t - 2 * w) * s + t * t * v * v) * r * r \
        + 2 * v * (s * t - 2 * w * s - t * N) * r + t * t * v * v
    B = -2 * v * s * (2 * (v - s) * r * r + (s - 2 * v - N) * r + v * t)
    C = s * s * v * v
    D = 2 * s * v * r * ((N - s) * r - N + s * w)
    E = -2 * s * s * v * v * r
    F = s * s * v * v * r * r
    return A, B, C, D, E, F


def _has_v_eq_s_form(cq: CanonicalQuad, tol: float) -> bool:
    return abs(cq.v - cq.s) <= tol * max(1.0, cq.s, cq.v)


def _require_family_form(cq: CanonicalQuad, tol: float | None = None) -> None:
    """Trapezoids must be labelled with S1 parallel to S3 (``v == s``)."""
    tol = config.resolve(tol)
    if is_trapezoid(cq, tol) and not _has_v_eq_s_form(cq, tol):
        raise TrapezoidInput("trapezoid with S2 || S4; relabel with canonicalize() so that v == s")


def inscribed_conic(cq: CanonicalQuad, r: float) -> Conic:
    """Member ``r`` of the family for a quadrilateral that is not a trapezoid."""
    r = check_param(r)
    if is_trapezoid(cq):
        raise TrapezoidInput("use inscribed_conic_trapezoid (or conic_at) for trapezoids")
    return Conic(*family_coefficients(cq.s, cq.t, cq.v, cq.w, r))


def inscribed_center(cq: CanonicalQuad, r: float) -> Point:
    r = check_param(r)
    _require_family_form(cq)
    ta = tau(cq, r)
    return Point(cq.s * cq.v / (2 * ta), ((cq.s - cq.N) * r + cq.v * cq.t) / (2 * ta))


def check_cyclic_trapezoid(s: float, t: float) -> None:
    if not s > 0:
        raise InvalidTrapezoid(f"s must be positive, got {s}")
    if not t > 0.5:
        raise InvalidTrapezoid(f"a cyclic trapezoid Q(s,t,s,1-t) needs t > 1/2, got {t}")
    if abs(t - 1.0) <= config.default_tolerance():
        raise InvalidTrapezoid("t == 1 gives a rectangle")


def inscribed_conic_trapezoid(s: float, t: float, r: float) -> Conic:
    """Member ``r`` of the family inscribed in the cyclic trapezoid ``Q(s,t,s,1-t)``."""
    check_cyclic_trapezoid(s, t)
    r = check_param(r)
    u = (t - 1) ** 2
    return Conic(
        4 * u * r * r - 4 * u * r + t * t,
        2 * s * t * (2 * r - 1),
        s * s,
        2 * r * s * (2 * (t - 1) * r - 3 * t + 2),
        -2 * s * s * r,
        s * s * r * r,
    )


def conic_at(cq: CanonicalQuad, r: float, tol: float | None = None) -> Conic:
    """Family member for any canonical quad, trapezoids included.

    Cyclic trapezoids use their dedicated closed form; other ``v == s``
    trapezoids use the general coefficients, which remain valid there.
    """
    tol = config.resolve(tol)
    r = check_param(r)
    if not is_trapezoid(cq, tol):
        return inscribed_conic(cq, r)
    _require_family_form(cq, tol)
    if is_cyclic(cq, tol) and abs(cq.t - 1.0) > tol and cq.t > 0.5:
        return inscribed_conic_trapezoid(cq.s, cq.t, r)
    return Conic(*family_coefficients(cq.s, cq.t, cq.s, cq.w, r))


def area_at(cq: CanonicalQuad, r: float) -> float:
    r = check_param(r)
    _require_family_form(cq)
    return float(kernels.family_area(cq.s, cq.t, cq.v, cq.w, [r])[0])


def max_area_param(cq: CanonicalQuad, tol: float = 1e-12) -> tuple[float, float]:
    """``(r*, area)`` of the largest inscribed ellipse, in canonical units."""
    _require_family_form(cq)
    r = kernels.max_area_r(cq.s, cq.t, cq.v, cq.w, tol, config.PARAM_MARGIN)
    return r, area_at(cq, r)
