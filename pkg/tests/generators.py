"""Random test quadrilaterals.

All generators take a ``numpy.random.Generator`` and reject samples that sit
too close to a degenerate configuration for the tolerances used in tests.
"""

from __future__ import annotations

import math

import numpy as np

from inellipse.errors import ConstraintViolation, InellipseError
from inellipse.quad import CanonicalQuad, ConvexQuad, Point, Similarity, canonicalize, is_trapezoid
from inellipse.besant import generate_besant_quad

EX_VERTICES = ((0.0, 0.0), (0.0, 1.0), (2.0, 4.0), (34 / 5, -12 / 5))
TRAPEZOID_VERTICES = ((0.0, 0.0), (0.0, 1.0), (2.0, 2.0), (2.0, -1.0))


def min_turn_sine(pts) -> float:
    """Smallest |sin| of an exterior angle; small means nearly collinear."""
    pts = [Point.coerce(p) for p in pts]
    out = math.inf
    for i in range(4):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % 4]
        u, v = b - a, c - b
        out = min(out, abs(u.cross(v)) / (u.norm() * v.norm()))
    return out


def _well_shaped(cq: CanonicalQuad, margin: float) -> bool:
    verts = cq.vertices
    if min_turn_sine(verts) < margin:
        return False
    # keep side-length ratios moderate
    sides = [verts[i].distance(verts[(i + 1) % 4]) for i in range(4)]
    return max(sides) / min(sides) < 30


def random_similarity(rng: np.random.Generator) -> Similarity:
    return Similarity(
        scale=float(math.exp(rng.uniform(-3, 3))),
        rotation=float(rng.uniform(-math.pi, math.pi)),
        translation=Point(*rng.uniform(-100, 100, 2)),
        reflect=bool(rng.integers(2)),
    )


def random_canonical(rng: np.random.Generator, margin: float = 0.05, away_from_trapezoid: float = 0.05) -> CanonicalQuad:
    """A generic convex ``Q(s,t,v,w)``."""
    while True:
        s, t, v = rng.uniform(0.2, 4.0, 3)
        w = rng.uniform(-4.0, t)
        try:
            cq = CanonicalQuad(s, t, v, w)
        except InellipseError:
            continue
        if abs(s - v) < away_from_trapezoid or is_trapezoid(cq, away_from_trapezoid):
            continue
        if _well_shaped(cq, margin):
            return cq


def random_besant(rng: np.random.Generator, margin: float = 0.05) -> CanonicalQuad:
    """A cyclic orthodiagonal quad from the ``(s, t)`` generator."""
    while True:
        s, t = rng.uniform(0.2, 4.0, 2)
        try:
            cq = generate_besant_quad(s, t)
        except (ConstraintViolation, InellipseError):
            continue
        if _well_shaped(cq, margin) and abs(cq.s - cq.v) > margin:
            return cq


def _circle_quad(rng: np.random.Generator) -> list[Point]:
    angles = np.sort(rng.uniform(0, 2 * math.pi, 4))[::-1]
    c = Point(*rng.uniform(-5, 5, 2))
    rad = float(math.exp(rng.uniform(-1, 2)))
    return [c + Point(math.cos(a), math.sin(a)) * rad for a in angles]


def diagonal_cosine(pts) -> float:
    a, b, c, d = (Point.coerce(p) for p in pts)
    u, v = c - a, d - b
    return abs(u.dot(v)) / (u.norm() * v.norm())


def random_cyclic(rng: np.random.Generator, margin: float = 0.05) -> ConvexQuad:
    """Four clockwise points on a random circle, not a parallelogram."""
    while True:
        pts = _circle_quad(rng)
        if min_turn_sine(pts) < margin:
            continue
        try:
            q = ConvexQuad(tuple(pts))
        except InellipseError:
            continue
        if is_trapezoid(q, 1e-3):
            continue
        return q


def random_cyclic_non_orthodiagonal(rng: np.random.Generator, margin: float = 0.05) -> ConvexQuad:
    while True:
        q = random_cyclic(rng, margin)
        if diagonal_cosine(q.vertices) > margin:
            return q


def random_orthodiagonal(rng: np.random.Generator, margin: float = 0.05) -> ConvexQuad:
    """Diagonals along perpendicular directions through a random point."""
    while True:
        a, b, c, d = np.exp(rng.uniform(-1.5, 1.5, 4))
        phi = rng.uniform(-math.pi, math.pi)
        e = Point(math.cos(phi), math.sin(phi))
        f = Point(-e.y, e.x)
        o = Point(*rng.uniform(-5, 5, 2))
        pts = [o + e * a, o - f * d, o - e * c, o + f * b]  # clockwise
        if min_turn_sine(pts) < margin:
            continue
        try:
            q = ConvexQuad(tuple(pts))
        except InellipseError:
            continue
        return q


def canonical_of(q: ConvexQuad) -> CanonicalQuad:
    return canonicalize(q)
