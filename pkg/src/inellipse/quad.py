"""Quadrilaterals, their normal form Q(s,t,v,w) and classification predicates.

Every closed-form computation in the package runs on a :class:`CanonicalQuad`,
the similar copy of a convex quadrilateral with vertices ``(0,0), (0,1),
(s,t), (v,w)``.  :func:`canonicalize` produces it together with the
similarity that maps it back onto the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence, Union

import numpy as np

from . import config
from .errors import CollinearMidpoints, Degenerate, NotConvex, NotCyclic, NotOrthodiagonal


@dataclass(frozen=True, slots=True)
class Point:
    """A plane point, interchangeable with the complex number ``x + iy``."""

    x: float
    y: float

    def __post_init__(self) -> None:
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_complex(cls, z: complex) -> Point:
        return cls(z.real, z.imag)

    @classmethod
    def coerce(cls, p: PointLike) -> Point:
        if isinstance(p, Point):
            return p
        if isinstance(p, complex):
            return cls.from_complex(p)
        x, y = p
        return cls(x, y)

    def __complex__(self) -> complex:
        return complex(self.x, self.y)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


PointLike = Union[Point, complex, Sequence[float]]

ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class Similarity:
    """``p -> translation + scale * Rot(rotation) * X(p)`` where ``X`` negates x
    when ``reflect`` is set (reflection across the y-axis comes first)."""

    scale: float = 1.0
    rotation: float = 0.0
    translation: Point = ORIGIN
    reflect: bool = False

    def __post_init__(self) -> None:
        if not self.scale > 0:
            raise ValueError(f"similarity scale must be positive, got {self.scale}")
        object.__setattr__(self, "translation", Point.coerce(self.translation))

    def apply(self, p: PointLike) -> Point:
        p = Point.coerce(p)
        x = -p.x if self.reflect else p.x
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        return Point(
            self.translation.x + self.scale * (c * x - s * p.y),
            self.translation.y + self.scale * (s * x + c * p.y),
        )

    def inverse_apply(self, p: PointLike) -> Point:
        q = Point.coerce(p) - self.translation
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        x = (c * q.x + s * q.y) / self.scale
        y = (-s * q.x + c * q.y) / self.scale
        return Point(-x if self.reflect else x, y)

    def inverse(self) -> Similarity:
        rotation = self.rotation if self.reflect else -self.rotation
        partial = Similarity(1.0 / self.scale, rotation, ORIGIN, self.reflect)
        return Similarity(1.0 / self.scale, rotation, -partial.apply(self.translation), self.reflect)

    def compose(self, inner: Similarity) -> Similarity:
        """The similarity ``self(inner(p))``."""
        rotation = self.rotation + (-inner.rotation if self.reflect else inner.rotation)
        return Similarity(
            self.scale * inner.scale,
            rotation,
            self.apply(inner.translation),
            self.reflect != inner.reflect,
        )

    def matrix(self) -> np.ndarray:
        """Homogeneous 3x3 matrix acting on column vectors ``(x, y, 1)``."""
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        sign = -1.0 if self.reflect else 1.0
        k = self.scale
        return np.array(
            [
                [k * c * sign, -k * s, self.translation.x],
                [k * s * sign, k * c, self.translation.y],
                [0.0, 0.0, 1.0],
            ]
        )


IDENTITY = Similarity()


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a - o).cross(b - o)


@dataclass(frozen=True)
class ConvexQuad:
    """Four vertices of a strictly convex quadrilateral, in boundary order.

    Either orientation is accepted; :meth:`clockwise` returns the clockwise
    relabelling that keeps the first vertex.
    """

    vertices: tuple[Point, Point, Point, Point]
    tol: float | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        pts = tuple(Point.coerce(p) for p in self.vertices)
        if len(pts) != 4:
            raise NotConvex(f"a quadrilateral needs 4 vertices, got {len(pts)}")
        object.__setattr__(self, "vertices", pts)
        tol = config.resolve(self.tol)
        scale = max(p.distance(q) for p, q in combinations(pts, 2))
        if scale == 0 or any(p.distance(q) <= tol * scale for p, q in combinations(pts, 2)):
            raise NotConvex("repeated vertices")
        signs = set()
        for i in range(4):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % 4]
            turn = (b - a).cross(c - b)
            if abs(turn) <= tol * (b - a).norm() * (c - b).norm():
                raise NotConvex(f"vertex {i} is collinear with its neighbours")
            signs.add(turn > 0)
        if len(signs) != 1:
            raise NotConvex("vertices do not form a strictly convex quadrilateral")

    @property
    def orientation(self) -> int:
        """+1 for counter-clockwise vertex order, -1 for clockwise."""
        a, b, c = self.vertices[:3]
        return 1 if _cross(a, b, c) > 0 else -1

    def clockwise(self) -> ConvexQuad:
        if self.orientation < 0:
            return self
        a, b, c, d = self.vertices
        return ConvexQuad((a, d, c, b), self.tol)

    def sides(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % 4]) for i in range(4)]

    @property
    def diameter(self) -> float:
        return max(p.distance(q) for p, q in combinations(self.vertices, 2))

    def transformed(self, sim: Similarity) -> ConvexQuad:
        return ConvexQuad(tuple(sim.apply(p) for p in self.vertices), self.tol)


@dataclass(frozen=True)
class DerivedQuantities:
    N: float
    beta: float
    I: float
    H: float
    L: float
    CYC: float


@dataclass(frozen=True)
class CanonicalQuad:
    """The quadrilateral with vertices ``(0,0), (0,1), (s,t), (v,w)``.

    ``to_original`` carries these vertices back onto the quadrilateral the
    instance was derived from (identity when built directly).
    """

    s: float
    t: float
    v: float
    w: float
    to_original: Similarity = IDENTITY

    def __post_init__(self) -> None:
        for name in "stvw":
            object.__setattr__(self, name, float(getattr(self, name)))
        s, t, v, w = self.s, self.t, self.v, self.w
        if not (s > 0 and t > 0 and v > 0):
            raise NotConvex(f"canonical form needs s, t, v > 0 (got s={s}, t={t}, v={v})")
        if t < w - config.default_tolerance() * max(1.0, abs(t), abs(w)):
            raise NotConvex(f"canonical form needs t >= w (got t={t}, w={w})")
        # raises NotConvex on failure
        ConvexQuad(self.vertices)

    @property
    def vertices(self) -> tuple[Point, Point, Point, Point]:
        return (Point(0.0, 0.0), Point(0.0, 1.0), Point(self.s, self.t), Point(self.v, self.w))

    def original_vertices(self) -> tuple[Point, ...]:
        return tuple(self.to_original.apply(p) for p in self.vertices)

    def as_quad(self) -> ConvexQuad:
        return ConvexQuad(self.vertices)

    @property
    def N(self) -> float:
        return self.v * self.t - self.w * self.s

    @property
    def derived(self) -> DerivedQuantities:
        s, t, v, w = self.s, self.t, self.v, self.w
        N = self.N
        beta = s * s + t * t
        I = t**3 - t**2 + s * s * (t + 1)
        return DerivedQuantities(
            N=N,
            beta=beta,
            I=I,
            H=s * v * beta - t * I,
            L=(v - s) * beta + 2 * s * t,
            CYC=beta * v - s * (v * v + w * w) - N,
        )

    def with_similarity(self, sim: Similarity) -> CanonicalQuad:
        return CanonicalQuad(self.s, self.t, self.v, self.w, sim)


def _candidate(a1: Point, a2: Point, a3: Point, a4: Point) -> tuple[tuple[float, ...], Similarity]:
    d = a2 - a1
    u = d.norm()
    alpha = math.atan2(d.y, d.x)
    rot = math.pi / 2 - alpha
    c, s = math.cos(rot), math.sin(rot)

    def fwd(p: Point) -> Point:
        q = p - a1
        return Point((c * q.x - s * q.y) / u, (s * q.x + c * q.y) / u)

    p3, p4 = fwd(a3), fwd(a4)
    reflect = p3.x < 0
    if reflect:
        p3, p4 = Point(-p3.x, p3.y), Point(-p4.x, p4.y)
    sim = Similarity(scale=u, rotation=alpha - math.pi / 2, translation=a1, reflect=reflect)
    return (p3.x, p3.y, p4.x, p4.y), sim


def canonicalize(q: ConvexQuad | Sequence[PointLike], tol: float | None = None) -> CanonicalQuad:
    """Similarity-normalize ``q`` to ``Q(s,t,v,w)``.

    Starting vertices are tried in input order, walking the boundary first in
    the given direction and then in reverse; the first labelling with
    ``t, v > 0`` and ``t >= w`` wins.  Trapezoids are labelled so that the first side is one
    of the parallel sides, which makes ``v == s``.
    """
    if not isinstance(q, ConvexQuad):
        q = ConvexQuad(tuple(q), tol)
    tol = config.resolve(tol)
    pts = q.vertices
    candidates = []
    for k in range(4):
        for step in (1, -1):
            labelled = [pts[(k + step * j) % 4] for j in range(4)]
            (s, t, v, w), sim = _candidate(*labelled)
            if t > 0 and v > 0 and t >= w - tol * max(1.0, abs(t), abs(w)):
                candidates.append((s, t, v, w, sim))
    if not candidates:
        raise Degenerate("no vertex labelling satisfies t, v > 0 and t >= w")

    def same(a: float, b: float) -> bool:
        return abs(a - b) <= tol * max(1.0, abs(a), abs(b))

    if _is_trapezoid_vertices(pts, tol):
        for s, t, v, w, sim in candidates:
            if same(s, v):
                return CanonicalQuad(s, t, s, w, sim)
    s, t, v, w, sim = candidates[0]
    return CanonicalQuad(s, t, v, w, sim)


def _parallel(a: Point, b: Point, tol: float) -> bool:
    return abs(a.cross(b)) <= tol * a.norm() * b.norm()


def _is_trapezoid_vertices(pts: Sequence[Point], tol: float) -> bool:
    a, b, c, d = pts
    return _parallel(b - a, d - c, tol) or _parallel(c - b, a - d, tol)


def _vertices(q: ConvexQuad | CanonicalQuad) -> tuple[Point, ...]:
    return q.vertices


def is_cyclic(cq: CanonicalQuad, tol: float | None = None) -> bool:
    tol = config.resolve(tol)
    s, v, w = cq.s, cq.v, cq.w
    d = cq.derived
    scale = max(1.0, abs(d.beta * v), abs(s * (v * v + w * w)), abs(d.N))
    return abs(d.CYC) <= tol * scale


def is_orthodiagonal(cq: CanonicalQuad, tol: float | None = None) -> bool:
    tol = config.resolve(tol)
    target = 1.0 - cq.s * cq.v / cq.t
    return abs(cq.w - target) <= tol * max(1.0, abs(cq.w), abs(cq.s * cq.v / cq.t))


def is_trapezoid(q: ConvexQuad | CanonicalQuad, tol: float | None = None) -> bool:
    return _is_trapezoid_vertices(_vertices(q), config.resolve(tol))


def is_parallelogram(q: ConvexQuad | CanonicalQuad, tol: float | None = None) -> bool:
    tol = config.resolve(tol)
    a, b, c, d = _vertices(q)
    return _parallel(b - a, d - c, tol) and _parallel(c - b, a - d, tol)


def diagonal_intersection(cq: CanonicalQuad) -> Point:
    """IP, in canonical coordinates."""
    k = cq.v / (cq.N + cq.s)
    return Point(k * cq.s, k * cq.t)


def circumcenter(cq: CanonicalQuad, tol: float | None = None) -> Point:
    """EP, in canonical coordinates."""
    if not is_cyclic(cq, tol):
        raise NotCyclic(f"CYC = {cq.derived.CYC:.3g} is not zero")
    return Point((cq.derived.beta - cq.t) / (2 * cq.s), 0.5)


def midpoint_quad(q: ConvexQuad | CanonicalQuad) -> ConvexQuad:
    v = _vertices(q)
    return ConvexQuad(tuple((v[i] + v[(i + 1) % 4]) / 2 for i in range(4)))


def circle_through(a: Point, b: Point, c: Point, tol: float | None = None) -> tuple[Point, float]:
    """Center and radius of the circle through three points."""
    tol = config.resolve(tol)
    ab, ac = b - a, c - a
    det = 2 * ab.cross(ac)
    if abs(det) <= tol * ab.norm() * ac.norm():
        raise CollinearMidpoints("the three points are collinear")
    bb, cc = ab.dot(ab), ac.dot(ac)
    center = a + Point(ac.y * bb - ab.y * cc, ab.x * cc - ac.x * bb) / det
    return center, center.distance(a)


def midpoint_circumcenter(cq: CanonicalQuad, tol: float | None = None) -> Point:
    """Center of the circle through the side midpoints of an orthodiagonal quad."""
    if not is_orthodiagonal(cq, tol):
        raise NotOrthodiagonal("side midpoints are concyclic only for orthodiagonal quads")
    m = midpoint_quad(cq).vertices
    center, _ = circle_through(m[0], m[1], m[2], tol)
    return center
