"""Ellipses inscribed in convex quadrilaterals.

Foci by two independent routes (conic coefficients and Marden's theorem),
the maximal-area member of the family, and Besant quadrilaterals: cyclic
quadrilaterals with an inscribed ellipse focused at the circumcenter.
"""

from .besant import BesantResult, Reason, besant_ellipse, classify_besant, generate_besant_quad
from .conic import Conic, foci, is_real_ellipse, line_tangency, semi_axes_and_area
from .inscribed import conic_at, inscribed_center, inscribed_conic, inscribed_conic_trapezoid, max_area_param
from .kernels import BACKEND
from .marden import foci_quadratic, foci_quadratic_trapezoid, marden_foci, t_weights
from .quad import CanonicalQuad, ConvexQuad, Point, Similarity, canonicalize

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BesantResult",
    "CanonicalQuad",
    "Conic",
    "ConvexQuad",
    "Point",
    "Reason",
    "Similarity",
    "besant_ellipse",
    "canonicalize",
    "classify_besant",
    "conic_at",
    "foci",
    "foci_quadratic",
    "foci_quadratic_trapezoid",
    "generate_besant_quad",
    "inscribed_center",
    "inscribed_conic",
    "inscribed_conic_trapezoid",
    "is_real_ellipse",
    "line_tangency",
    "marden_foci",
    "max_area_param",
    "semi_axes_and_area",
    "t_weights",
]
