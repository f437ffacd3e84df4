"""Exact linearization coefficients of orthogonal polynomials and their combinatorics."""

from .scalar import G, GaussianRational, Poly, parse_scalar
from .families import FamilySpec, make_family, polynomial, recurrence_coeffs
from .moments import functional, moment
from .combi import BACKEND, BoxedGroundSet

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoxedGroundSet",
    "FamilySpec",
    "G",
    "GaussianRational",
    "Poly",
    "functional",
    "make_family",
    "moment",
    "parse_scalar",
    "polynomial",
    "recurrence_coeffs",
]
