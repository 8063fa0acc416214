"""Sparse multivariate polynomials, grammar and serializer."""

from .parse import parse_poly, serialize
from .ring import MultiPoly, PolyRing, jacobian, poly_ring

__all__ = ["MultiPoly", "PolyRing", "jacobian", "parse_poly", "poly_ring", "serialize"]
