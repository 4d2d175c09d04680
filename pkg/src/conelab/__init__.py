"""Exact-arithmetic toolkit for the cone of positive semi-definite forms.

Computes with the three classical polyhedral structures attached to
quadratic forms on the integer lattice: cones spanned by rank-one forms of
totally unimodular column systems, perfect cones spanned by minimal-vector
outer products, and secondary cones of Delone subdivisions.  All arithmetic
is exact (arbitrary-precision rationals); every headline claim is backed by
an enumerable certificate.
"""

from .exact import IntMatrix, RatMatrix
from .quadforms import QuadForm

__all__ = ["IntMatrix", "RatMatrix", "QuadForm"]
__version__ = "0.1.0"
