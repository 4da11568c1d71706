"""Exact rational toolkit for prismatoid width computations.

Builds the explicit small-width prismatoids and the twisted-product family,
verifies their facet structure and widths with exact arithmetic, and iterates
one-point suspensions up to the 20-dimensional dual non-Hirsch polytope.
"""

from .exact import QQ, CirclePoint, rank, rational_circle_point, solve_affine
from .geometry import Facet, FacetList, Hyperplane, VPolytope, affine_dimension, interior_point
from .hull import facet_enumeration, polar_dual, validate_facets

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "CirclePoint",
    "Facet",
    "FacetList",
    "Hyperplane",
    "VPolytope",
    "affine_dimension",
    "facet_enumeration",
    "interior_point",
    "polar_dual",
    "rank",
    "rational_circle_point",
    "solve_affine",
    "validate_facets",
    "__version__",
]
