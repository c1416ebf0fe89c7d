"""Exact invariants of map germs from the plane to 3-space, curve
resolution, and plumbing-graph surgery for the image boundary."""

from ._impl import BACKEND
from .qi import GaussRational
from .poly import (
    MultiPoly,
    PolyMatrix,
    PolyParseError,
    divided_difference,
    equal_up_to_unit,
    exact_div,
    is_squarefree,
    poly_gcd,
    poly_parse,
    unit_normalize,
    univariate_resultant,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "GaussRational",
    "MultiPoly",
    "PolyMatrix",
    "PolyParseError",
    "divided_difference",
    "equal_up_to_unit",
    "exact_div",
    "is_squarefree",
    "poly_gcd",
    "poly_parse",
    "unit_normalize",
    "univariate_resultant",
    "__version__",
]
