"""Exact G2 linear algebra and infinitesimal deformations of nearly parallel
G2-structures on naturally reductive homogeneous spaces."""

from .field import FieldElem, fe, sqrt_rational
from .forms import KForm, Vector, FormValuedCovector, e, wedge, contract, hodge, inner, eps

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "fe",
    "sqrt_rational",
    "KForm",
    "Vector",
    "FormValuedCovector",
    "e",
    "wedge",
    "contract",
    "hodge",
    "inner",
    "eps",
]
