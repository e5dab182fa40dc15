"""Exact arithmetic: quadratic numbers, polynomials, rational functions, small matrices."""

from .matrix import IntMatrix2, charpoly, eigen2, matrix_order
from .poly import BiPoly, UniPoly, resultant
from .quad import I, J, ONE, SQRT2, ZERO, Q, QuadNumber
from .ratfunc import RatFunc
from .roots import roots_in_tower

__all__ = [
    "BiPoly", "I", "IntMatrix2", "J", "ONE", "Q", "QuadNumber", "RatFunc", "SQRT2", "UniPoly",
    "ZERO", "charpoly", "eigen2", "matrix_order", "resultant", "roots_in_tower",
]
