"""
Exact arithmetic kernel.

Components:
- rational: Fraction parsing, coercion and printing
- poly: polynomials over QQ in (t, w, alpha)
- matrix: rational matrices, Bareiss elimination, kernels
- vector: sparse linear combinations with polynomial coefficients
- combinatorics: partitions and generalized binomials
"""

from .rational import Rational, parse_rational, as_rational, format_rational
from .poly import (
    VARIABLES,
    POLY_RING,
    T,
    W,
    ALPHA,
    Poly,
    MissingVariableError,
    as_poly,
    to_rational,
    poly_add,
    poly_mul,
    poly_eval,
    poly_substitute,
    poly_constant_value,
    format_poly,
    parse_poly,
)
from .matrix import RatMatrix, kernel_basis
from .vector import SparseVector
from .combinatorics import partitions, strict_partitions, binomial

__all__ = [
    # Rationals
    "Rational",
    "parse_rational",
    "as_rational",
    "format_rational",
    # Polynomials
    "VARIABLES",
    "POLY_RING",
    "T",
    "W",
    "ALPHA",
    "Poly",
    "MissingVariableError",
    "as_poly",
    "to_rational",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "poly_substitute",
    "poly_constant_value",
    "format_poly",
    "parse_poly",
    # Linear algebra
    "RatMatrix",
    "kernel_basis",
    "SparseVector",
    # Combinatorics
    "partitions",
    "strict_partitions",
    "binomial",
]
