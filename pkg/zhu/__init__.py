"""
Zhu algebra of the W3 vacuum module at c = -2.

Components:
- vertex: modes a_(n) of composite vacuum-module states
- products: Zhu's a * b, a o b and zero modes
- reduction: [v] in C[t, w] by two rewriting strategies and by zero modes
- curve: ZhuElement, CurveIdeal, normal forms and the alpha parametrization
"""

from .vertex import field_mode
from .products import star, circ, zero_mode, conformal_weight
from .reduction import reduce_to_poly, reduce_via_zero_mode, STRATEGIES
from .curve import (
    CURVE,
    ZhuElement,
    CurveIdeal,
    quotient_normal_form,
    curve_value,
    on_curve,
    weight_from_alpha,
    iso_partner,
    weights_coincide,
)
from .images import curve_poly, ideal_failures, product_failures

__all__ = [
    # Fields and products
    "field_mode",
    "star",
    "circ",
    "zero_mode",
    "conformal_weight",
    # Reduction
    "reduce_to_poly",
    "reduce_via_zero_mode",
    "STRATEGIES",
    "curve_poly",
    "ideal_failures",
    "product_failures",
    # Curve
    "CURVE",
    "ZhuElement",
    "CurveIdeal",
    "quotient_normal_form",
    "curve_value",
    "on_curve",
    "weight_from_alpha",
    "iso_partner",
    "weights_coincide",
]
