"""
The Zhu algebra image C[t, w] / <f>, f = w^2 - 1/9 t^2 (8t + 1), and its
parametrization by the free-field weight alpha.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from exact.poly import ALPHA, POLY_RING, Poly, Scalar, T, W, as_poly, format_poly, poly_eval
from exact.rational import Rational, as_rational

# w^2 is rewritten to this
W_SQUARED = as_poly(Fraction(1, 9)) * T ** 2 * (8 * T + 1)
CURVE = W ** 2 - W_SQUARED


@dataclass(frozen=True)
class ZhuElement:
    """A class in A(V), represented by a polynomial in t, w."""

    value: Poly

    def __post_init__(self):
        object.__setattr__(self, "value", as_poly(self.value))

    def normal_form(self) -> "ZhuElement":
        return quotient_normal_form(self)

    def __add__(self, other: "ZhuElement") -> "ZhuElement":
        return ZhuElement(self.value + other.value)

    def __mul__(self, other: "ZhuElement") -> "ZhuElement":
        return ZhuElement(self.value * other.value)

    def __str__(self) -> str:
        return format_poly(self.value)


@dataclass(frozen=True)
class CurveIdeal:
    """The principal ideal <f>; f is monic of degree 2 in w."""

    generator: Poly = field(default_factory=lambda: CURVE)

    def contains(self, p: Scalar) -> bool:
        return not quotient_normal_form(ZhuElement(as_poly(p))).value

    def __str__(self) -> str:
        return format_poly(self.generator)


def quotient_normal_form(element: ZhuElement | Scalar) -> ZhuElement:
    """Replace w^2 by 1/9 t^2 (8t + 1) until the w-degree is at most 1."""
    p = element.value if isinstance(element, ZhuElement) else as_poly(element)
    result = POLY_RING.zero
    for (t_exp, w_exp, a_exp), coefficient in p.terms():
        term = POLY_RING.ground_new(coefficient) * T ** t_exp * W ** (w_exp % 2)
        if a_exp:
            term *= ALPHA ** a_exp
        result += term * W_SQUARED ** (w_exp // 2)
    return ZhuElement(result)


def curve_value(t: Scalar, w: Scalar) -> Rational:
    return poly_eval(CURVE, {"t": as_rational(t), "w": as_rational(w)})


def on_curve(t: Scalar, w: Scalar) -> bool:
    return curve_value(t, w) == 0


def weight_from_alpha(alpha: Scalar) -> tuple[Poly, Poly]:
    """(t, w) = (1/2 a(a-1), 1/6 a(a-1)(2a-1)) for rational or symbolic a."""
    a = as_poly(alpha)
    t = a * (a - 1) * as_poly(Fraction(1, 2))
    w = a * (a - 1) * (2 * a - 1) * as_poly(Fraction(1, 6))
    return t, w


def iso_partner(alpha: Scalar) -> Rational:
    """1 - alpha: the other parameter with the same L_0 weight."""
    return 1 - as_rational(alpha)


def weights_coincide(alpha: Scalar, other: Scalar) -> bool:
    """True iff both parameters give the same (t, w)."""
    return weight_from_alpha(as_rational(alpha)) == weight_from_alpha(as_rational(other))
