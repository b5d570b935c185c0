"""
Multivariate polynomials over QQ in the fixed variables (t, w, alpha).

Backed by sympy's sparse polynomial ring; coefficients are converted to and
from Fraction at the boundary so callers never see ground-domain types.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy import Symbol, SympifyError, sympify
from sympy.polys.rings import PolyElement, ring

from .rational import as_rational, format_rational

VARIABLES = ("t", "w", "alpha")

POLY_RING, T, W, ALPHA = ring(",".join(VARIABLES), QQ, lex)

Poly = PolyElement
Scalar = Union[int, Fraction, str, PolyElement]

GENERATORS = {"t": T, "w": W, "alpha": ALPHA}


class MissingVariableError(ValueError):
    """Raised when an evaluation leaves a variable unassigned."""


def ground(value) -> "QQ.dtype":
    q = as_rational(value)
    return QQ(q.numerator, q.denominator)


def as_poly(value: Scalar) -> Poly:
    """Coerce a scalar or polynomial into the ring."""
    if isinstance(value, PolyElement):
        if value.ring != POLY_RING:
            raise TypeError(f"polynomial from foreign ring {value.ring}")
        return value
    return POLY_RING.ground_new(ground(value))


def to_rational(coefficient) -> Fraction:
    return Fraction(int(coefficient.numerator), int(coefficient.denominator))


def variables_of(p: Poly) -> set[str]:
    present = set()
    for monom, _ in p.terms():
        for name, exponent in zip(VARIABLES, monom):
            if exponent:
                present.add(name)
    return present


def poly_add(a: Scalar, b: Scalar) -> Poly:
    return as_poly(a) + as_poly(b)


def poly_mul(a: Scalar, b: Scalar) -> Poly:
    return as_poly(a) * as_poly(b)


def poly_eval(p: Scalar, assignment: Mapping[str, object]) -> Fraction:
    """Evaluate exactly; every variable present in p must be assigned."""
    p = as_poly(p)
    missing = variables_of(p) - set(assignment)
    if missing:
        raise MissingVariableError(
            f"no value for variable(s) {', '.join(sorted(missing))}"
        )
    values = [as_rational(assignment[name]) if name in assignment else Fraction(0)
              for name in VARIABLES]
    total = Fraction(0)
    for monom, coefficient in p.terms():
        term = to_rational(coefficient)
        for value, exponent in zip(values, monom):
            if exponent:
                term *= value ** exponent
        total += term
    return total


def poly_substitute(p: Scalar, images: Mapping[str, Scalar]) -> Poly:
    """Replace variables by polynomials (unlisted variables stay)."""
    p = as_poly(p)
    targets = [as_poly(images[name]) if name in images else GENERATORS[name]
               for name in VARIABLES]
    result = POLY_RING.zero
    for monom, coefficient in p.terms():
        term = POLY_RING.ground_new(coefficient)
        for target, exponent in zip(targets, monom):
            if exponent:
                term *= target ** exponent
        result += term
    return result


def poly_constant_value(p: Scalar) -> Fraction:
    p = as_poly(p)
    if not p.is_ground:
        raise ValueError(f"polynomial {format_poly(p)} is not constant")
    return to_rational(p.LC)


def _monomial_text(monom: tuple[int, ...]) -> str:
    factors = []
    for name, exponent in zip(VARIABLES, monom):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def _print_key(monom: tuple[int, ...]) -> tuple[int, ...]:
    # alpha dominates, then w, then t
    return tuple(reversed(monom))


def format_poly(p: Scalar) -> str:
    """Canonical text form, e.g. `w^2 - 8/9*t^3 - 1/9*t^2`."""
    p = as_poly(p)
    if not p:
        return "0"
    pieces = []
    for monom, coefficient in sorted(p.terms(), key=lambda item: _print_key(item[0]), reverse=True):
        value = to_rational(coefficient)
        magnitude = abs(value)
        monomial = _monomial_text(monom)
        if not monomial:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_rational(magnitude)}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f"{'-' if value < 0 else '+'} {body}")
    return " ".join(pieces)


def parse_poly(text: str) -> Poly:
    """Read `w^2 - 8/9*t^3` style text; only t, w and alpha may appear."""
    try:
        expr = sympify(text.replace("^", "**"), locals={name: Symbol(name) for name in VARIABLES})
    except (SympifyError, SyntaxError, TypeError) as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc
    unknown = {str(s) for s in expr.free_symbols} - set(VARIABLES)
    if unknown:
        raise ValueError(f"unknown variable(s) {', '.join(sorted(unknown))} in {text!r}")
    try:
        return POLY_RING.from_expr(expr)
    except ValueError as exc:
        raise ValueError(f"{text!r} is not a polynomial over QQ") from exc
