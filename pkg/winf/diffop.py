"""
Differential operators on the circle and the central extension HD.

An element is a finite sum of t^r p_r(D) (D = t d/dt) plus a multiple of C:

    [t^r f(D), t^s g(D)] = t^{r+s} (f(D+s) g(D) - f(D) g(D+r)) + Psi C

    Psi = sum_{-r <= j <= -1} f(j) g(j+r)   if r = -s >= 0
        = -Psi(t^s g, t^r f)                if r = -s < 0
        = 0                                 if r + s != 0

Bases: J^l_k = -t^{l+k} d^l = -t^k D(D-1)...(D-l+1) and L^l_k = -t^k D^l,
both of principal grade k.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from sympy.functions.combinatorial.numbers import stirling
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from exact.poly import ground, to_rational
from exact.rational import as_rational, format_rational

D_RING, D = ring("D", QQ)

BasisKey = tuple[int, int]  # (l, k)


def d_poly(coefficients) -> PolyElement:
    """Polynomial in D from ascending coefficients."""
    result = D_RING.zero
    for degree, coefficient in enumerate(coefficients):
        result += D_RING.ground_new(ground(coefficient)) * D ** degree
    return result


def shift(p: PolyElement, amount: int) -> PolyElement:
    """p(D + amount)."""
    return p.compose(D, D + amount) if amount else p


def evaluate(p: PolyElement, value: int) -> Fraction:
    return to_rational(p(value)) if p else Fraction(0)


def falling_factorial(l: int) -> PolyElement:
    result = D_RING.one
    for i in range(l):
        result *= D - i
    return result


def format_d_poly(p: PolyElement) -> str:
    if not p:
        return "0"
    pieces = []
    for (degree,), coefficient in sorted(p.terms(), reverse=True):
        value = to_rational(coefficient)
        monomial = "" if degree == 0 else ("D" if degree == 1 else f"D^{degree}")
        if not monomial:
            body = format_rational(abs(value))
        elif abs(value) == 1:
            body = monomial
        else:
            body = f"{format_rational(abs(value))}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f"{'-' if value < 0 else '+'} {body}")
    return " ".join(pieces)


@dataclass(frozen=True)
class DiffOp:
    """sum_r t^r p_r(D) + central * C, zero polynomials dropped."""

    terms: tuple[tuple[int, PolyElement], ...] = ()
    central: Fraction = Fraction(0)

    @classmethod
    def build(cls, terms: Mapping[int, PolyElement] | None = None, central=0) -> "DiffOp":
        cleaned = tuple(sorted((r, p) for r, p in (terms or {}).items() if p))
        return cls(cleaned, as_rational(central))

    @classmethod
    def monomial(cls, r: int, p: PolyElement) -> "DiffOp":
        return cls.build({r: p})

    @classmethod
    def central_element(cls, value=1) -> "DiffOp":
        return cls.build({}, value)

    def as_dict(self) -> dict[int, PolyElement]:
        return dict(self.terms)

    def grades(self) -> list[int]:
        return [r for r, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms and not self.central

    def __add__(self, other: "DiffOp") -> "DiffOp":
        merged = self.as_dict()
        for r, p in other.terms:
            merged[r] = merged.get(r, D_RING.zero) + p
        return DiffOp.build(merged, self.central + other.central)

    def __neg__(self) -> "DiffOp":
        return DiffOp(tuple((r, -p) for r, p in self.terms), -self.central)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, factor) -> "DiffOp":
        factor = as_rational(factor)
        coefficient = D_RING.ground_new(ground(factor))
        return DiffOp.build({r: coefficient * p for r, p in self.terms}, self.central * factor)

    def __str__(self) -> str:
        parts = [f"t^{r}*({format_d_poly(p)})" for r, p in self.terms]
        if self.central:
            parts.append(f"{format_rational(self.central)}*C")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "terms": {str(r): format_d_poly(p) for r, p in self.terms},
            "central": format_rational(self.central),
        }


# ============================================================================
# BRACKET AND COCYCLE
# ============================================================================
def _psi(r: int, f: PolyElement, s: int, g: PolyElement) -> Fraction:
    if r + s != 0:
        return Fraction(0)
    if r < 0:
        return -_psi(s, g, r, f)
    return sum((evaluate(f, j) * evaluate(g, j + r) for j in range(-r, 0)), Fraction(0))


def cocycle(x: DiffOp, y: DiffOp) -> Fraction:
    """Psi(x, y), bilinear; central parts of the arguments do not contribute."""
    total = Fraction(0)
    for r, f in x.terms:
        for s, g in y.terms:
            total += _psi(r, f, s, g)
    return total


def bracket(x: DiffOp, y: DiffOp) -> DiffOp:
    """[x, y] in HD including the central term."""
    merged: dict[int, PolyElement] = {}
    for r, f in x.terms:
        for s, g in y.terms:
            part = shift(f, s) * g - f * shift(g, r)
            merged[r + s] = merged.get(r + s, D_RING.zero) + part
    return DiffOp.build(merged, cocycle(x, y))


# ============================================================================
# BASES
# ============================================================================
def basis_J(l: int, k: int) -> DiffOp:
    """J^l_k = -t^k D(D-1)...(D-l+1)."""
    if l < 0:
        raise ValueError(f"J^l_k needs l >= 0, got l={l}")
    return DiffOp.monomial(k, -falling_factorial(l))


def basis_L(l: int, k: int) -> DiffOp:
    """L^l_k = -t^k D^l."""
    if l < 0:
        raise ValueError(f"L^l_k needs l >= 0, got l={l}")
    return DiffOp.monomial(k, -(D ** l))


def _coefficients(p: PolyElement) -> dict[int, Fraction]:
    return {degree: to_rational(c) for (degree,), c in p.terms()}


def to_L_basis(x: DiffOp) -> dict[BasisKey, Fraction]:
    """Coefficients of x (central part dropped) on the L^l_k."""
    result = {}
    for k, p in x.terms:
        for l, a in _coefficients(p).items():
            result[(l, k)] = -a
    return result


def to_J_basis(x: DiffOp) -> dict[BasisKey, Fraction]:
    """Coefficients of x on the J^l_k, via D^m = sum_i S(m, i) D(D-1)...(D-i+1)."""
    result: dict[BasisKey, Fraction] = {}
    for k, p in x.terms:
        for m, a in _coefficients(p).items():
            for i in range(m + 1):
                s2 = int(stirling(m, i, kind=2))
                if s2:
                    result[(i, k)] = result.get((i, k), Fraction(0)) - a * s2
    return {key: value for key, value in result.items() if value}


def from_L_basis(coefficients: Mapping[BasisKey, object], central=0) -> DiffOp:
    total = DiffOp.central_element(central)
    for (l, k), value in coefficients.items():
        total = total + basis_L(l, k).scale(value)
    return total


def from_J_basis(coefficients: Mapping[BasisKey, object], central=0) -> DiffOp:
    total = DiffOp.central_element(central)
    for (l, k), value in coefficients.items():
        total = total + basis_J(l, k).scale(value)
    return total


def J_in_L_basis(l: int, k: int) -> dict[BasisKey, Fraction]:
    """J^l_k = sum_m s(l, m) L^m_k with signed Stirling numbers of the first kind."""
    result = {}
    for m in range(l + 1):
        s1 = int(stirling(l, m, kind=1, signed=True))
        if s1:
            result[(m, k)] = Fraction(s1)
    return result


# ============================================================================
# GRADING
# ============================================================================
def graded_components(x: DiffOp) -> dict[int, DiffOp]:
    """Principal-grade pieces; the central part sits in grade 0."""
    parts = {r: DiffOp.monomial(r, p) for r, p in x.terms}
    if x.central:
        parts[0] = parts.get(0, DiffOp()) + DiffOp.central_element(x.central)
    return dict(sorted(parts.items()))


def triangular_parts(x: DiffOp) -> tuple[DiffOp, DiffOp, DiffOp]:
    """(positive, zero, negative) grade projections, C in the zero part."""
    terms = x.as_dict()
    positive = DiffOp.build({r: p for r, p in terms.items() if r > 0})
    zero = DiffOp.build({r: p for r, p in terms.items() if r == 0}, x.central)
    negative = DiffOp.build({r: p for r, p in terms.items() if r < 0})
    return positive, zero, negative


def in_parabolic(x: DiffOp) -> bool:
    """x lies in span{J^l_k : l + k >= 0} (no central part)."""
    if x.central:
        return False
    return all(l + k >= 0 for (l, k) in to_J_basis(x))
