"""
The quadratic Virasoro term Lambda_m and the action of operator expressions.

    Lambda_m = sum_{n<=-2} L_n L_{m-n} + sum_{n>=-1} L_{m-n} L_n - 3/10 (m+2)(m+3) L_m

On a vector of level N only finitely many terms survive, so the action is
written against any `act(mode, vector)` callable. The module engine and the
free-field realizations share it.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, TypeVar

from exact.poly import as_poly
from exact.vector import SparseVector

from .commutator import ModeExpr
from .modes import ModeSymbol

V = TypeVar("V", bound=SparseVector)
Act = Callable[[ModeSymbol, V], V]


@lru_cache(maxsize=None)
def lambda_terms(m: int, level: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """L-mode words (applied right to left) and coefficients making up Lambda_m at a level."""
    terms: list[tuple[tuple[int, ...], Fraction]] = []
    for n in range(m - level, -1):
        terms.append(((n, m - n), Fraction(1)))
    for n in range(-1, level + 1):
        terms.append(((m - n, n), Fraction(1)))
    correction = -Fraction(3, 10) * (m + 2) * (m + 3)
    if correction:
        terms.append(((m,), correction))
    return tuple(terms)


def _default_act(mode: ModeSymbol, vector):
    return vector.module.apply_mode(mode, vector)


def lambda_apply(m: int, vector: V, act: Act | None = None) -> V:
    """Lambda_m applied to a (possibly inhomogeneous) vector."""
    act = act or _default_act
    result = vector.zero()
    for level, part in vector.components().items():
        for word, coefficient in lambda_terms(m, level):
            image = part
            for index in reversed(word):
                image = act(ModeSymbol("L", index), image)
                if image.is_zero():
                    break
            if not image.is_zero():
                result = result + image.scale(as_poly(coefficient))
    return result


def apply_expr(expr: ModeExpr, vector: V, act: Act | None = None) -> V:
    """Apply a commutator expression (modes, Lambda terms, central scalar)."""
    act = act or _default_act
    result = vector.scale(as_poly(expr.central)) if expr.central else vector.zero()
    for mode, coefficient in expr.modes:
        result = result + act(mode, vector).scale(as_poly(coefficient))
    for m, coefficient in expr.lambdas:
        result = result + lambda_apply(m, vector, act).scale(as_poly(coefficient))
    return result
