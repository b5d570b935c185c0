"""
Commutators of W3 modes as explicit operator expressions.

    [L_m, L_n]   = (m-n) L_{m+n} + c/12 (m^3-m) d_{m+n,0}
    [L_m, Wt_n]  = (2m-n) Wt_{m+n}
    [Wt_m, Wt_n] = 3/2 [ (m-n)(1/15 (m+n+3)(m+n+2) - 1/6 (m+2)(n+2)) L_{m+n}
                         + beta (m-n) Lambda_{m+n}
                         + c/360 m(m^2-1)(m^2-4) d_{m+n,0} ]
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .modes import AlgebraParams, ModeSymbol


@dataclass(frozen=True)
class ModeExpr:
    """sum a_i X_i + sum b_j Lambda_{m_j} + central * identity."""

    modes: tuple[tuple[ModeSymbol, Fraction], ...] = ()
    lambdas: tuple[tuple[int, Fraction], ...] = ()
    central: Fraction = Fraction(0)

    @classmethod
    def build(cls, modes=(), lambdas=(), central=0) -> "ModeExpr":
        mode_terms: dict[ModeSymbol, Fraction] = {}
        for symbol, coefficient in modes:
            mode_terms[symbol] = mode_terms.get(symbol, Fraction(0)) + Fraction(coefficient)
        lambda_terms: dict[int, Fraction] = {}
        for m, coefficient in lambdas:
            lambda_terms[m] = lambda_terms.get(m, Fraction(0)) + Fraction(coefficient)
        return cls(
            modes=tuple(sorted(((s, c) for s, c in mode_terms.items() if c),
                               key=lambda item: item[0].sort_key)),
            lambdas=tuple(sorted((m, c) for m, c in lambda_terms.items() if c)),
            central=Fraction(central),
        )

    def is_zero(self) -> bool:
        return not self.modes and not self.lambdas and not self.central

    def __neg__(self) -> "ModeExpr":
        return ModeExpr(
            modes=tuple((s, -c) for s, c in self.modes),
            lambdas=tuple((m, -c) for m, c in self.lambdas),
            central=-self.central,
        )

    def __add__(self, other: "ModeExpr") -> "ModeExpr":
        return ModeExpr.build(self.modes + other.modes, self.lambdas + other.lambdas,
                              self.central + other.central)

    def __str__(self) -> str:
        parts = [f"{c}*{s}" for s, c in self.modes]
        parts += [f"{c}*Lambda({m})" for m, c in self.lambdas]
        if self.central:
            parts.append(str(self.central))
        return " + ".join(parts) if parts else "0"


def _central_l(m: int, params: AlgebraParams) -> Fraction:
    return params.c / 12 * (m ** 3 - m)


def _central_w(m: int, params: AlgebraParams) -> Fraction:
    return Fraction(3, 2) * params.c / 360 * m * (m ** 2 - 1) * (m ** 2 - 4)


@lru_cache(maxsize=None)
def commutator(a: ModeSymbol, b: ModeSymbol, params: AlgebraParams) -> ModeExpr:
    """[a, b] at the given central charge."""
    m, n = a.index, b.index
    delta = m + n == 0
    if a.family == "L" and b.family == "L":
        return ModeExpr.build(
            modes=[(ModeSymbol("L", m + n), m - n)],
            central=_central_l(m, params) if delta else 0,
        )
    if a.family == "L" and b.family == "Wt":
        return ModeExpr.build(modes=[(ModeSymbol("Wt", m + n), 2 * m - n)])
    if a.family == "Wt" and b.family == "L":
        return -commutator(b, a, params)

    l_coefficient = Fraction(3, 2) * (m - n) * (
        Fraction(1, 15) * (m + n + 3) * (m + n + 2) - Fraction(1, 6) * (m + 2) * (n + 2)
    )
    return ModeExpr.build(
        modes=[(ModeSymbol("L", m + n), l_coefficient)],
        lambdas=[(m + n, Fraction(3, 2) * params.beta * (m - n))],
        central=_central_w(m, params) if delta else 0,
    )
