"""
Reduction of vacuum-module vectors to their class [v] in A(V) = C[t, w].

Two rewriting strategies peel the leftmost mode of each PBW monomial y' = g y:

peel (right products y * omega, y * Wt and L_{-1} ~ -L_0):
    [L_{-2} y]           = [y] (t + wt y)
    [L_{-n} y],  n >= 3  = (-1)^n [y] ((n-1) t + wt y)
    [Wt_{-3} y]          = [y] w - [2 Wt_{-2} y + Wt_{-1} y]

star (left products omega * y, Wt * y):
    [L_{-2} y]           = t [y] - 2 [L_{-1} y] - wt(y) [y]
    [L_{-n} y],  n >= 3  = -[2 L_{-n+1} y + L_{-n+2} y]
    [Wt_{-3} y]          = w [y] - [3 Wt_{-2} y + 3 Wt_{-1} y + Wt_0 y]

both:
    [Wt_{-n} y], n >= 4  = -[3 Wt_{-n+1} y + 3 Wt_{-n+2} y + Wt_{-n+3} y]

Every right-hand side has lower level, so the recursion terminates. A third
route evaluates the zero mode o(v) on the top of the symbolic Verma module.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Literal

from exact.poly import POLY_RING, Poly, T, W
from w3core.module import VacuumModule, ModuleMismatchError, verma_module
from w3core.modes import L, Wt
from w3core.states import PBWMonomial, StateVector

from .curve import ZhuElement
from .products import zero_mode

Strategy = Literal["peel", "star"]
STRATEGIES: tuple[Strategy, ...] = ("peel", "star")


def _reduce_vector(vector: StateVector, strategy: Strategy) -> Poly:
    total = POLY_RING.zero
    for monomial, coefficient in vector.items():
        total += coefficient * _reduce_monomial(vector.module, monomial, strategy)
    return total


@lru_cache(maxsize=None)
def _reduce_monomial(module: VacuumModule, monomial: PBWMonomial, strategy: Strategy) -> Poly:
    if monomial.is_top():
        return POLY_RING.one
    first, rest = monomial.split()
    y = StateVector.basis(module, rest)
    weight = rest.level
    reduced = _reduce_monomial(module, rest, strategy)
    n = -first.index

    def lowered(*terms: tuple[int, object]) -> Poly:
        combination = StateVector(module)
        for coefficient, mode in terms:
            combination = combination + module.apply_mode(mode, y).scale(coefficient)
        return _reduce_vector(combination, strategy)

    if first.family == "Wt" and n >= 4:
        return -lowered((3, Wt(-n + 1)), (3, Wt(-n + 2)), (1, Wt(-n + 3)))

    if strategy == "peel":
        if first.family == "L":
            if n == 2:
                return reduced * (T + weight)
            return (-1) ** n * reduced * ((n - 1) * T + weight)
        return reduced * W - lowered((2, Wt(-2)), (1, Wt(-1)))

    if first.family == "L":
        if n == 2:
            return T * reduced - lowered((2, L(-1))) - weight * reduced
        return -lowered((2, L(-n + 1)), (1, L(-n + 2)))
    return W * reduced - lowered((3, Wt(-2)), (3, Wt(-1)), (1, Wt(0)))


def reduce_to_poly(vector: StateVector, strategy: Strategy = "peel") -> ZhuElement:
    """[v] as a polynomial in t, w."""
    if not isinstance(vector.module, VacuumModule):
        raise ModuleMismatchError(f"Zhu reduction works on the vacuum module, got {vector.module.tag}")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown reduction strategy {strategy!r}; choose from {STRATEGIES}")
    return ZhuElement(_reduce_vector(vector, strategy))


def reduce_via_zero_mode(vector: StateVector) -> ZhuElement:
    """Eigenvalue of o(v) on the top vector of the symbolic Verma module M(t, w)."""
    if not isinstance(vector.module, VacuumModule):
        raise ModuleMismatchError(f"Zhu reduction works on the vacuum module, got {vector.module.tag}")
    verma = verma_module(T, W, vector.module.params.c)
    image = zero_mode(vector, verma.top())
    top = PBWMonomial()
    stray = [m for m in image.keys() if m != top]
    if stray:
        raise RuntimeError(f"zero mode left the top level: {stray[0]}")
    return ZhuElement(image.coefficient(top))
