"""
Fourier modes of the vertex operator of an arbitrary vacuum-module state.

For a = x_(p) a' with x a generating field (L_k = omega_(k+1), Wt_k = Wt_(k+2)):

    (x_(p) a')_(n) b = sum_{i>=0} (-1)^i C(p,i) [ x_(p-i) a'_(n+i) b - (-1)^p a'_(p+n-i) x_(i) b ]

Both sums are finite on a vector b of level N: a'_(m) b vanishes once its
target level N + wt(a') - m - 1 is negative, and x_(i) b vanishes for
i >= N + wt(x).
"""
from __future__ import annotations

from functools import lru_cache

from exact.combinatorics import binomial
from w3core.module import HighestWeightModule, ModuleMismatchError, VacuumModule
from w3core.modes import ModeSymbol
from w3core.states import PBWMonomial, StateVector


def _check(a: StateVector, b: StateVector) -> None:
    if not isinstance(a.module, VacuumModule):
        raise ModuleMismatchError(f"field modes need a vacuum-module state, got {a.module.tag}")
    if a.module.params != b.module.params:
        raise ModuleMismatchError(
            f"central charges differ: {a.module.tag} acting on {b.module.tag}"
        )


def field_mode(a: StateVector, n: int, b: StateVector) -> StateVector:
    """a_(n) b, for a in the vacuum module and b in any module at the same central charge."""
    _check(a, b)
    result = b.zero()
    for monomial, coefficient in a.items():
        result = result + _field_mode_on(monomial, n, b).scale(coefficient)
    return result


def _field_mode_on(a: PBWMonomial, n: int, b: StateVector) -> StateVector:
    module = b.module
    result = b.zero()
    for monomial, coefficient in b.items():
        result = result + _basis_field_mode(a, n, module, monomial).scale(coefficient)
    return result


@lru_cache(maxsize=None)
def _basis_field_mode(a: PBWMonomial, n: int, module: HighestWeightModule, b: PBWMonomial) -> StateVector:
    level = b.level
    if level + a.level - n - 1 < 0:
        return StateVector(module)
    if a.is_top():
        return StateVector.basis(module, b) if n == -1 else StateVector(module)

    x, rest = a.split()
    p = x.field_index()
    parity = -1 if p % 2 else 1
    b_vector = StateVector.basis(module, b)
    result = StateVector(module)

    for i in range(0, level + rest.level - n):
        coefficient = (-1) ** i * binomial(p, i)
        inner = _field_mode_on(rest, n + i, b_vector)
        if coefficient and not inner.is_zero():
            outer = ModeSymbol.from_field_index(x.family, p - i)
            result = result + module.apply_mode(outer, inner).scale(coefficient)

    for i in range(0, level + x.weight):
        coefficient = -parity * (-1) ** i * binomial(p, i)
        moved = module.apply_mode(ModeSymbol.from_field_index(x.family, i), b_vector)
        if coefficient and not moved.is_zero():
            result = result + _field_mode_on(rest, p + n - i, moved).scale(coefficient)

    return result
