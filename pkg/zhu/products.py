"""
Zhu's bilinear products on the vacuum module.

    a * b = Res_z Y(a,z) (1+z)^{wt a} / z   b = sum_j C(wt a, j) a_(j-1) b
    a o b = Res_z Y(a,z) (1+z)^{wt a} / z^2 b = sum_j C(wt a, j) a_(j-2) b
"""
from __future__ import annotations

from math import comb

from w3core.states import StateVector

from .vertex import field_mode


def conformal_weight(a: StateVector) -> int:
    if not a.is_homogeneous():
        raise ValueError("Zhu products need a homogeneous left factor")
    return a.level


def star(a: StateVector, b: StateVector) -> StateVector:
    if a.is_zero():
        return b.zero()
    weight = conformal_weight(a)
    result = b.zero()
    for j in range(weight + 1):
        result = result + field_mode(a, j - 1, b).scale(comb(weight, j))
    return result


def circ(a: StateVector, b: StateVector) -> StateVector:
    if a.is_zero():
        return b.zero()
    weight = conformal_weight(a)
    result = b.zero()
    for j in range(weight + 1):
        result = result + field_mode(a, j - 2, b).scale(comb(weight, j))
    return result


def zero_mode(a: StateVector, b: StateVector) -> StateVector:
    """o(a) b = sum over homogeneous parts a_k of (a_k)_(wt a_k - 1) b."""
    result = b.zero()
    for weight, part in a.components().items():
        result = result + field_mode(part, weight - 1, b)
    return result
