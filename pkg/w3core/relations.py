"""
Consistency checks of the rewriting engine against the defining relations.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .commutator import commutator
from .lambda_op import apply_expr
from .modes import ModeSymbol
from .module import HighestWeightModule
from .states import StateVector


def bracket_defect(a: ModeSymbol, b: ModeSymbol, vector: StateVector) -> StateVector:
    """[a,b] v computed from the relations minus a(b v) - b(a v); zero when consistent."""
    module = vector.module
    expected = apply_expr(commutator(a, b, module.params), vector, module.apply_mode)
    direct = module.apply_mode(a, module.apply_mode(b, vector)) - module.apply_mode(
        b, module.apply_mode(a, vector)
    )
    return expected - direct


def _bracket_then(outer: ModeSymbol, a: ModeSymbol, b: ModeSymbol, vector: StateVector) -> StateVector:
    """[[a,b], outer] v with [a,b] expanded as an operator expression."""
    module = vector.module
    inner = commutator(a, b, module.params)
    return apply_expr(inner, module.apply_mode(outer, vector), module.apply_mode) - module.apply_mode(
        outer, apply_expr(inner, vector, module.apply_mode)
    )


def jacobi_defect(a: ModeSymbol, b: ModeSymbol, c: ModeSymbol, vector: StateVector) -> StateVector:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] acting on v."""
    return (
        _bracket_then(c, a, b, vector)
        + _bracket_then(a, b, c, vector)
        + _bracket_then(b, c, a, vector)
    )


def generators(max_index: int) -> list[ModeSymbol]:
    """All L_n, Wt_n with |n| <= max_index."""
    return [ModeSymbol(family, n) for family in ("L", "Wt") for n in range(-max_index, max_index + 1)]


def antisymmetry_failures(module: HighestWeightModule, max_level: int,
                          modes: Sequence[ModeSymbol]) -> list[tuple[ModeSymbol, ModeSymbol, str]]:
    """Pairs whose relation expressions fail [a,b] = -[b,a] on some basis vector."""
    failures = []
    for a, b in product(modes, repeat=2):
        forward = commutator(a, b, module.params)
        backward = commutator(b, a, module.params)
        for level in range(max_level + 1):
            for monomial in module.graded_basis(level):
                v = StateVector.basis(module, monomial)
                if apply_expr(forward, v) != -apply_expr(backward, v):
                    failures.append((a, b, str(monomial)))
    return failures


def jacobi_failures(module: HighestWeightModule, max_level: int,
                    triples: Iterable[tuple[ModeSymbol, ModeSymbol, ModeSymbol]]) -> list[tuple]:
    failures = []
    for a, b, c in triples:
        for level in range(max_level + 1):
            for monomial in module.graded_basis(level):
                if not jacobi_defect(a, b, c, StateVector.basis(module, monomial)).is_zero():
                    failures.append((a, b, c, str(monomial)))
    return failures
