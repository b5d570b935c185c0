"""
The two level-6 singular vectors of the c = -2 vacuum module, in Wt coordinates.

    v_s  = Wt_{-3}^2 - 19/36 L_{-3}^2 - 8/9 L_{-2}^3 - 14/9 L_{-2}L_{-4} + 44/9 L_{-6}
    v_s' = 9/2 Wt_{-6} + 9 L_{-3}Wt_{-3} - 6 L_{-2}Wt_{-4}

Words are applied right to left to the highest-weight vector, so the same
definitions produce vectors in the vacuum module or in any Verma module.
"""
from __future__ import annotations

from fractions import Fraction

from w3core.modes import L, Wt
from w3core.module import HighestWeightModule, vacuum_module
from w3core.states import StateVector

SINGULAR_LEVEL = 6

V_S_WORDS = (
    (Fraction(1), (Wt(-3), Wt(-3))),
    (Fraction(-19, 36), (L(-3), L(-3))),
    (Fraction(-8, 9), (L(-2), L(-2), L(-2))),
    (Fraction(-14, 9), (L(-2), L(-4))),
    (Fraction(44, 9), (L(-6),)),
)

V_S_PRIME_WORDS = (
    (Fraction(9, 2), (Wt(-6),)),
    (Fraction(9), (L(-3), Wt(-3))),
    (Fraction(-6), (L(-2), Wt(-4))),
)


def _combine(module: HighestWeightModule, words) -> StateVector:
    vector = StateVector(module)
    for coefficient, word in words:
        vector = vector + module.from_word(word, coefficient)
    return vector


def singular_vector(module: HighestWeightModule | None = None) -> StateVector:
    return _combine(module or vacuum_module(-2), V_S_WORDS)


def singular_vector_prime(module: HighestWeightModule | None = None) -> StateVector:
    return _combine(module or vacuum_module(-2), V_S_PRIME_WORDS)


def reference_vectors(module: HighestWeightModule | None = None) -> tuple[StateVector, StateVector]:
    """(v_s, v_s') in the given module (default: vacuum module at c = -2)."""
    module = module or vacuum_module(-2)
    return singular_vector(module), singular_vector_prime(module)
