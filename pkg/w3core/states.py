"""
PBW monomials and state vectors of highest-weight W3 modules.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping, Sequence

from exact.poly import Scalar, format_poly, poly_constant_value
from exact.rational import format_rational
from exact.vector import SparseVector

from .modes import ModeSymbol

if TYPE_CHECKING:
    from .module import HighestWeightModule


@dataclass(frozen=True)
class PBWMonomial:
    """L_{l_1} ... L_{l_a} Wt_{w_1} ... Wt_{w_b} |hw>, indices ascending in each block."""

    l_modes: tuple[int, ...] = ()
    w_modes: tuple[int, ...] = ()

    def __post_init__(self):
        if list(self.l_modes) != sorted(self.l_modes) or list(self.w_modes) != sorted(self.w_modes):
            raise ValueError(f"non-canonical PBW word {self.l_modes} {self.w_modes}")

    @property
    def word(self) -> tuple[ModeSymbol, ...]:
        return tuple(ModeSymbol("L", i) for i in self.l_modes) + tuple(
            ModeSymbol("Wt", i) for i in self.w_modes
        )

    @property
    def level(self) -> int:
        return -(sum(self.l_modes) + sum(self.w_modes))

    def is_top(self) -> bool:
        return not self.l_modes and not self.w_modes

    def split(self) -> tuple[ModeSymbol, "PBWMonomial"]:
        """Leftmost mode and the remaining monomial."""
        if self.l_modes:
            return ModeSymbol("L", self.l_modes[0]), PBWMonomial(self.l_modes[1:], self.w_modes)
        if self.w_modes:
            return ModeSymbol("Wt", self.w_modes[0]), PBWMonomial((), self.w_modes[1:])
        raise ValueError("the highest-weight monomial has no modes")

    def prepend(self, mode: ModeSymbol) -> "PBWMonomial":
        if mode.family == "L":
            return PBWMonomial((mode.index,) + self.l_modes, self.w_modes)
        if self.l_modes:
            raise ValueError(f"cannot place {mode} left of L modes")
        return PBWMonomial((), (mode.index,) + self.w_modes)

    @property
    def print_key(self) -> tuple:
        return (-self.level, self.l_modes, self.w_modes)

    def __str__(self) -> str:
        return "".join(str(mode) for mode in self.word) + "vac"


class StateVector(SparseVector[PBWMonomial]):
    """A finite combination of PBW monomials in one module."""

    __slots__ = ("module",)

    def __init__(self, module: "HighestWeightModule", terms: Mapping[PBWMonomial, Scalar] | None = None):
        super().__init__(terms)
        self.module = module

    def _like(self, terms):
        return StateVector(self.module, terms)

    def _same_space(self, other) -> bool:
        return isinstance(other, StateVector) and other.module == self.module

    @staticmethod
    def key_level(key: PBWMonomial) -> int:
        return key.level

    @classmethod
    def highest_weight(cls, module: "HighestWeightModule") -> "StateVector":
        return cls(module, {PBWMonomial(): 1})

    @classmethod
    def basis(cls, module: "HighestWeightModule", monomial: PBWMonomial) -> "StateVector":
        return cls(module, {monomial: 1})

    @classmethod
    def from_word(cls, module: "HighestWeightModule", word: Sequence[ModeSymbol],
                  coefficient: Scalar = 1) -> "StateVector":
        """Apply the word right to left to the highest-weight vector."""
        vector = cls.highest_weight(module).scale(coefficient)
        for mode in reversed(word):
            vector = module.apply_mode(mode, vector)
        return vector

    def to_expression(self) -> str:
        return format_vector(self)

    def __repr__(self) -> str:
        return f"StateVector({self.module.tag}: {format_vector(self)})"


def _coefficient_text(coefficient) -> tuple[bool, str]:
    """(negative, magnitude text) with unit magnitude rendered as ''."""
    if coefficient.is_ground:
        value = poly_constant_value(coefficient)
        if abs(value) == 1:
            return value < 0, ""
        return value < 0, format_rational(abs(value)) + "*"
    return False, f"({format_poly(coefficient)})*"


def format_vector(vector: StateVector) -> str:
    """Render in the vector expression grammar, e.g. `Wt(-3)Wt(-3)vac - 19/36*L(-3)L(-3)vac`."""
    if vector.is_zero():
        return "0"
    pieces = []
    for monomial, coefficient in sorted(vector.items(), key=lambda item: item[0].print_key):
        negative, prefix = _coefficient_text(coefficient)
        body = prefix + str(monomial)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"{'-' if negative else '+'} {body}")
    return " ".join(pieces)
