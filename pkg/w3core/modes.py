"""
Mode symbols of the W3 algebra and its parameters.

Only the rescaled generator Wt = (sqrt(6)/2) W is ever stored, so every
structure constant stays rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from exact.rational import as_rational

Family = Literal["L", "Wt"]

FAMILY_RANK = {"L": 0, "Wt": 1}
FAMILY_WEIGHT = {"L": 2, "Wt": 3}


@dataclass(frozen=True)
class ModeSymbol:
    """A generator mode X_n with X in {L, Wt}."""

    family: Family
    index: int

    def __post_init__(self):
        if self.family not in FAMILY_RANK:
            raise ValueError(f"unknown generator family {self.family!r}")
        if not isinstance(self.index, int):
            raise TypeError(f"mode index must be an integer, got {self.index!r}")

    @property
    def weight(self) -> int:
        """Conformal weight of the generating field."""
        return FAMILY_WEIGHT[self.family]

    @property
    def sort_key(self) -> tuple[int, int]:
        """PBW order: L before Wt, most negative index first."""
        return (FAMILY_RANK[self.family], self.index)

    def field_index(self) -> int:
        """n such that this mode is the n-th Fourier mode x_(n) of its field."""
        return self.index + self.weight - 1

    @classmethod
    def from_field_index(cls, family: Family, n: int) -> "ModeSymbol":
        return cls(family, n - FAMILY_WEIGHT[family] + 1)

    def __str__(self) -> str:
        return f"{self.family}({self.index})"


def L(n: int) -> ModeSymbol:
    return ModeSymbol("L", n)


def Wt(n: int) -> ModeSymbol:
    return ModeSymbol("Wt", n)


@dataclass(frozen=True)
class AlgebraParams:
    """Central charge c and the derived constant beta = 16/(22+5c)."""

    c: Fraction

    def __post_init__(self):
        c = as_rational(self.c)
        if 22 + 5 * c == 0:
            raise ValueError("central charge c = -22/5 makes beta = 16/(22+5c) undefined")
        object.__setattr__(self, "c", c)

    @property
    def beta(self) -> Fraction:
        return Fraction(16) / (22 + 5 * self.c)
