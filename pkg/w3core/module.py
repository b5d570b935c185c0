"""
Vacuum and Verma modules of W3 with PBW normal ordering.

A mode g acting on a monomial first*rest is rewritten as

    g first rest = first (g rest) + [g, first] rest

until g either joins the word at its canonical place or reaches the
highest-weight vector, where it creates, acts diagonally, or annihilates.
Results are memoized per (mode, monomial) on the module instance.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar, Sequence

from exact.combinatorics import partitions
from exact.poly import POLY_RING, Poly, Scalar, as_poly, format_poly, poly_constant_value
from exact.rational import as_rational

from .commutator import commutator
from .lambda_op import apply_expr
from .modes import AlgebraParams, ModeSymbol
from .states import PBWMonomial, StateVector


class ModuleMismatchError(ValueError):
    """A vector was handed to a module it does not belong to."""


@dataclass(frozen=True)
class HighestWeightModule:
    """Common PBW machinery; subclasses fix creation modes and top eigenvalues."""

    params: AlgebraParams
    _cache: dict = field(default_factory=dict, init=False, compare=False, hash=False, repr=False)

    min_l_part: ClassVar[int] = 1
    min_w_part: ClassVar[int] = 1

    # ------------------------------------------------------------------
    # module data
    # ------------------------------------------------------------------
    def creates(self, mode: ModeSymbol) -> bool:
        minimum = self.min_l_part if mode.family == "L" else self.min_w_part
        return mode.index <= -minimum

    def eigenvalue(self, mode: ModeSymbol) -> Poly:
        """Scalar by which a non-creating mode acts on the top vector."""
        return POLY_RING.zero

    @property
    def tag(self) -> str:
        raise NotImplementedError

    # ------------------------------------------------------------------
    # vectors
    # ------------------------------------------------------------------
    def top(self) -> StateVector:
        return StateVector.highest_weight(self)

    def vector(self, terms) -> StateVector:
        return StateVector(self, terms)

    def from_word(self, word: Sequence[ModeSymbol], coefficient: Scalar = 1) -> StateVector:
        return StateVector.from_word(self, word, coefficient)

    def graded_basis(self, level: int) -> list[PBWMonomial]:
        """PBW monomials of one level: L-weight descending, then partitions largest-first."""
        if level < 0:
            return []
        basis = []
        for l_level in range(level, -1, -1):
            for l_parts in partitions(l_level, self.min_l_part):
                for w_parts in partitions(level - l_level, self.min_w_part):
                    basis.append(PBWMonomial(tuple(-p for p in l_parts), tuple(-p for p in w_parts)))
        return basis

    def dimension(self, level: int) -> int:
        return len(self.graded_basis(level))

    def coordinates(self, vector: StateVector, basis: Sequence[PBWMonomial]) -> list[Fraction]:
        """Rational coordinates of a vector in a given basis."""
        self._check(vector)
        position = {monomial: i for i, monomial in enumerate(basis)}
        coordinates = [Fraction(0)] * len(basis)
        for monomial, coefficient in vector.items():
            if monomial not in position:
                raise ValueError(f"{monomial} is outside the given basis")
            coordinates[position[monomial]] = poly_constant_value(coefficient)
        return coordinates

    def from_coordinates(self, coordinates: Sequence, basis: Sequence[PBWMonomial]) -> StateVector:
        return StateVector(self, {m: as_poly(c) for m, c in zip(basis, coordinates)})

    # ------------------------------------------------------------------
    # action
    # ------------------------------------------------------------------
    def _check(self, vector: StateVector) -> None:
        if not isinstance(vector, StateVector) or vector.module != self:
            owner = getattr(vector, "module", None)
            raise ModuleMismatchError(
                f"vector of {getattr(owner, 'tag', type(vector).__name__)} used in {self.tag}"
            )

    def apply_mode(self, mode: ModeSymbol, vector: StateVector) -> StateVector:
        """Act with a single mode; the result is again in PBW form."""
        self._check(vector)
        return vector.map_terms(lambda monomial: self._act(mode, monomial))

    def apply_word(self, word: Sequence[ModeSymbol], vector: StateVector) -> StateVector:
        for mode in reversed(word):
            vector = self.apply_mode(mode, vector)
        return vector

    def _act(self, mode: ModeSymbol, monomial: PBWMonomial) -> StateVector:
        key = (mode, monomial)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._rewrite(mode, monomial)
            self._cache[key] = cached
        return cached

    def _rewrite(self, mode: ModeSymbol, monomial: PBWMonomial) -> StateVector:
        if mode.index > monomial.level:
            return StateVector(self)
        if monomial.is_top():
            if self.creates(mode):
                return StateVector.basis(self, monomial.prepend(mode))
            return StateVector(self, {monomial: self.eigenvalue(mode)})
        first, rest = monomial.split()
        if self.creates(mode) and mode.sort_key <= first.sort_key:
            return StateVector.basis(self, monomial.prepend(mode))
        moved = self.apply_mode(first, self._act(mode, rest))
        bracket = apply_expr(commutator(mode, first, self.params),
                             StateVector.basis(self, rest), self.apply_mode)
        return moved + bracket


@dataclass(frozen=True)
class VacuumModule(HighestWeightModule):
    """VM: L_{-1}, Wt_{-1}, Wt_{-2} and all modes of index >= 0 kill |0>."""

    min_l_part: ClassVar[int] = 2
    min_w_part: ClassVar[int] = 3

    @property
    def tag(self) -> str:
        return f"Vacuum(c={self.params.c})"


@dataclass(frozen=True)
class VermaModule(HighestWeightModule):
    """M(t, w): every negative mode creates, L_0 and Wt_0 act by t and w."""

    t: Poly = None
    w: Poly = None

    def __post_init__(self):
        object.__setattr__(self, "t", as_poly(0 if self.t is None else self.t))
        object.__setattr__(self, "w", as_poly(0 if self.w is None else self.w))

    def eigenvalue(self, mode: ModeSymbol) -> Poly:
        if mode.index != 0:
            return POLY_RING.zero
        return self.t if mode.family == "L" else self.w

    @property
    def tag(self) -> str:
        return f"Verma(t={format_poly(self.t)}, w={format_poly(self.w)}, c={self.params.c})"


@lru_cache(maxsize=None)
def _shared_vacuum(c: Fraction) -> VacuumModule:
    return VacuumModule(AlgebraParams(c))


@lru_cache(maxsize=None)
def _shared_verma(t: Poly, w: Poly, c: Fraction) -> VermaModule:
    return VermaModule(AlgebraParams(c), t, w)


def vacuum_module(c: Scalar = -2) -> VacuumModule:
    """Shared vacuum module per central charge (keeps the rewrite cache warm)."""
    return _shared_vacuum(as_rational(c))


def verma_module(t: Scalar = 0, w: Scalar = 0, c: Scalar = -2) -> VermaModule:
    return _shared_verma(as_poly(t), as_poly(w), as_rational(c))


def graded_basis(module: HighestWeightModule, level: int) -> list[PBWMonomial]:
    return module.graded_basis(level)


def apply_mode(mode: ModeSymbol, vector: StateVector) -> StateVector:
    return vector.module.apply_mode(mode, vector)
