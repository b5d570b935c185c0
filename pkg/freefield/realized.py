"""
W3 generators realized through free fields.

Boson (Heisenberg, weight of j = 1):
    L_n  = 1/2 sum_{a+b=n} :j_a j_b: - 1/2 (n+1) j_n
    Wt_n = 1/3 sum_{a+b+c=n} :j_a j_b j_c: + 1/2 sum_{a+b=n} (-b-1) :j_a j_b:
           + 1/12 (n+1)(n+2) j_n

Fermion (bc system), with :b(a)c(k): = -c(k)b(a) for a >= 1, k <= -1:
    j_n  = sum_{a+k=n} :b(a)c(k):
    L_n  = sum_{a+k=n} -a :b(a)c(k):                 (from :db c:)
    Wt_n = sum_{a+k=n} 1/2 a(a-k) :b(a)c(k):         (from 1/2(:d^2b c: - :db dc:))

Normal-ordered boson products are sorted ascending and applied largest index
first. On a state of level N every index above N annihilates, so the term
lists are generated per level and are exact there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Literal

from config import FreeFieldConfig
from exact.combinatorics import multiplicity_count, sorted_index_tuples
from exact.poly import POLY_RING, as_poly
from w3core.modes import ModeSymbol

from .boson import BosonFock, BosonState
from .fermion import FermionFock, FermionState

Symbol = Literal["L", "Wt", "j", "b", "c"]
Side = Literal["boson", "fermion"]


class TruncationError(ValueError):
    """A realized mode was applied above the level it was built for."""


@dataclass(frozen=True)
class RealizedMode:
    """A generator mode on one free-field side, exact on states of level <= truncation."""

    symbol: Symbol
    index: int
    side: Side
    truncation: int

    def __post_init__(self):
        if self.side == "boson" and self.symbol in ("b", "c"):
            raise ValueError(f"{self.symbol} is a fermionic mode")

    def check(self, vector) -> None:
        for level in vector.components():
            if level > self.truncation:
                raise TruncationError(
                    f"{self} built for level <= {self.truncation} applied at level {level}"
                )

    def apply(self, vector):
        if self.side == "boson":
            return boson_apply(self, vector)
        return fermion_apply(self, vector)

    def __str__(self) -> str:
        return f"{self.symbol}({self.index})[{self.side}]"


# ----------------------------------------------------------------------
# term lists
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def boson_terms(symbol: Symbol, n: int, level: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """(sorted oscillator indices, coefficient) making up the mode on one level."""
    terms: dict[tuple[int, ...], Fraction] = {}

    def add(indices: tuple[int, ...], coefficient: Fraction) -> None:
        if coefficient:
            terms[indices] = terms.get(indices, Fraction(0)) + coefficient

    upper = max(level, 0)
    if symbol == "j":
        add((n,), Fraction(1))
    elif symbol == "L":
        for pair in sorted_index_tuples(n, 2, upper):
            add(pair, Fraction(multiplicity_count(pair), 2))
        add((n,), -Fraction(n + 1, 2))
    elif symbol == "Wt":
        for triple in sorted_index_tuples(n, 3, upper):
            add(triple, Fraction(multiplicity_count(triple), 3))
        for x, y in sorted_index_tuples(n, 2, upper):
            derivative = (-y - 1) + (-x - 1) if x != y else (-x - 1)
            add((x, y), Fraction(derivative, 2))
        add((n,), Fraction((n + 1) * (n + 2), 12))
    else:
        raise ValueError(f"{symbol} has no bosonic realization")
    return tuple((indices, c) for indices, c in terms.items() if c)


@lru_cache(maxsize=None)
def fermion_terms(symbol: Symbol, n: int, level: int) -> tuple[tuple[int, int, Fraction], ...]:
    """(a, k, coefficient) of :b(a)c(k): with a + k = n, on one level."""
    weights: dict[str, Callable[[int, int], Fraction]] = {
        "j": lambda a, k: Fraction(1),
        "L": lambda a, k: Fraction(-a),
        "Wt": lambda a, k: Fraction(a * (a - k), 2),
    }
    if symbol not in weights:
        raise ValueError(f"{symbol} is not a fermion bilinear")
    terms = []
    for a in range(n - level, max(level, 0) + 1):
        coefficient = weights[symbol](a, n - a)
        if coefficient:
            terms.append((a, n - a, coefficient))
    return tuple(terms)


# ----------------------------------------------------------------------
# actions
# ----------------------------------------------------------------------
def _merge(into: dict, state, factor) -> None:
    for key, value in state.items():
        into[key] = into.get(key, POLY_RING.zero) + factor * value


def boson_apply(mode: RealizedMode, vector: BosonState) -> BosonState:
    """Exact action of a boson-realized L_n, Wt_n or j_n."""
    if mode.side != "boson":
        raise ValueError(f"{mode} is not a boson mode")
    mode.check(vector)
    fock = vector.fock
    merged: dict = {}
    for key, coefficient in vector.items():
        _merge(merged, _boson_on_key(fock, mode.symbol, mode.index, key), coefficient)
    return BosonState(fock, merged)


def _boson_on_key(fock: BosonFock, symbol: Symbol, n: int, key: tuple[int, ...]) -> BosonState:
    cache_key = ("realized", symbol, n, key)
    cached = fock._cache.get(cache_key)
    if cached is None:
        merged: dict = {}
        for indices, coefficient in boson_terms(symbol, n, sum(key)):
            _merge(merged, fock.apply_product(indices, key), as_poly(coefficient))
        cached = BosonState(fock, merged)
        fock._cache[cache_key] = cached
    return cached


def fermion_apply(mode: RealizedMode, vector: FermionState) -> FermionState:
    """Exact action of b(n), c(n) or a fermion-realized j_n, L_n, Wt_n."""
    if mode.side != "fermion":
        raise ValueError(f"{mode} is not a fermion mode")
    mode.check(vector)
    fock = FermionFock()
    if mode.symbol == "b":
        return fock.apply_b(mode.index, vector)
    if mode.symbol == "c":
        return fock.apply_c(mode.index, vector)
    merged: dict = {}
    for key, coefficient in vector.items():
        _merge(merged, _fermion_on_key(mode.symbol, mode.index, key), coefficient)
    return FermionState(merged)


@lru_cache(maxsize=FreeFieldConfig.FERMION_CACHE_SIZE)
def _fermion_on_key(symbol: Symbol, n: int, key) -> FermionState:
    fock = FermionFock()
    start = FermionState({key: 1})
    merged: dict = {}
    for a, k, coefficient in fermion_terms(symbol, n, FermionState.key_level(key)):
        if a >= 1 and k <= -1:
            image = fock.apply_c(k, fock.apply_b(a, start))
            coefficient = -coefficient
        else:
            image = fock.apply_b(a, fock.apply_c(k, start))
        _merge(merged, image, as_poly(coefficient))
    return FermionState(merged)


def realized_act(side: Side, truncation: int):
    """An act(mode, vector) callable for w3core expressions, through realized modes."""

    def act(mode: ModeSymbol, vector):
        return RealizedMode(mode.family, mode.index, side, truncation).apply(vector)

    return act


def apply_word(side: Side, symbols: tuple[tuple[Symbol, int], ...], vector, truncation: int):
    """Apply (symbol, index) pairs right to left."""
    for symbol, index in reversed(symbols):
        vector = RealizedMode(symbol, index, side, truncation).apply(vector)
    return vector
