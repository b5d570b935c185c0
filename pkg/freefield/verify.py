"""
Mode-level checks of the free-field realizations.

- highest_weight: L_0 and Wt_0 eigenvalues on |alpha>
- verify_w3_relations: realized a(bv) - b(av) against the W3 commutator
  expression evaluated through realized modes, on every H^alpha basis state
- verify_bosonization: the charge-0 map j_{-n_1}...|0> -> j^bc_{-n_1}...|0>_bc
  is invertible per level and intertwines the two realizations
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from config import AlgebraConfig, FreeFieldConfig
from exact.matrix import RatMatrix
from exact.poly import Poly, Scalar, as_poly, format_poly, poly_constant_value
from utils.logger import info, warn
from w3core.commutator import commutator
from w3core.lambda_op import apply_expr
from w3core.modes import AlgebraParams, ModeSymbol

from .boson import BosonFock, BosonState
from .fermion import FermionFock, FermionState
from .realized import RealizedMode, Symbol, realized_act


def highest_weight(alpha: Scalar) -> tuple[Poly, Poly]:
    """(t, w) read off boson L_0 and Wt_0 acting on |alpha>."""
    fock = BosonFock(as_poly(alpha))
    vacuum = fock.vacuum()
    t = RealizedMode("L", 0, "boson", 0).apply(vacuum).coefficient(())
    w = RealizedMode("Wt", 0, "boson", 0).apply(vacuum).coefficient(())
    return t, w


# ============================================================================
# W3 RELATIONS
# ============================================================================
@dataclass
class RelationFailure:
    left: str
    right: str
    state: str

    def to_dict(self) -> dict:
        return {"pair": [self.left, self.right], "state": self.state}


@dataclass
class W3RelationsReport:
    max_level: int
    max_index: int
    alpha: str
    pairs_checked: int = 0
    states_checked: int = 0
    failures: list[RelationFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "maxLevel": self.max_level,
            "maxIndex": self.max_index,
            "alpha": self.alpha,
            "pairsChecked": self.pairs_checked,
            "statesChecked": self.states_checked,
            "failures": [f.to_dict() for f in self.failures],
            "passed": self.passed,
        }


def relation_pairs(max_index: int) -> list[tuple[ModeSymbol, ModeSymbol]]:
    """(L_m, L_n), (L_m, Wt_n) and (Wt_m, Wt_n) with |m|, |n| <= max_index."""
    indices = range(-max_index, max_index + 1)
    pairs = []
    for left, right in (("L", "L"), ("L", "Wt"), ("Wt", "Wt")):
        for m, n in product(indices, repeat=2):
            pairs.append((ModeSymbol(left, m), ModeSymbol(right, n)))
    return pairs


def realized_commutator(a: ModeSymbol, b: ModeSymbol, vector: BosonState, truncation: int) -> BosonState:
    act = realized_act("boson", truncation)
    return act(a, act(b, vector)) - act(b, act(a, vector))


def verify_w3_relations(max_level: int | None = None, alpha: Scalar = 0,
                        max_index: int | None = None) -> W3RelationsReport:
    """Compare realized commutators with the W3 relations at c = -2 on H^alpha."""
    max_level = FreeFieldConfig.MAX_LEVEL if max_level is None else max_level
    max_index = FreeFieldConfig.MAX_INDEX if max_index is None else max_index
    if max_level < 2:
        raise ValueError("verify_w3_relations needs max_level >= 2")
    params = AlgebraParams(AlgebraConfig.CENTRAL_CHARGE)
    fock = BosonFock(as_poly(alpha))
    truncation = max_level + 2 * max_index + 2
    act = realized_act("boson", truncation)
    report = W3RelationsReport(max_level, max_index, format_poly(fock.alpha))

    states = [fock.state({key: 1}) for level in range(max_level + 1) for key in fock.basis(level)]
    for a, b in relation_pairs(max_index):
        expression = commutator(a, b, params)
        report.pairs_checked += 1
        for state in states:
            report.states_checked += 1
            expected = apply_expr(expression, state, act)
            if realized_commutator(a, b, state, truncation) != expected:
                (key,) = state.keys()
                report.failures.append(RelationFailure(str(a), str(b), f"j{list(key)}"))
    if report.passed:
        info(f"W3 relations hold on H^{report.alpha} through level {max_level} ({report.pairs_checked} pairs)")
    else:
        warn(f"{len(report.failures)} realized commutators disagree with the W3 relations")
    return report


# ============================================================================
# BOSONIZATION
# ============================================================================
class Bosonization:
    """The charge-0 map Phi from H^0 to the bc Fock space, built from fermionic j-modes."""

    def __init__(self, truncation: int):
        self.boson = BosonFock(as_poly(0))
        self.fermion = FermionFock()
        self.truncation = truncation
        self._images: dict[tuple[int, ...], FermionState] = {}

    def image_of_key(self, key: tuple[int, ...]) -> FermionState:
        cached = self._images.get(key)
        if cached is None:
            cached = self.fermion.vacuum()
            for part in reversed(key):
                cached = RealizedMode("j", -part, "fermion", self.truncation).apply(cached)
            self._images[key] = cached
        return cached

    def __call__(self, vector: BosonState) -> FermionState:
        result: dict = {}
        for key, coefficient in vector.items():
            for target, value in self.image_of_key(key).items():
                result[target] = result.get(target, as_poly(0)) + coefficient * value
        return FermionState(result)

    def level_matrix(self, level: int) -> RatMatrix:
        """Columns: images of the boson basis in fermion charge-0 coordinates."""
        targets = self.fermion.basis(level, charge=0)
        columns = []
        for key in self.boson.basis(level):
            image = self.image_of_key(key)
            columns.append([poly_constant_value(image.coefficient(target)) for target in targets])
        return RatMatrix.from_columns(columns, len(targets))


@dataclass
class LevelDimension:
    level: int
    boson: int
    fermion: int
    rank: int

    @property
    def isomorphic(self) -> bool:
        return self.boson == self.fermion == self.rank

    def to_dict(self) -> dict:
        return {"level": self.level, "boson": self.boson, "fermion": self.fermion,
                "rank": self.rank, "isomorphic": self.isomorphic}


@dataclass
class BosonizationReport:
    max_level: int
    max_index: int
    dimensions: list[LevelDimension] = field(default_factory=list)
    modes_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(d.isomorphic for d in self.dimensions) and not self.mismatches

    def to_dict(self) -> dict:
        return {
            "maxLevel": self.max_level,
            "maxIndex": self.max_index,
            "dimensions": [d.to_dict() for d in self.dimensions],
            "modesChecked": self.modes_checked,
            "mismatches": self.mismatches,
            "passed": self.passed,
        }


def bosonization_map(level: int) -> dict[tuple[int, ...], FermionState]:
    """Phi on the boson basis of one level."""
    phi = Bosonization(truncation=max(level, 0))
    return {key: phi.image_of_key(key) for key in phi.boson.basis(level)}


def verify_bosonization(max_level: int | None = None, max_index: int | None = None,
                        symbols: Iterable[Symbol] = ("j", "L", "Wt")) -> BosonizationReport:
    """Phi is a level-wise isomorphism and Phi(X_boson v) = X_fermion Phi(v)."""
    max_level = FreeFieldConfig.MAX_LEVEL if max_level is None else max_level
    max_index = FreeFieldConfig.BOSONIZATION_MAX_INDEX if max_index is None else max_index
    if max_level < 1:
        raise ValueError("verify_bosonization needs max_level >= 1")
    truncation = max_level + max_index
    phi = Bosonization(truncation)
    report = BosonizationReport(max_level, max_index)

    for level in range(max_level + 1):
        matrix = phi.level_matrix(level)
        report.dimensions.append(LevelDimension(level, matrix.cols, matrix.rows, matrix.rank()))

    for symbol in symbols:
        for n in range(-max_index, max_index + 1):
            report.modes_checked += 1
            boson_mode = RealizedMode(symbol, n, "boson", truncation)
            fermion_mode = RealizedMode(symbol, n, "fermion", truncation)
            for level in range(max_level + 1):
                for key in phi.boson.basis(level):
                    state = phi.boson.state({key: 1})
                    if phi(boson_mode.apply(state)) != fermion_mode.apply(phi(state)):
                        report.mismatches.append({"mode": f"{symbol}({n})", "state": f"j{list(key)}"})
    if report.passed:
        info(f"bosonization verified through level {max_level}")
    else:
        warn(f"bosonization check failed: {len(report.mismatches)} mismatches")
    return report


def charge_decomposition(level: int, charges: Iterable[int] = (-1, 0, 1)) -> dict[int, int]:
    """Dimensions of the bc Fock space at one level, split by charge."""
    fock = FermionFock()
    return {charge: len(fock.basis(level, charge)) for charge in charges}
