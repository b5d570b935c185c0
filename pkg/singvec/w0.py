"""
Wt_0 on the span of the two level-6 singular vectors, and the Verma witness
showing they are not singular before the quotient.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy import Matrix, Rational as SymRational

from config.engine_config import AlgebraConfig
from exact.matrix import RatMatrix
from exact.rational import format_rational
from utils.logger import info, warn
from w3core.modes import ModeSymbol, Wt
from w3core.module import HighestWeightModule, vacuum_module, verma_module
from w3core.states import StateVector, format_vector

from .detector import checked_modes
from .reference import SINGULAR_LEVEL, reference_vectors

W0 = Wt(0)


@dataclass
class W0Structure:
    """Wt_0 in the ordered basis (v_s, v_s')."""

    matrix: RatMatrix
    eigenvalues: list[Fraction]
    eigenvectors: list[tuple[Fraction, Fraction]]
    notes: list[str] = field(default_factory=list)
    input_coordinates: tuple[Fraction, Fraction] | None = None
    input_image: tuple[Fraction, Fraction] | None = None

    @property
    def image_of_v_s(self) -> tuple[Fraction, Fraction]:
        return (self.matrix[0, 0], self.matrix[1, 0])

    @property
    def image_of_v_s_prime(self) -> tuple[Fraction, Fraction]:
        return (self.matrix[0, 1], self.matrix[1, 1])

    @property
    def trace(self) -> Fraction:
        return self.matrix[0, 0] + self.matrix[1, 1]

    @property
    def determinant(self) -> Fraction:
        return self.matrix[0, 0] * self.matrix[1, 1] - self.matrix[0, 1] * self.matrix[1, 0]

    def characteristic_polynomial(self) -> str:
        pieces = ["x^2"]
        for coefficient, suffix in ((-self.trace, "*x"), (self.determinant, "")):
            if coefficient:
                sign = "-" if coefficient < 0 else "+"
                pieces.append(f"{sign} {format_rational(abs(coefficient))}{suffix}")
        return " ".join(pieces)

    def to_dict(self) -> dict:
        payload = {
            "matrix": [[format_rational(x) for x in row] for row in self.matrix.to_rows()],
            "W0_v_s": [format_rational(x) for x in self.image_of_v_s],
            "W0_v_s_prime": [format_rational(x) for x in self.image_of_v_s_prime],
            "characteristicPolynomial": self.characteristic_polynomial(),
            "eigenvalues": [format_rational(x) for x in self.eigenvalues],
            "eigenvectors": [[format_rational(x) for x in v] for v in self.eigenvectors],
            "notes": list(self.notes),
        }
        if self.input_coordinates is not None:
            payload["input"] = [format_rational(x) for x in self.input_coordinates]
            payload["inputImage"] = [format_rational(x) for x in self.input_image]
        return payload


def _span_coordinates(vector: StateVector, pair: Sequence[StateVector]) -> tuple[Fraction, Fraction]:
    module = vector.module
    basis = module.graded_basis(SINGULAR_LEVEL)
    columns = [module.coordinates(v, basis) for v in pair]
    try:
        target = module.coordinates(vector, basis)
    except ValueError as exc:
        raise ValueError(f"vector is not in span(v_s, v_s'): {exc}") from exc
    solution = RatMatrix.from_columns(columns, len(basis)).solve(target)
    if solution is None:
        raise ValueError(f"vector {format_vector(vector)} is not in span(v_s, v_s')")
    return solution[0], solution[1]


def _eigen_data(matrix: RatMatrix) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]], list[str]]:
    sym = Matrix(2, 2, lambda i, j: SymRational(matrix[i, j].numerator, matrix[i, j].denominator))
    values, vectors, notes = [], [], []
    for value, multiplicity, basis in sym.eigenvects():
        if not value.is_rational:
            notes.append(f"eigenvalue {value} is not rational")
            continue
        eigenvalue = Fraction(int(value.p), int(value.q))
        for column in basis:
            entries = [Fraction(int(x.p), int(x.q)) for x in column]
            lead = next(x for x in entries if x != 0)
            values.append(eigenvalue)
            vectors.append(tuple(x / lead for x in entries))
    order = sorted(range(len(values)), key=lambda i: values[i], reverse=True)
    return [values[i] for i in order], [vectors[i] for i in order], notes


def w0_structure(vector: StateVector | None = None,
                 module: HighestWeightModule | None = None) -> W0Structure:
    """Matrix and eigen-data of Wt_0 on span(v_s, v_s'); optionally act on one vector of the span."""
    module = module or vacuum_module(AlgebraConfig.CENTRAL_CHARGE)
    pair = reference_vectors(module)
    images = [_span_coordinates(module.apply_mode(W0, v), pair) for v in pair]
    matrix = RatMatrix.from_columns(images, 2)
    eigenvalues, eigenvectors, notes = _eigen_data(matrix)

    product = matrix[0, 1] * matrix[1, 0]
    notes.append(
        f"Wt_0 v_s = {format_rational(matrix[1, 0])} v_s', "
        f"Wt_0 v_s' = {format_rational(matrix[0, 1])} v_s, Wt_0^2 = {format_rational(product)} on the span"
    )
    if eigenvalues and abs(eigenvalues[0]) != 6:
        notes.append(
            "eigenvalues are +-" + format_rational(abs(eigenvalues[0]))
            + "; a stated eigenvalue pair +-6 on 6 v_s +- 98/27 v_s' does not survive"
              " composing Wt_0 v_s with Wt_0 v_s'"
        )
        warn(notes[-1])
    info(f"Wt_0 on span(v_s, v_s'): char poly computed, eigenvalues {[str(x) for x in eigenvalues]}")

    structure = W0Structure(matrix=matrix, eigenvalues=eigenvalues, eigenvectors=eigenvectors, notes=notes)
    if vector is not None:
        coordinates = _span_coordinates(vector, pair)
        structure.input_coordinates = coordinates
        structure.input_image = tuple(matrix.apply(coordinates))
    return structure


@dataclass
class NonSingularWitness:
    """A positive mode with nonzero image on a vector of the Verma module."""

    name: str
    mode: ModeSymbol | None
    image: StateVector | None
    vanishes_in_quotient: bool

    @property
    def passed(self) -> bool:
        return self.mode is not None and self.vanishes_in_quotient

    def to_dict(self) -> dict:
        return {
            "vector": self.name,
            "mode": str(self.mode) if self.mode else None,
            "image": format_vector(self.image) if self.image is not None else None,
            "vanishesInQuotient": self.vanishes_in_quotient,
        }


def verify_not_verma_singular(modes: Sequence[ModeSymbol] | None = None,
                              c=None) -> list[NonSingularWitness]:
    """Witness modes acting nonzero on v_s and v_s' inside M(0,0), zero in the quotient."""
    c = AlgebraConfig.CENTRAL_CHARGE if c is None else c
    modes = list(modes) if modes is not None else checked_modes()
    verma = verma_module(0, 0, c)
    vacuum = vacuum_module(c)
    witnesses = []
    for name, in_verma, in_vacuum in zip(("v_s", "v_s'"), reference_vectors(verma), reference_vectors(vacuum)):
        witness_mode, witness_image = None, None
        for mode in modes:
            image = verma.apply_mode(mode, in_verma)
            if not image.is_zero():
                witness_mode, witness_image = mode, image
                break
        vanishes = all(vacuum.apply_mode(mode, in_vacuum).is_zero() for mode in modes)
        witnesses.append(NonSingularWitness(name, witness_mode, witness_image, vanishes))
        info(f"{name}: Verma witness {witness_mode}, quotient images vanish: {vanishes}")
    return witnesses
