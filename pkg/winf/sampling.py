"""
Seeded random elements of HD and the bracket-axiom check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from config import WinfConfig
from utils.logger import info, warn

from .diffop import D_RING, DiffOp, bracket, d_poly, in_parabolic, basis_J


def random_coefficient(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))


def random_diffop(rng: np.random.Generator, max_grade: int | None = None,
                  max_degree: int | None = None, max_terms: int | None = None) -> DiffOp:
    """Up to max_terms grades in [-max_grade, max_grade], each with a degree <= max_degree polynomial."""
    max_grade = WinfConfig.MAX_GRADE if max_grade is None else max_grade
    max_degree = WinfConfig.MAX_DEGREE if max_degree is None else max_degree
    max_terms = WinfConfig.MAX_TERMS if max_terms is None else max_terms
    terms = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        r = int(rng.integers(-max_grade, max_grade + 1))
        degree = int(rng.integers(0, max_degree + 1))
        p = d_poly([random_coefficient(rng) for _ in range(degree + 1)])
        terms[r] = terms.get(r, D_RING.zero) + p
    return DiffOp.build(terms)


def random_parabolic(rng: np.random.Generator, max_grade: int | None = None,
                     max_degree: int | None = None) -> DiffOp:
    """Random combination of J^l_k with l + k >= 0."""
    max_grade = WinfConfig.MAX_GRADE if max_grade is None else max_grade
    max_degree = WinfConfig.MAX_DEGREE if max_degree is None else max_degree
    total = DiffOp()
    for _ in range(2):
        k = int(rng.integers(-max_grade, max_grade + 1))
        l = int(rng.integers(max(0, -k), max(0, -k) + max_degree + 1))
        total = total + basis_J(l, k).scale(random_coefficient(rng))
    return total


@dataclass
class BracketAxiomReport:
    samples: int
    seed: int
    max_grade: int
    max_degree: int
    antisymmetry_failures: int = 0
    jacobi_failures: int = 0
    grading_failures: int = 0
    parabolic_failures: int = 0
    examples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.antisymmetry_failures or self.jacobi_failures
                    or self.grading_failures or self.parabolic_failures)

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "maxGrade": self.max_grade,
            "maxDegree": self.max_degree,
            "antisymmetryFailures": self.antisymmetry_failures,
            "jacobiFailures": self.jacobi_failures,
            "gradingFailures": self.grading_failures,
            "parabolicFailures": self.parabolic_failures,
            "examples": self.examples,
            "passed": self.passed,
        }


def jacobi_sum(x: DiffOp, y: DiffOp, z: DiffOp) -> DiffOp:
    return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)


def _grading_holds(x: DiffOp, y: DiffOp) -> bool:
    for r, f in x.terms:
        for s, g in y.terms:
            product = bracket(DiffOp.monomial(r, f), DiffOp.monomial(s, g))
            if any(grade != r + s for grade in product.grades()):
                return False
            if product.central and r + s != 0:
                return False
    return True


def check_bracket_axioms(samples: int | None = None, seed: int | None = None,
                         max_grade: int | None = None, max_degree: int | None = None) -> BracketAxiomReport:
    """Antisymmetry, Jacobi with the cocycle, grading and closure of the parabolic part."""
    samples = WinfConfig.SAMPLES if samples is None else samples
    seed = WinfConfig.SEED if seed is None else seed
    max_grade = WinfConfig.MAX_GRADE if max_grade is None else max_grade
    max_degree = WinfConfig.MAX_DEGREE if max_degree is None else max_degree
    rng = np.random.default_rng(seed)
    report = BracketAxiomReport(samples, seed, max_grade, max_degree)

    for i in range(samples):
        x, y, z = (random_diffop(rng, max_grade, max_degree) for _ in range(3))
        if bracket(x, y) != -bracket(y, x):
            report.antisymmetry_failures += 1
            report.examples.append(f"antisymmetry #{i}: {x} , {y}")
        if not jacobi_sum(x, y, z).is_zero():
            report.jacobi_failures += 1
            report.examples.append(f"jacobi #{i}")
        if not _grading_holds(x, y):
            report.grading_failures += 1
        p, q = random_parabolic(rng, max_grade, max_degree), random_parabolic(rng, max_grade, max_degree)
        if not in_parabolic(bracket(p, q)):
            report.parabolic_failures += 1

    if report.passed:
        info(f"HD bracket axioms hold on {samples} samples (seed {seed})")
    else:
        warn(f"HD bracket axioms failed: {report.to_dict()}")
    return report
