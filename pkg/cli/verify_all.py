"""
The full acceptance suite behind `w3 verify-all`.

Each check returns a CheckResult; the suite never stops at the first failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from config import FreeFieldConfig, WinfConfig, ZhuConfig
from exact.poly import ALPHA, poly_substitute
from freefield import highest_weight, verify_bosonization, verify_w3_relations
from singvec import find_singular, reference_vectors, verify_not_verma_singular, w0_structure
from utils.logger import check, info, timed
from w3core.module import vacuum_module
from winf import boundary_levels, check_bracket_axioms, coincidence_sweep, dsr_central_charge
from zhu import (
    CURVE,
    STRATEGIES,
    curve_poly,
    ideal_failures,
    reduce_to_poly,
    reduce_via_zero_mode,
    weight_from_alpha,
)

from .expressions import parse_vector


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def check_no_low_singular() -> CheckResult:
    dims = {level: find_singular(level).kernel_dim for level in range(1, 6)}
    return CheckResult("no singular vectors below level 6", all(d == 0 for d in dims.values()),
                       {"kernelDims": dims})


def check_level_six_pair() -> CheckResult:
    report = find_singular(6)
    passed = report.kernel_dim == 2 and report.normalized_to_reference
    return CheckResult("level-6 singular pair", passed, report.to_dict())


def check_w0_structure() -> CheckResult:
    structure = w0_structure()
    passed = structure.matrix[1, 0] == Fraction(98, 27)
    return CheckResult("Wt_0 on the singular pair", passed, structure.to_dict())


def check_verma_non_singular() -> CheckResult:
    witnesses = verify_not_verma_singular()
    return CheckResult("not singular in M(0,0)", all(w.passed for w in witnesses),
                       {"witnesses": [w.to_dict() for w in witnesses]})


def check_zhu_images() -> CheckResult:
    details = {}
    passed = True
    for strategy in STRATEGIES:
        ideal, (image, image_prime) = curve_poly(strategy)
        details[strategy] = [str(image), str(image_prime)]
        passed &= image.value == ideal.generator and not image_prime.value
    zero_images = [reduce_via_zero_mode(v) for v in reference_vectors(vacuum_module(-2))]
    details["zeroMode"] = [str(z) for z in zero_images]
    passed &= zero_images[0].value == CURVE and not zero_images[1].value
    return CheckResult("Zhu images of the singular vectors", passed, details)


def check_zhu_generators() -> CheckResult:
    expected = {"L(-2)vac": "t", "Wt(-3)vac": "w", "L(-3)vac": "-2*t"}
    images = {text: str(reduce_to_poly(parse_vector(text))) for text in expected}
    return CheckResult("Zhu generators", images == expected, {"images": images})


def check_ideal() -> CheckResult:
    failures = ideal_failures(ZhuConfig.IDEAL_MAX_WEIGHT)
    return CheckResult("O(V) maps to zero", not failures,
                       {"maxWeight": ZhuConfig.IDEAL_MAX_WEIGHT, "failures": failures})


def check_curve_parametrization() -> CheckResult:
    t, w = weight_from_alpha(ALPHA)
    on_curve = not poly_substitute(CURVE, {"t": t, "w": w})
    matches = highest_weight(ALPHA) == (t, w)
    return CheckResult("curve parametrized by alpha", on_curve and matches,
                       {"t": t, "w": w, "onCurve": on_curve, "freeFieldMatches": matches})


def check_w3_relations() -> CheckResult:
    report = verify_w3_relations(FreeFieldConfig.MAX_LEVEL, 0, FreeFieldConfig.MAX_INDEX)
    return CheckResult("free-field W3 relations", report.passed, report.to_dict())


def check_bosonization() -> CheckResult:
    report = verify_bosonization(FreeFieldConfig.MAX_LEVEL, FreeFieldConfig.BOSONIZATION_MAX_INDEX)
    return CheckResult("boson-fermion correspondence", report.passed, report.to_dict())


def check_cocycle(seed: int) -> CheckResult:
    report = check_bracket_axioms(WinfConfig.SAMPLES, seed)
    return CheckResult("HD bracket and cocycle", report.passed, report.to_dict())


def check_dsr() -> CheckResult:
    values = {"-3/2": dsr_central_charge(3, Fraction(-3, 2)), "-7/3": dsr_central_charge(3, Fraction(-7, 3))}
    boundary = {n: [dsr_central_charge(n, k) for k in boundary_levels(n)] for n in range(2, 11)}
    passed = all(v == -2 for v in values.values()) and all(
        c == -2 for pair in boundary.values() for c in pair
    )
    return CheckResult("Drinfeld-Sokolov central charges", passed, {
        "c3": values,
        "boundary": boundary,
        "quotedLevel": {"-7/2": dsr_central_charge(3, Fraction(-7, 2))},
    })


def check_isomorphism(seed: int) -> CheckResult:
    report = coincidence_sweep(200, seed)
    zero = weight_from_alpha(0) == weight_from_alpha(1) and not any(weight_from_alpha(0))
    return CheckResult("only V_0 = V_1 coincide", report.passed and zero, report.to_dict())


def run_all(seed: int | None = None) -> list[CheckResult]:
    seed = WinfConfig.SEED if seed is None else seed
    checks: list[Callable[[], CheckResult]] = [
        check_no_low_singular,
        check_level_six_pair,
        check_w0_structure,
        check_verma_non_singular,
        check_zhu_images,
        check_zhu_generators,
        check_ideal,
        check_curve_parametrization,
        check_w3_relations,
        check_bosonization,
        lambda: check_cocycle(seed),
        check_dsr,
        lambda: check_isomorphism(seed),
    ]
    results = []
    for number, run_check in enumerate(checks, start=1):
        with timed(f"check {number}"):
            result = run_check()
        results.append(result)
        check(f"[{number}/{len(checks)}] {result.name}", result.passed)
    info(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return results
