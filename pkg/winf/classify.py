"""
Labels of irreducible W_{1+inf} modules at c = -1.

Such a module is a W3(c = -2) module tensored with a Heisenberg module, so it
carries a pair (alpha, s). H^0 and H^1 give the same W3 module; alpha = 1 is
excluded and mapped to alpha = 0 by canonical_label.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from config import AlgebraConfig, WinfConfig
from exact.poly import Poly, format_poly
from exact.rational import Rational, as_rational, format_rational
from zhu.curve import weight_from_alpha, weights_coincide


@dataclass(frozen=True)
class ModuleLabel:
    alpha: Rational
    s: Rational

    def __post_init__(self):
        alpha, s = as_rational(self.alpha), as_rational(self.s)
        if alpha == 1:
            raise ValueError("alpha = 1 labels the same module as alpha = 0; use alpha = 0")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "s", s)

    @property
    def w3_weight(self) -> tuple[Poly, Poly]:
        return weight_from_alpha(self.alpha)

    @property
    def is_vacuum(self) -> bool:
        return self.alpha == 0 and self.s == 0

    def to_dict(self) -> dict:
        t, w = self.w3_weight
        return {
            "alpha": format_rational(self.alpha),
            "s": format_rational(self.s),
            "t": format_poly(t),
            "w": format_poly(w),
            "heisenbergCharge": format_rational(self.s),
            "centralCharge": format_rational(AlgebraConfig.WINF_CENTRAL_CHARGE),
        }


def classify(alpha, s) -> ModuleLabel:
    return ModuleLabel(alpha, s)


def canonical_label(alpha, s) -> ModuleLabel:
    alpha = as_rational(alpha)
    return ModuleLabel(0 if alpha == 1 else alpha, s)


# ============================================================================
# COINCIDENCE SWEEP
# ============================================================================
@dataclass
class CoincidenceReport:
    samples: int
    seed: int
    zero_one_coincide: bool = False
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.zero_one_coincide and not self.failures

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "zeroOneCoincide": self.zero_one_coincide,
            "failures": self.failures,
            "passed": self.passed,
        }


def random_alpha(rng: np.random.Generator) -> Rational:
    return as_rational(f"{int(rng.integers(-20, 21))}/{int(rng.integers(1, 8))}")


def coincidence_sweep(samples: int = 200, seed: int | None = None) -> CoincidenceReport:
    """Equal weights occur only for {alpha, alpha'} = {0, 1} or alpha = alpha'."""
    seed = WinfConfig.SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    report = CoincidenceReport(samples, seed, weights_coincide(0, 1))
    checked = 0
    while checked < samples:
        alpha = random_alpha(rng)
        if alpha in (0, 1):
            continue
        other = random_alpha(rng)
        checked += 1
        for partner in (1 - alpha, other):
            expected = partner == alpha
            if weights_coincide(alpha, partner) != expected:
                report.failures.append(f"{format_rational(alpha)} vs {format_rational(partner)}")
    return report
