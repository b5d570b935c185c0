"""
Central charges of W_n obtained from affine sl_n at level k by quantum
Drinfeld-Sokolov reduction:

    c_n(k) = 2n^3 - n - 1 - n(n^2 - 1)(1/(k+n) + k + n)

With k + n = p/q this is (n-1)(1 - n(n+1)(p-q)^2/(pq)). The value is invariant
under k + n -> 1/(k + n), and both boundary levels k + n = n/(n-1) and
k + n = (n-1)/n give c = -2 for every n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from exact.rational import as_rational, format_rational


def _check_rank(n: int) -> None:
    if n < 2:
        raise ValueError(f"W_n needs n >= 2, got {n}")


def dsr_central_charge(n: int, k) -> Fraction:
    _check_rank(n)
    k = as_rational(k)
    x = k + n
    if x == 0:
        raise ValueError(f"critical level k = {-n}: c_n(k) has a pole")
    return 2 * n ** 3 - n - 1 - n * (n ** 2 - 1) * (1 / x + x)


def dsr_central_charge_pq(n: int, p: int, q: int) -> Fraction:
    """c_n at k = -n + p/q."""
    _check_rank(n)
    if p == 0 or q == 0:
        raise ValueError("p and q must be nonzero")
    return (n - 1) * (1 - Fraction(n * (n + 1) * (p - q) ** 2, p * q))


def dual_level(n: int, k) -> Fraction:
    """The level k' with (k + n)(k' + n) = 1."""
    x = as_rational(k) + n
    if x == 0:
        raise ValueError("the critical level has no dual")
    return -n + 1 / x


def boundary_levels(n: int) -> tuple[Fraction, Fraction]:
    """k = -n + n/(n-1) and k = -n + (n-1)/n."""
    _check_rank(n)
    return -n + Fraction(n, n - 1), -n + Fraction(n - 1, n)


# ============================================================================
# REPORT
# ============================================================================
# The level -7/2 is quoted alongside -3/2 as a c = -2 point for W_3, but
# -3 + 3/2 = -3/2 and -3 + 2/3 = -7/3; at -7/2 the formula gives 110.
QUOTED_LEVEL = Fraction(-7, 2)


@dataclass
class DsrReport:
    n: int
    k: Fraction
    central_charge: Fraction
    dual: Fraction
    boundary: dict[int, tuple[Fraction, Fraction]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def universal(self) -> bool:
        return all(a == b == -2 for a, b in self.boundary.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": format_rational(self.k),
            "centralCharge": format_rational(self.central_charge),
            "dualLevel": format_rational(self.dual),
            "boundary": {str(n): [format_rational(a), format_rational(b)]
                         for n, (a, b) in self.boundary.items()},
            "universalMinusTwo": self.universal,
            "notes": self.notes,
        }


def dsr_report(n: int, k, boundary_range: range = range(2, 11)) -> DsrReport:
    k = as_rational(k)
    report = DsrReport(n, k, dsr_central_charge(n, k), dual_level(n, k))
    for m in boundary_range:
        first, second = boundary_levels(m)
        report.boundary[m] = (dsr_central_charge(m, first), dsr_central_charge(m, second))
    if n == 3:
        quoted = dsr_central_charge(3, QUOTED_LEVEL)
        report.notes.append(
            f"c_3 at k = -3/2 and k = -7/3 is -2; the quoted level -7/2 gives {format_rational(quoted)}"
        )
    return report
