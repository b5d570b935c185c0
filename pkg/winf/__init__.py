"""
W_{1+inf}: differential operators on the circle and related bookkeeping.

Components:
- diffop: HD elements, bracket, cocycle, J and L bases, grading
- dsr: Drinfeld-Sokolov central charges
- classify: (alpha, s) module labels
- sampling: seeded random elements and the bracket-axiom check
"""

from .diffop import (
    D_RING,
    D,
    DiffOp,
    d_poly,
    shift,
    falling_factorial,
    format_d_poly,
    bracket,
    cocycle,
    basis_J,
    basis_L,
    to_L_basis,
    to_J_basis,
    from_L_basis,
    from_J_basis,
    J_in_L_basis,
    graded_components,
    triangular_parts,
    in_parabolic,
)
from .dsr import (
    dsr_central_charge,
    dsr_central_charge_pq,
    dual_level,
    boundary_levels,
    dsr_report,
    DsrReport,
)
from .classify import ModuleLabel, classify, canonical_label, coincidence_sweep, CoincidenceReport
from .sampling import random_diffop, random_parabolic, check_bracket_axioms, jacobi_sum, BracketAxiomReport

__all__ = [
    # Operators
    "D_RING",
    "D",
    "DiffOp",
    "d_poly",
    "shift",
    "falling_factorial",
    "format_d_poly",
    "bracket",
    "cocycle",
    # Bases
    "basis_J",
    "basis_L",
    "to_L_basis",
    "to_J_basis",
    "from_L_basis",
    "from_J_basis",
    "J_in_L_basis",
    # Grading
    "graded_components",
    "triangular_parts",
    "in_parabolic",
    # Central charges
    "dsr_central_charge",
    "dsr_central_charge_pq",
    "dual_level",
    "boundary_levels",
    "dsr_report",
    "DsrReport",
    # Labels
    "ModuleLabel",
    "classify",
    "canonical_label",
    "coincidence_sweep",
    "CoincidenceReport",
    # Sampling
    "random_diffop",
    "random_parabolic",
    "check_bracket_axioms",
    "jacobi_sum",
    "BracketAxiomReport",
]
