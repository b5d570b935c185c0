"""
W3 mode algebra and its highest-weight modules.

Components:
- modes: ModeSymbol (L, Wt) and AlgebraParams (c, beta)
- commutator: relations as ModeExpr operator expressions
- states: PBWMonomial, StateVector, vector printing
- lambda_op: Lambda_m and expression action, generic over the acting space
- module: VacuumModule, VermaModule, PBW rewriting
- relations: bracket and Jacobi defects of the rewriting engine
"""

from .modes import ModeSymbol, AlgebraParams, L, Wt
from .commutator import ModeExpr, commutator
from .states import PBWMonomial, StateVector, format_vector
from .lambda_op import lambda_terms, lambda_apply, apply_expr
from .module import (
    ModuleMismatchError,
    HighestWeightModule,
    VacuumModule,
    VermaModule,
    vacuum_module,
    verma_module,
    graded_basis,
    apply_mode,
)
from .relations import bracket_defect, jacobi_defect, generators, antisymmetry_failures, jacobi_failures

__all__ = [
    # Modes
    "ModeSymbol",
    "AlgebraParams",
    "L",
    "Wt",
    # Relations
    "ModeExpr",
    "commutator",
    "lambda_terms",
    "lambda_apply",
    "apply_expr",
    "bracket_defect",
    "jacobi_defect",
    "generators",
    "antisymmetry_failures",
    "jacobi_failures",
    # States and modules
    "PBWMonomial",
    "StateVector",
    "format_vector",
    "ModuleMismatchError",
    "HighestWeightModule",
    "VacuumModule",
    "VermaModule",
    "vacuum_module",
    "verma_module",
    "graded_basis",
    "apply_mode",
]
