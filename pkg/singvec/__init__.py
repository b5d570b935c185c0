"""
Singular vectors of the W3 vacuum module.

Components:
- reference: v_s and v_s' as stored word combinations
- detector: positive-action matrices, kernels, full sweeps
- w0: Wt_0 on the singular pair and the Verma non-singularity witness
"""

from .reference import reference_vectors, singular_vector, singular_vector_prime, SINGULAR_LEVEL
from .detector import (
    SingularReport,
    positive_action_matrix,
    find_singular,
    full_sweep,
    is_singular,
    generating_modes,
    checked_modes,
)
from .w0 import W0Structure, NonSingularWitness, w0_structure, verify_not_verma_singular

__all__ = [
    # Reference vectors
    "reference_vectors",
    "singular_vector",
    "singular_vector_prime",
    "SINGULAR_LEVEL",
    # Detection
    "SingularReport",
    "positive_action_matrix",
    "find_singular",
    "full_sweep",
    "is_singular",
    "generating_modes",
    "checked_modes",
    # Wt_0 structure
    "W0Structure",
    "NonSingularWitness",
    "w0_structure",
    "verify_not_verma_singular",
]
