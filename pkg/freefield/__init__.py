"""
Free-field realizations of W3 at c = -2.

Components:
- boson: Heisenberg Fock spaces H^alpha
- fermion: the bc system and its charge grading
- realized: L, Wt and j modes built from oscillators on either side
- verify: highest weights, W3 relations and the boson-fermion check
"""

from .boson import BosonFock, BosonState
from .fermion import FermionFock, FermionState, VACUUM_KEY
from .realized import (
    RealizedMode,
    TruncationError,
    boson_terms,
    fermion_terms,
    boson_apply,
    fermion_apply,
    realized_act,
    apply_word,
)
from .verify import (
    highest_weight,
    relation_pairs,
    verify_w3_relations,
    W3RelationsReport,
    Bosonization,
    bosonization_map,
    verify_bosonization,
    BosonizationReport,
    charge_decomposition,
)

__all__ = [
    # Fock spaces
    "BosonFock",
    "BosonState",
    "FermionFock",
    "FermionState",
    "VACUUM_KEY",
    # Realized modes
    "RealizedMode",
    "TruncationError",
    "boson_terms",
    "fermion_terms",
    "boson_apply",
    "fermion_apply",
    "realized_act",
    "apply_word",
    # Checks
    "highest_weight",
    "relation_pairs",
    "verify_w3_relations",
    "W3RelationsReport",
    "Bosonization",
    "bosonization_map",
    "verify_bosonization",
    "BosonizationReport",
    "charge_decomposition",
]
