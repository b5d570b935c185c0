"""
Engine Configuration
Centralized settings for the algebra, singular-vector, Zhu, free-field
and W_{1+inf} subsystems. Every value can be overridden from .env.
"""
import os
from fractions import Fraction
from pathlib import Path
from typing import Literal

# Load environment variables
from dotenv import load_dotenv
load_dotenv()

ENGINE_VERSION = "1.0.0"

ReductionStrategy = Literal["peel", "star"]


# ============================================================================
# W3 ALGEBRA
# ============================================================================
class AlgebraConfig:
    """Central charges of the two algebras."""

    CENTRAL_CHARGE = Fraction(os.getenv("W3_CENTRAL_CHARGE", "-2"))
    WINF_CENTRAL_CHARGE = Fraction(os.getenv("W3_WINF_CENTRAL_CHARGE", "-1"))


# ============================================================================
# SINGULAR VECTORS
# ============================================================================
class SingularConfig:
    """Positive modes used to test singularity."""

    MAX_LEVEL = int(os.getenv("W3_SINGULAR_MAX_LEVEL", "6"))

    # (family, index): L_1, L_2 and Wt_1 generate every positive mode
    GENERATING_MODES = (("L", 1), ("L", 2), ("Wt", 1))
    # Wt_2 is implied by the generators; kept as a cross-check
    REDUNDANT_MODES = (("Wt", 2),)


# ============================================================================
# ZHU ALGEBRA
# ============================================================================
class ZhuConfig:
    """Reduction settings."""

    DEFAULT_STRATEGY: ReductionStrategy = os.getenv("W3_ZHU_STRATEGY", "peel")  # type: ignore[assignment]
    IDEAL_MAX_WEIGHT = int(os.getenv("W3_ZHU_IDEAL_MAX_WEIGHT", "6"))
    COMMUTATIVITY_MAX_WEIGHT = int(os.getenv("W3_ZHU_COMMUTATIVITY_MAX_WEIGHT", "4"))


# ============================================================================
# FREE FIELDS
# ============================================================================
class FreeFieldConfig:
    """Level and index ranges for the realization checks."""

    MAX_LEVEL = int(os.getenv("W3_FF_MAX_LEVEL", "4"))
    MAX_INDEX = int(os.getenv("W3_FF_MAX_INDEX", "3"))
    BOSONIZATION_MAX_INDEX = int(os.getenv("W3_FF_BOSONIZATION_MAX_INDEX", "2"))
    # memo of fermion-bilinear images per (symbol, index, basis key)
    FERMION_CACHE_SIZE = int(os.getenv("W3_FF_FERMION_CACHE_SIZE", "65536"))


# ============================================================================
# W_{1+inf}
# ============================================================================
class WinfConfig:
    """Random sampling for the bracket axioms."""

    SAMPLES = int(os.getenv("W3_WINF_SAMPLES", "100"))
    SEED = int(os.getenv("W3_SEED", "0"))
    MAX_DEGREE = int(os.getenv("W3_WINF_MAX_DEGREE", "4"))
    MAX_GRADE = int(os.getenv("W3_WINF_MAX_GRADE", "4"))
    MAX_TERMS = int(os.getenv("W3_WINF_MAX_TERMS", "2"))


# ============================================================================
# REPORTS
# ============================================================================
class ReportConfig:
    """JSON report output."""

    ENGINE_VERSION = ENGINE_VERSION
    REPORT_DIR = Path(os.getenv("REPORT_DIR", "./reports"))
    INDENT = 2
