"""
Engine configuration.

Components:
- engine_config: class-based settings per subsystem, env-overridable
"""

from .engine_config import (
    ENGINE_VERSION,
    AlgebraConfig,
    SingularConfig,
    ZhuConfig,
    FreeFieldConfig,
    WinfConfig,
    ReportConfig,
)

__all__ = [
    "ENGINE_VERSION",
    "AlgebraConfig",
    "SingularConfig",
    "ZhuConfig",
    "FreeFieldConfig",
    "WinfConfig",
    "ReportConfig",
]
