"""
Utility module.

Components:
- config: Environment variable loading and paths
- logger: Rich console + file logging
"""

from .config import LOG_DIR, LOG_LEVEL
from .logger import info, warn, error, success, debug, check, timed

__all__ = [
    # Config
    "LOG_DIR",
    "LOG_LEVEL",
    # Logger
    "info",
    "warn",
    "error",
    "success",
    "debug",
    "check",
    "timed",
]
