"""
Logging module - Rich console on stderr + runtime.log.

Stdout is left to JSON reports. `check` and `timed` are for verification
runs: one line per check outcome, durations in the file log only.
"""
import logging
import time
from contextlib import contextmanager
from pathlib import Path
from rich.console import Console

from .config import LOG_DIR, LOG_LEVEL

console = Console(stderr=True)

Path(LOG_DIR).mkdir(parents=True, exist_ok=True)

logging.basicConfig(
    filename=str(LOG_DIR / "runtime.log"),
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s | %(levelname)s | %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

log = logging.getLogger("w3-engine")


def _emit(level: int, msg: str, style: str | None = None):
    log.log(level, msg)
    console.log(f"[{style}]{msg}[/{style}]" if style else msg)


def info(msg: str):
    """Log info message to both console and file."""
    _emit(logging.INFO, msg)


def warn(msg: str):
    """Log warning message to both console and file."""
    _emit(logging.WARNING, msg, "yellow")


def error(msg: str):
    _emit(logging.ERROR, msg, "red")


def success(msg: str):
    _emit(logging.INFO, msg, "green")


def debug(msg: str):
    """File only."""
    log.debug(msg)


def check(name: str, passed: bool):
    """One PASS/FAIL line for a verification."""
    if passed:
        success(f"✅ {name}: PASS")
    else:
        error(f"❌ {name}: FAIL")


@contextmanager
def timed(label: str):
    start = time.perf_counter()
    try:
        yield
    finally:
        debug(f"{label} took {time.perf_counter() - start:.2f}s")
