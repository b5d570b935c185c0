"""Shared pytest setup for the w3 engine tests.

- Puts the project root on sys.path so packages import from a checkout.
- Supplies minimal dotenv/rich stand-ins only when those packages are
  missing, so the exact-arithmetic suites run in lean environments.
"""

from __future__ import annotations

import sys
from pathlib import Path
from types import ModuleType
from typing import Any

import pytest


PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))


# --- dotenv stub (utils.config imports python-dotenv) ---
try:
    import dotenv  # noqa: F401
except ImportError:
    dotenv_stub = ModuleType("dotenv")

    def load_dotenv(*args: Any, **kwargs: Any) -> None:  # pragma: no cover
        return None

    dotenv_stub.load_dotenv = load_dotenv  # type: ignore[attr-defined]
    sys.modules["dotenv"] = dotenv_stub


# --- rich stub (utils.logger and w3.py import rich) ---
try:
    import rich.console  # noqa: F401
    import rich.table  # noqa: F401
except ImportError:
    rich_stub = ModuleType("rich")
    rich_console = ModuleType("rich.console")
    rich_table = ModuleType("rich.table")

    class Console:  # pragma: no cover
        def __init__(self, *args: Any, **kwargs: Any) -> None:
            return None

        def log(self, *args: Any, **kwargs: Any) -> None:
            return None

        def print(self, *args: Any, **kwargs: Any) -> None:
            return None

    class Table:  # pragma: no cover
        def __init__(self, *args: Any, **kwargs: Any) -> None:
            return None

        def add_column(self, *args: Any, **kwargs: Any) -> None:
            return None

        def add_row(self, *args: Any, **kwargs: Any) -> None:
            return None

    rich_console.Console = Console  # type: ignore[attr-defined]
    rich_table.Table = Table  # type: ignore[attr-defined]
    sys.modules["rich"] = rich_stub
    sys.modules["rich.console"] = rich_console
    sys.modules["rich.table"] = rich_table


@pytest.fixture(scope="session")
def vacuum():
    """Vacuum module at c = -2."""
    from w3core import vacuum_module

    return vacuum_module(-2)


@pytest.fixture(scope="session")
def singular_pair(vacuum):
    """(v_s, v_s') in the vacuum module."""
    from singvec import reference_vectors

    return reference_vectors(vacuum)


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: full-range verification sweeps")
