"""
Pydantic report model and canonical JSON output.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field
from sympy.polys.rings import PolyElement

from config import ReportConfig
from exact.poly import POLY_RING, format_poly
from exact.rational import format_rational
from utils.logger import info
from w3core.states import StateVector, format_vector
from winf.diffop import format_d_poly


def jsonable(value: Any) -> Any:
    """Canonical text for exact values; recursive on containers and to_dict objects."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, PolyElement):
        return format_poly(value) if value.ring == POLY_RING else format_d_poly(value)
    if isinstance(value, StateVector):
        return format_vector(value)
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


class Report(BaseModel):
    """One command run: echoed inputs, results and the pass flag."""

    model_config = ConfigDict(populate_by_name=True)

    command: str = Field(description="Subcommand path, e.g. 'zhu curve'")
    inputs: dict[str, Any] = Field(default_factory=dict, description="Parsed arguments")
    results: dict[str, Any] = Field(default_factory=dict, description="Command payload")
    exact: bool = Field(default=True, description="All arithmetic is exact")
    engine_version: str = Field(default=ReportConfig.ENGINE_VERSION, alias="engineVersion")
    passed: bool = Field(default=True, description="False when a verification failed")

    @classmethod
    def build(cls, command: str, inputs: dict, results: dict, passed: bool = True) -> "Report":
        return cls(command=command, inputs=jsonable(inputs), results=jsonable(results), passed=passed)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(by_alias=True), sort_keys=True, indent=ReportConfig.INDENT)

    @property
    def file_name(self) -> str:
        return self.command.replace(" ", "-") + ".json"

    def write(self, directory: Path | str | None = None) -> Path:
        target = Path(directory) if directory is not None else ReportConfig.REPORT_DIR
        target.mkdir(parents=True, exist_ok=True)
        path = target / self.file_name
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        info(f"report written to {path}")
        return path
