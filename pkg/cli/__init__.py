"""
Command-line front end.

Components:
- expressions: vector expression parser and printer
- reports: pydantic Report and canonical JSON
- commands: argparse tree and handlers
- verify_all: the acceptance suite
"""

from .expressions import ExpressionSyntaxError, parse_vector, format_vector
from .reports import Report, jsonable
from .commands import build_parser, run, parse_alpha, attach_dash_values
from .verify_all import CheckResult, run_all

__all__ = [
    # Expressions
    "ExpressionSyntaxError",
    "parse_vector",
    "format_vector",
    # Reports
    "Report",
    "jsonable",
    # Commands
    "build_parser",
    "run",
    "parse_alpha",
    "attach_dash_values",
    "CheckResult",
    "run_all",
]
