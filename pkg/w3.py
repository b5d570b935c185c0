"""
w3 - exact W3 / W_{1+inf} computations from the command line.

Usage:
    python w3.py sing --level 6 --w0 --json
    python w3.py zhu curve --json
    python w3.py curve weights --alpha 2 --json
    python w3.py ff verify --max-level 4 --bosonization
    python w3.py winf dsr --n 3 --k -3/2 --json
    python w3.py verify-all --seed 0

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from rich.table import Table

from cli.commands import run
from cli.reports import Report
from utils.logger import console, error


def print_table(report: Report) -> None:
    """Human-readable view of the results payload."""
    table = Table(title=f"w3 {report.command}", show_header=True)
    table.add_column("Key", style="cyan")
    table.add_column("Value")
    for key, value in sorted(report.results.items()):
        table.add_row(key, str(value))
    table.add_row("passed", "[green]yes[/green]" if report.passed else "[red]no[/red]")
    console.print(table)


def main(argv=None) -> int:
    try:
        report, args = run(argv)
    except ValueError as e:
        # malformed expressions, rationals and excluded labels
        error(f"❌ {e}")
        return 2

    if args.json:
        print(report.to_json())
    else:
        print_table(report)
    if args.output:
        report.write(args.output)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
