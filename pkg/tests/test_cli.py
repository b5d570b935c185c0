"""pytest suite for the w3 command line: expressions, reports and exit codes."""

from __future__ import annotations

import json
import logging
from fractions import Fraction

import pytest

import w3
from cli import (
    ExpressionSyntaxError,
    Report,
    attach_dash_values,
    format_vector,
    jsonable,
    parse_vector,
    run,
)
from utils.logger import check, timed
from w3core import L, Wt


def test_parse_simple_terms(vacuum) -> None:
    """Coefficients, optional '*', leading sign and the zero vector."""
    expected = vacuum.from_word([Wt(-3), Wt(-3)]) - vacuum.from_word([L(-2)], Fraction(19, 36))
    assert parse_vector("Wt(-3)Wt(-3)vac - 19/36*L(-2)vac") == expected
    assert parse_vector("Wt(-3)Wt(-3)vac - 19/36 L(-2)vac") == expected
    assert parse_vector("-L(-2)vac") == vacuum.from_word([L(-2)], -1)
    assert parse_vector("0").is_zero()
    assert parse_vector("vac") == vacuum.top()


def test_parse_reorders_words(vacuum) -> None:
    """Non-PBW words are normal-ordered on input."""
    assert parse_vector("Wt(-3)L(-2)vac") == parse_vector("L(-2)Wt(-3)vac + Wt(-5)vac")
    assert parse_vector("L(0)L(-2)vac") == parse_vector("2*L(-2)vac")


def test_print_parse_round_trip(singular_pair) -> None:
    """The printer emits text the parser reads back exactly."""
    for v in singular_pair:
        assert parse_vector(format_vector(v)) == v


@pytest.mark.parametrize(
    "text",
    ["", "L(-2)", "L(2)vac", "X(-1)vac", "L(-2)vac +", "L(-1/2)vac", "L(-2)vac $"],
)
def test_malformed_expressions(text: str) -> None:
    """Parse errors are ValueErrors carrying a character position."""
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_vector(text)
    assert info.value.position >= 0


def test_report_json_is_canonical() -> None:
    """Sorted keys, camelCase engineVersion, exact values as text."""
    report = Report.build("winf dsr", {"k": Fraction(-3, 2)}, {"centralCharge": Fraction(-2)})
    payload = json.loads(report.to_json())
    assert list(payload) == sorted(payload)
    assert "engineVersion" in payload
    assert payload["inputs"] == {"k": "-3/2"}
    assert payload["results"]["centralCharge"] == "-2"
    assert payload["exact"] is True
    assert report.file_name == "winf-dsr.json"


def test_jsonable_renders_nested_values() -> None:
    """Fractions in containers become strings; bools and ints stay as they are."""
    assert jsonable({"a": [Fraction(1, 3), 2, True]}) == {"a": ["1/3", 2, True]}


def test_report_write(tmp_path) -> None:
    """--output writes <command>.json into the directory."""
    report = Report.build("zhu curve", {}, {"curve": "x"})
    path = report.write(tmp_path)
    assert path.name == "zhu-curve.json"
    assert json.loads(path.read_text(encoding="utf-8"))["command"] == "zhu curve"


def test_curve_weights_command() -> None:
    """alpha = 2 lands on (1, 1), which lies on the curve."""
    report, args = run(["curve", "weights", "--alpha", "2", "--json"])
    assert args.json
    assert report.results["t"] == "1"
    assert report.results["w"] == "1"
    assert report.results["onCurve"] is True


def test_curve_weights_symbolic() -> None:
    """The symbolic parameter yields polynomial weights and no curve test."""
    report, _ = run(["curve", "weights", "--alpha", "alpha"])
    assert "onCurve" not in report.results
    assert "alpha" in report.results["t"]


def test_sing_level_four_is_empty() -> None:
    """No singular vectors below level 6."""
    report, _ = run(["sing", "--level", "4"])
    assert report.results["kernelDim"] == 0
    assert report.passed


def test_zhu_curve_command() -> None:
    """The printed curve is the ideal generator."""
    report, _ = run(["zhu", "curve"])
    assert report.passed
    assert "w^2" in report.results["curve"]


def test_winf_dsr_command() -> None:
    report, _ = run(["winf", "dsr", "--k", "-3/2"])
    assert report.results["centralCharge"] == "-2"
    assert report.passed


def test_main_exit_codes(capsys) -> None:
    """0 on success with JSON on stdout, 2 on excluded labels and usage errors."""
    assert w3.main(["winf", "classify", "--alpha", "2", "--s", "0", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["results"]["t"] == "1"
    assert w3.main(["winf", "classify", "--alpha", "1", "--s", "0"]) == 2
    assert w3.main(["zhu", "reduce", "--vector", "L(2)vac"]) == 2
    with pytest.raises(SystemExit) as info:
        w3.main(["no-such-command"])
    assert info.value.code == 2


def test_check_and_timed_log_to_file_logger(caplog) -> None:
    """Check outcomes and durations reach the w3-engine logger."""
    with caplog.at_level(logging.DEBUG, logger="w3-engine"):
        with timed("sweep"):
            pass
        check("sample check", False)
    assert "sweep took" in caplog.text
    assert "sample check: FAIL" in caplog.text


def test_attach_dash_values() -> None:
    """Dash-leading values are glued to their option; flags and -h are left alone."""
    assert attach_dash_values(["winf", "dsr", "--k", "-3/2", "--json"]) == ["winf", "dsr", "--k=-3/2", "--json"]
    assert attach_dash_values(["--json", "-h"]) == ["--json", "-h"]
    assert attach_dash_values(["--k=-3/2"]) == ["--k=-3/2"]
    assert attach_dash_values(["--vector", "-L(-2)vac"]) == ["--vector=-L(-2)vac"]


@pytest.mark.parametrize(
    ("argv", "key", "expected"),
    [
        (["winf", "dsr", "--k", "-3/2"], "centralCharge", "-2"),
        (["winf", "dsr", "--n", "3", "--k", "-7/3"], "centralCharge", "-2"),
        (["winf", "classify", "--alpha", "-1/2", "--s", "-1/3"], "t", "3/8"),
        (["winf", "classify", "--alpha", "-1/2", "--s", "-1/3"], "s", "-1/3"),
        (["curve", "partner", "--alpha", "-1/3"], "partner", "4/3"),
        (["curve", "weights", "--alpha", "-1/2"], "w", "-1/4"),
        (["ff", "weights", "--alpha", "-1/2"], "t", "3/8"),
        (["curve", "normal-form", "--poly", "-w^2"], "normalForm", "-8/9*t^3 - 1/9*t^2"),
    ],
)
def test_negative_values_on_every_rational_option(argv: list[str], key: str, expected: str) -> None:
    """Negative rationals and dash-leading inputs parse as values, not options."""
    report, _ = run(argv)
    assert report.results[key] == expected
    assert report.passed


def test_negative_values_for_vectors_and_free_field_alpha() -> None:
    """-L(-2)vac reduces to -t; ff verify accepts a negative alpha."""
    report, _ = run(["zhu", "reduce", "--vector", "-L(-2)vac"])
    assert report.results["images"]["peel"] == "-t"
    report, _ = run(["ff", "verify", "--alpha", "-1/2", "--max-level", "2", "--max-index", "1"])
    assert report.inputs["alpha"] == "-1/2"
    assert report.passed


def test_main_accepts_negative_level(capsys) -> None:
    """The documented DS command exits 0 and prints c = -2."""
    assert w3.main(["winf", "dsr", "--n", "3", "--k", "-3/2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["results"]["centralCharge"] == "-2"
