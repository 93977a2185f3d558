"""Test command-line number parsing and the Report record.

Module Information:
    - Filename: test_parsing_report.py
    - Module: test_parsing_report
    - Location: tests/
"""

import json

import pytest

from rogers_ramanujan.errors import InputError
from rogers_ramanujan.parsing import normalize, parse_real
from rogers_ramanujan.report import (
    Status,
    build_report,
    digits_believed,
    error_report,
    render_value,
)


def test_decimal_literals_skip_binary_floats(ctx):
    """0.1 is read as the decimal 1/10, not the nearest double."""
    assert parse_real(ctx, "0.1") == ctx.real(1) / 10
    assert parse_real(ctx, "0.70710678118654752440") == ctx.real("0.70710678118654752440")


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("2/9", lambda mp: mp.mpf(2) / 9),
        ("1/sqrt2", lambda mp: 1 / mp.sqrt(2)),
        ("exp(-2pi)", lambda mp: mp.exp(-2 * mp.pi)),
        ("exp(-pi*sqrt(2))", lambda mp: mp.exp(-mp.pi * mp.sqrt(2))),
        ("2^3", lambda mp: mp.mpf(8)),
        ("cbrt(27)", lambda mp: mp.mpf(3)),
        ("-log(e)", lambda mp: mp.mpf(-1)),
    ],
)
def test_expressions(ctx, text, expected):
    """Shorthands and the small expression grammar."""
    assert abs(parse_real(ctx, text) - expected(ctx.mp)) < ctx.tolerance()


def test_normalize_expands_shorthands():
    """sqrt2 and 2pi become explicit calls and products."""
    assert normalize("1/sqrt2") == "1/sqrt(2)"
    assert normalize("exp(-2pi)") == "exp(-2*pi)"
    assert normalize("2^3") == "2**3"


@pytest.mark.parametrize(
    "text",
    ["", "x", "__import__('os')", "1/0", "sqrt(-1)", "True", "(-8)**(1/3)", "log(0)", "1 +"],
)
def test_rejected_inputs(ctx, text):
    """Anything outside the grammar, or off the real line, is an InputError."""
    with pytest.raises(InputError):
        parse_real(ctx, text)


def test_digits_believed_follows_the_worst_residual(ctx):
    """floor(-log10(worst)), capped at the target."""
    assert digits_believed(ctx, {}) == 50
    assert digits_believed(ctx, {"a": ctx.real(0)}) == 50
    assert digits_believed(ctx, {"a": ctx.real("3e-31"), "b": ctx.real("1e-45")}) == 30


def test_render_value(ctx):
    """Numbers are decimal strings; strings and ints pass through."""
    assert render_value(ctx, ctx.real(2) / 3, 5) == "0.66667"
    assert render_value(ctx, 7, 5) == "7"
    assert render_value(ctx, "radical", 5) == "radical"


def test_build_report_ok(ctx):
    """Small residuals keep status ok."""
    report = build_report(ctx, "demo", {"r": "4"}, {"R": ctx.real(1) / 3}, {"res": ctx.real("1e-60")})
    assert report.status == Status.OK
    assert report.digits_believed == 50
    assert report.outputs["R"].startswith("0.33333")
    data = json.loads(report.to_json())
    assert set(data) == {
        "command",
        "inputs",
        "outputs",
        "residuals",
        "digits_requested",
        "digits_believed",
        "status",
    }
    assert data["status"] == "ok"


def test_build_report_warns_on_large_residual(ctx):
    """A residual at or above tolerance downgrades the status."""
    report = build_report(ctx, "demo", {}, {"x": 1}, {"res": ctx.real("1e-20")})
    assert report.status == Status.RESIDUAL_WARNING
    assert report.digits_believed == 19 or report.digits_believed == 20
    assert report.digits_believed <= report.digits_requested


def test_error_report_and_plain_rendering():
    """Errors carry their message under outputs['error']."""
    report = error_report("eval-r", {"r": "-1"}, "InputError: r must be positive", 50)
    assert report.status == Status.ERROR
    assert report.outputs["error"].startswith("InputError")
    plain = report.render("plain")
    assert "command: eval-r" in plain
    assert "status: error" in plain
    assert json.loads(report.render("json"))["status"] == "error"
