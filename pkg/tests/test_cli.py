"""Test the rrcf command line through click's CliRunner and the main() entry point.

Module Information:
    - Filename: test_cli.py
    - Module: test_cli
    - Location: tests/
"""

from decimal import Decimal, localcontext
import json

from click.testing import CliRunner
import pytest

from rogers_ramanujan.cli import EXIT_NUMERIC, EXIT_SUITE_FAILURE, EXIT_USAGE, cli
from rogers_ramanujan.main import main

runner = CliRunner()

EVALUATION2_W = "sqrt(2)/4*(sqrt(5)-1)-sqrt(7*sqrt(5)-15)/2"
EQ37_MODULUS = "-49+35*sqrt(2)+4*sqrt(3*(99-70*sqrt(2)))"


def _report(result):
    return json.loads(result.stdout)


def _sqrt_three_halves_minus_one():
    with localcontext() as decimal_ctx:
        decimal_ctx.prec = 60
        return Decimal("1.5").sqrt() - 1


def test_help_lists_commands():
    """Every command is registered."""
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for command in ("eval-r", "param", "inverse-k", "cubic", "verify"):
        assert command in result.output


def test_eval_r_reproduces_evaluation1():
    """r = 4 gives R(exp(-2pi)) = 0.28407904384..."""
    result = runner.invoke(cli, ["eval-r", "--r", "4", "--digits", "50"])
    assert result.exit_code == 0
    report = _report(result)
    assert report["command"] == "eval-r"
    assert report["status"] == "ok"
    assert report["outputs"]["R"].startswith("0.28407904384")
    assert report["digits_requested"] == 50
    assert 0 < report["digits_believed"] <= 50
    assert set(report["residuals"]) == {"route_agreement", "a_vs_quotient", "modulus"}


def test_eval_r_at_one():
    """a_1 is about 17.55."""
    result = runner.invoke(cli, ["eval-r", "--r", "1", "--digits", "30"])
    assert result.exit_code == 0
    assert _report(result)["outputs"]["a_r"].startswith("17.54")


@pytest.mark.parametrize("value", ["-1", "0", "pi/"])
def test_eval_r_bad_input_exits_2(value):
    """Non-positive or unparsable r is a usage error with a status=error report."""
    result = runner.invoke(cli, ["eval-r", "--r", value])
    assert result.exit_code == EXIT_USAGE
    report = _report(result)
    assert report["status"] == "error"
    assert "InputError" in report["outputs"]["error"]


def test_bad_digits_exit_2():
    """An invalid precision policy is a usage error."""
    result = runner.invoke(cli, ["eval-r", "--r", "4", "--digits", "0"])
    assert result.exit_code == EXIT_USAGE
    assert _report(result)["status"] == "error"


def test_digits_from_environment():
    """RRCF_DIGITS sets --digits."""
    result = runner.invoke(cli, ["eval-r", "--r", "4"], env={"RRCF_DIGITS": "30"})
    assert result.exit_code == 0
    assert _report(result)["digits_requested"] == 30


def test_plain_format():
    """--format plain prints aligned text instead of JSON."""
    result = runner.invoke(cli, ["eval-r", "--r", "4", "--format", "plain", "--digits", "30"])
    assert result.exit_code == 0
    assert "command: eval-r" in result.stdout
    assert "status: ok" in result.stdout


def test_param_reproduces_evaluation2():
    """The printed w recovers x = 1/sqrt2 and r = 1."""
    result = runner.invoke(cli, ["param", "--w", EVALUATION2_W, "--digits", "40"])
    assert result.exit_code == 0
    outputs = _report(result)["outputs"]
    assert outputs["x"].startswith("0.70710678")
    assert abs(float(outputs["r"]) - 1) < 1e-12
    assert {"L", "M", "y", "q", "a_r", "R", "R_prime"} <= set(outputs)


def test_param_near_one_is_a_numeric_failure():
    """w = 0.9999 pushes x too close to 1."""
    result = runner.invoke(cli, ["param", "--w", "0.9999"])
    assert result.exit_code == EXIT_NUMERIC
    assert "DomainError" in _report(result)["outputs"]["error"]


def test_param_outside_unit_interval_exits_2():
    """w must lie in (0, 1)."""
    result = runner.invoke(cli, ["param", "--w", "1.5"])
    assert result.exit_code == EXIT_USAGE


def test_inverse_k_at_one_over_sqrt2():
    """k^(-1)(0.70710678118654752440) is 1 to about twenty digits."""
    result = runner.invoke(cli, ["inverse-k", "--x", "0.70710678118654752440"])
    assert result.exit_code == 0
    assert abs(float(_report(result)["outputs"]["r"]) - 1) < 1e-15


def test_inverse_k_printed_two_ninths():
    """The radical for k_(2/9) inverts to 2/9."""
    result = runner.invoke(cli, ["inverse-k", "--x", EQ37_MODULUS])
    assert result.exit_code == 0
    assert abs(float(_report(result)["outputs"]["r"]) - 2 / 9) < 1e-15


def test_inverse_k_rejects_x_above_one():
    """x = 1.5 is not a modulus."""
    result = runner.invoke(cli, ["inverse-k", "--x", "1.5"])
    assert result.exit_code == EXIT_USAGE


def test_cubic_at_root_two():
    """V(exp(-pi sqrt2)) = sqrt(3/2) - 1 to all 50 digits."""
    result = runner.invoke(cli, ["cubic", "--r", "2"])
    assert result.exit_code == 0
    report = _report(result)
    assert abs(Decimal(report["outputs"]["V"]) - _sqrt_three_halves_minus_one()) < Decimal("1e-45")
    assert report["status"] == "ok"


def test_cubic_one_cube_root_step():
    """One step gives V(exp(-pi sqrt2 / 3)) = (V/2)^(1/3)."""
    result = runner.invoke(cli, ["cubic", "--r", "2", "--cube-root-steps", "1"])
    assert result.exit_code == 0
    outputs = _report(result)["outputs"]
    with localcontext() as decimal_ctx:
        decimal_ctx.prec = 60
        expected = (_sqrt_three_halves_minus_one() / 2) ** (Decimal(1) / 3)
    assert abs(Decimal(outputs["V_stepped"]) - expected) < Decimal("1e-40")
    assert abs(float(outputs["r_stepped"]) - 2 / 9) < 1e-15


def test_cubic_depth_cap_exits_3():
    """q = 0.999 hits the depth cap."""
    result = runner.invoke(cli, ["cubic", "--q", "0.999"])
    assert result.exit_code == EXIT_NUMERIC
    assert "NonConvergenceError" in _report(result)["outputs"]["error"]


@pytest.mark.parametrize("args", [[], ["--q", "0.1", "--r", "2"]])
def test_cubic_needs_exactly_one_of_q_and_r(args):
    """Both or neither of --q and --r is a usage error."""
    result = runner.invoke(cli, ["cubic", *args])
    assert result.exit_code == EXIT_USAGE


def test_verify_identities():
    """The identity suite passes at 30 digits."""
    result = runner.invoke(cli, ["verify", "--suite", "identities", "--digits", "30", "--jobs", "2"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    assert report["status"] == "ok"
    assert set(report["outputs"].values()) == {"pass"}


def test_verify_residuals_carry_the_believed_digits():
    """Per-check residuals are printed with digits_believed significant digits, not a fixed few."""
    result = runner.invoke(cli, ["verify", "--suite", "identities", "--digits", "30"])
    assert result.exit_code == 0, result.output
    report = _report(result)
    believed = report["digits_believed"]
    assert believed > 3
    mantissas = [
        value.split("e")[0].replace("-", "").replace(".", "").lstrip("0")
        for value in report["residuals"].values()
        if value != "-"
    ]
    assert max(len(mantissa) for mantissa in mantissas) > 3
    assert all(len(mantissa) <= believed for mantissa in mantissas)


def test_verify_with_a_crippled_context_fails():
    """With max_iter too small to evaluate anything, the suite fails with exit 1."""
    result = runner.invoke(cli, ["verify", "--suite", "identities", "--digits", "20", "--max-iter", "2"])
    assert result.exit_code == EXIT_SUITE_FAILURE
    report = _report(result)
    assert report["status"] == "residual_warning"
    assert "fail" in report["outputs"].values()


def test_main_returns_exit_codes(capsys):
    """main() returns the status instead of exiting."""
    assert main(["eval-r", "--r", "4", "--digits", "20"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "ok"
    assert main(["eval-r", "--r", "-1"]) == EXIT_USAGE
    assert main(["cubic"]) == EXIT_USAGE
    assert main(["--version"]) == 0
