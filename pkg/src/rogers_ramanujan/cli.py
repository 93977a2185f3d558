"""Command-line surface ``rrcf``: evaluate, invert and verify, one Report per run.

Module Information:
    - Filename: cli.py
    - Module: cli
    - Location: src/rogers_ramanujan/

Key Concepts:
    - Every command prints exactly one Report on standard output (JSON or plain)
    - Logs go to standard error, and to a file when --log-file is given
    - Exit codes: 0 ok, 1 suite failure, 2 bad input, 3 numeric failure
"""

from collections.abc import Callable
from dataclasses import dataclass
import functools
import pathlib
from typing import NoReturn

import click

from . import __version__
from .cubic import Vi_of, cube_root_chain, cubic_cf, identity36_residual
from .elliptic import inverse_singular_modulus, singular_modulus
from .errors import InputError, RogersRamanujanError
from .modular5 import evaluate_parametric
from .numerics import NumericContext, Real
from .parsing import parse_real
from .report import Report, Status, build_report, digits_believed, error_report, render_value
from .rrcf import a_quotient, rrcf_cf, rrcf_derivative_q, rrcf_via_identity
from .suites import SUITE_NAMES, run_suite, verdict
from .utils_logger import init_logger, logger

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass(frozen=True)
class Options:
    """Flags shared by every command."""

    digits: int = 50
    prec_bits: int | None = None
    max_iter: int = 10_000
    seed_grid: int = 1024
    guard_digits: int = 15
    fmt: str = "json"
    log_level: str = "WARNING"
    log_file: pathlib.Path | None = None

    def context(self) -> NumericContext:
        """Build the NumericContext these flags describe."""
        return NumericContext(
            target_digits=self.digits,
            guard_digits=self.guard_digits,
            precision_bits=self.prec_bits or 0,
            max_iter=self.max_iter,
            seed_grid=self.seed_grid,
        )

    def configure_logging(self) -> None:
        """Send logs to stderr and, if asked, to the log file."""
        if self.log_file is None:
            init_logger(self.log_level)
        else:
            init_logger(self.log_level, log_dir=self.log_file.parent, log_file_name=self.log_file.name)


def numeric_options(command: Callable) -> Callable:
    """Attach the shared flags and hand the command an Options instead of loose keywords."""
    flags = [
        click.option("--digits", type=int, default=50, show_default=True, envvar="RRCF_DIGITS", help="Target significant digits."),
        click.option("--prec-bits", type=int, default=None, help="Working precision in bits (derived from digits when omitted)."),
        click.option("--max-iter", type=int, default=10_000, show_default=True, help="Iteration and continued-fraction depth cap."),
        click.option("--seed-grid", type=int, default=1024, show_default=True, help="Cells in the root-isolation scan."),
        click.option("--guard-digits", type=int, default=15, show_default=True, help="Extra digits carried above the target."),
        click.option("--format", "fmt", type=click.Choice(["json", "plain"]), default="json", show_default=True),
        click.option("--log-level", default="WARNING", show_default=True, envvar="RRCF_LOG_LEVEL",
                     type=click.Choice(["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False)),
        click.option("--log-file", type=click.Path(dir_okay=False, path_type=pathlib.Path), default=None),
    ]

    @functools.wraps(command)
    def wrapper(*args, digits, prec_bits, max_iter, seed_grid, guard_digits, fmt, log_level, log_file, **kwargs):
        options = Options(
            digits=digits,
            prec_bits=prec_bits,
            max_iter=max_iter,
            seed_grid=seed_grid,
            guard_digits=guard_digits,
            fmt=fmt,
            log_level=log_level.upper(),
            log_file=log_file,
        )
        return command(*args, options=options, **kwargs)

    for flag in reversed(flags):
        wrapper = flag(wrapper)
    return wrapper


#####################################
# Input checks
#####################################


def _positive(ctx: NumericContext, name: str, text: str) -> Real:
    value = parse_real(ctx, text)
    if value <= 0:
        raise InputError(f"{name} must be positive, got {text!r}")
    return value


def _unit_open(ctx: NumericContext, name: str, text: str) -> Real:
    value = parse_real(ctx, text)
    if not 0 < value < 1:
        raise InputError(f"{name} must lie in (0, 1), got {text!r}")
    return value


#####################################
# Running a command
#####################################


def _fail(options: Options, command: str, inputs: dict[str, str], exc: Exception, code: int) -> NoReturn:
    message = f"{type(exc).__name__}: {exc}"
    report = error_report(command, inputs, message, options.digits)
    click.echo(report.render(options.fmt))
    click.get_current_context().exit(code)


def execute(
    options: Options,
    command: str,
    inputs: dict[str, str],
    compute: Callable[[NumericContext], Report],
) -> Report:
    """Run compute in a fresh context, print its Report and map failures to exit codes.

    Bad flags and bad inputs exit with 2; any other library error exits with 3.
    """
    options.configure_logging()
    try:
        ctx = options.context()
    except RogersRamanujanError as exc:
        logger.error(f"{command}: invalid numeric settings: {exc}")
        _fail(options, command, inputs, exc, EXIT_USAGE)

    try:
        report = compute(ctx)
    except InputError as exc:
        logger.error(f"{command}: {exc}")
        _fail(options, command, inputs, exc, EXIT_USAGE)
    except RogersRamanujanError as exc:
        logger.error(f"{command}: {type(exc).__name__}: {exc}")
        _fail(options, command, inputs, exc, EXIT_NUMERIC)

    click.echo(report.render(options.fmt))
    return report


#####################################
# Commands
#####################################


@click.group()
@click.version_option(__version__, prog_name="rrcf")
def cli() -> None:
    """Evaluate the Rogers-Ramanujan and cubic continued fractions to high precision."""


@cli.command("eval-r")
@click.option("--r", "r_text", required=True, help="r > 0; the nome is exp(-pi*sqrt(r)).")
@numeric_options
def eval_r(r_text: str, options: Options) -> None:
    """R(q), a_r and R'(q) at q = exp(-pi*sqrt(r)), by two routes."""

    def compute(ctx: NumericContext) -> Report:
        r = _positive(ctx, "r", r_text)
        point = singular_modulus(ctx, r, cross_check=True)
        q = point.q_nome
        direct = rrcf_cf(ctx, q)
        eta = rrcf_via_identity(ctx, q)
        a = a_quotient(ctx, q).a
        outputs = {
            "q": q,
            "k_r": point.modulus.k,
            "R": direct.R,
            "R_eta_quotient": eta.R,
            "a_r": a,
            "R_prime": rrcf_derivative_q(ctx, q),
        }
        residuals = {
            "route_agreement": abs(direct.R - eta.R),
            "a_vs_quotient": abs(direct.a - a) / a,
            "modulus": point.modulus.residual(),
        }
        return build_report(ctx, "eval-r", {"r": r_text}, outputs, residuals)

    execute(options, "eval-r", {"r": r_text}, compute)


@cli.command("param")
@click.option("--w", "w_text", required=True, help="w = sqrt(k_r k_25r), in (0, 1).")
@numeric_options
def param(w_text: str, options: Options) -> None:
    """Run the parametric pipeline w -> (x, y) -> r -> a_r -> R, R'."""

    def compute(ctx: NumericContext) -> Report:
        w = _unit_open(ctx, "w", w_text)
        evaluation = evaluate_parametric(ctx, w)
        solution = evaluation.solution
        outputs = {
            "L": solution.L,
            "M": solution.M,
            "x": solution.x,
            "y": solution.y,
            "w_prime": solution.w_prime,
            "method": solution.method.value,
            "r": evaluation.r,
            "q": evaluation.q,
            "a_r": evaluation.a_r,
            "R": evaluation.R,
            "R_prime": evaluation.R_prime,
        }
        return build_report(
            ctx, "param", {"w": w_text}, outputs, evaluation.residuals, tolerance=ctx.tolerance(10)
        )

    execute(options, "param", {"w": w_text}, compute)


@cli.command("inverse-k")
@click.option("--x", "x_text", required=True, help="Modulus in (0, 1).")
@numeric_options
def inverse_k(x_text: str, options: Options) -> None:
    """r = k^(-1)(x) with a round-trip check through the singular modulus."""

    def compute(ctx: NumericContext) -> Report:
        mp = ctx.mp
        x = _unit_open(ctx, "x", x_text)
        x_prime = mp.sqrt((1 - x) * (1 + x))
        r = inverse_singular_modulus(ctx, x, x_prime)
        back = singular_modulus(ctx, r).modulus.k
        outputs = {"r": r, "q": mp.exp(-mp.pi * mp.sqrt(r)), "k_prime": x_prime}
        residuals = {"round_trip": abs(back - x) / x}
        return build_report(ctx, "inverse-k", {"x": x_text}, outputs, residuals, tolerance=ctx.tolerance(10))

    execute(options, "inverse-k", {"x": x_text}, compute)


@cli.command("cubic")
@click.option("--q", "q_text", default=None, help="Nome in (0, 1).")
@click.option("--r", "r_text", default=None, help="r > 0; the nome is exp(-pi*sqrt(r)).")
@click.option("--cube-root-steps", type=click.IntRange(min=0), default=0, show_default=True,
              help="Follow V(q) -> V(q^(1/3)) this many times.")
@numeric_options
def cubic(q_text: str | None, r_text: str | None, cube_root_steps: int, options: Options) -> None:
    """V(q), T, k and the k^(-1)(V_i(V(q))) identity; optionally the cube-root chain."""
    if (q_text is None) == (r_text is None):
        raise click.UsageError("give exactly one of --q or --r")
    inputs = {"q": q_text} if q_text is not None else {"r": r_text}
    inputs["cube_root_steps"] = str(cube_root_steps)

    def compute(ctx: NumericContext) -> Report:
        mp = ctx.mp
        if q_text is not None:
            q = _unit_open(ctx, "q", q_text)
        else:
            q = mp.exp(-mp.pi * mp.sqrt(_positive(ctx, "r", r_text)))
        value = cubic_cf(ctx, q)
        r = mp.log(q) ** 2 / mp.pi**2
        outputs: dict[str, object] = {
            "q": q,
            "r": r,
            "V": value.V,
            "T": value.T,
            "k": value.k,
            "Vi_of_V": Vi_of(ctx, value.V),
        }
        residuals = {
            "eq31": value.eq31_residual,
            "eq32": value.eq32_residual,
            "identity36": identity36_residual(ctx, value.q),
        }
        if cube_root_steps:
            stepped = cube_root_chain(ctx, value.V, cube_root_steps)[-1]
            outputs["V_stepped"] = stepped
            outputs["r_stepped"] = r / 9**cube_root_steps
            direct = cubic_cf(ctx, mp.root(q, 3**cube_root_steps)).V
            residuals["chain_vs_cf"] = abs(stepped - direct)
        return build_report(ctx, "cubic", inputs, outputs, residuals, tolerance=ctx.tolerance(10))

    execute(options, "cubic", inputs, compute)


@cli.command("verify")
@click.option("--suite", type=click.Choice([*SUITE_NAMES, "all"]), default="all", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True,
              help="Checks run concurrently on this many threads.")
@numeric_options
def verify(suite: str, jobs: int, options: Options) -> None:
    """Run an acceptance suite; exit 1 when any check other than an erratum fails."""
    inputs = {"suite": suite, "jobs": str(jobs)}

    def compute(ctx: NumericContext) -> Report:
        results = run_suite(suite, ctx, jobs=jobs)
        trusted = {
            result.name: result.residual
            for result in results
            if result.residual is not None and not result.erratum
        }
        failed = any(result.hard_failure for result in results)
        believed = 0 if failed else digits_believed(ctx, trusted)
        return Report(
            command="verify",
            inputs=inputs,
            outputs={result.name: verdict(result) for result in results},
            residuals={
                result.name: "-" if result.residual is None else render_value(ctx, result.residual, believed)
                for result in results
            },
            digits_requested=ctx.target_digits,
            digits_believed=believed,
            status=Status.RESIDUAL_WARNING if failed else Status.OK,
        )

    report = execute(options, "verify", inputs, compute)
    if report.status != Status.OK:
        click.get_current_context().exit(EXIT_SUITE_FAILURE)


__all__ = ["EXIT_NUMERIC", "EXIT_OK", "EXIT_SUITE_FAILURE", "EXIT_USAGE", "Options", "cli", "execute"]
