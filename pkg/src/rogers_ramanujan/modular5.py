"""Degree-5 modular equation, a_r and the parametric evaluation of R and R'.

The pipeline starts from w = sqrt(k_r k_25r):

    w -> L, M -> (x, y) = (k_r, k_25r) -> r = k^(-1)(x) -> a_r -> R(q), R'(q)

where the radical solution of the sextic in x is tried first and real-root
isolation on the sextic is the fallback, with the degree-5 modular equation
as the arbiter between candidate roots.

Module Information:
    - Filename: modular5.py
    - Module: modular5
    - Location: src/rogers_ramanujan/
"""

from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from enum import StrEnum
from types import MappingProxyType

from .elliptic import (
    elliptic_k_from_complement,
    inverse_singular_modulus,
    multiplier5,
    singular_modulus,
)
from .errors import DivisionByZeroError, DomainError, ResidualTooLargeError
from .numerics import Interval, NumericContext, Polynomial, Real, real_roots_in
from .rrcf import a_quotient, rrcf_cf, rrcf_from_a
from .utils_logger import logger

# Cross-route pipeline residuals accumulate more rounding than single identities.
PIPELINE_LOSS = 15

#####################################
# Types
#####################################


class SolveMethod(StrEnum):
    """How prop1_xy obtained x."""

    RADICAL = "radical"
    SEXTIC_ROOTS = "sextic_roots"


class DenominatorVariant(StrEnum):
    """Which printed form of the a_r denominator to use."""

    EQ25 = "eq25"
    EQ23 = "eq23"


@dataclass(frozen=True)
class SexticSolution:
    """Solution of the sextic for given w: (w, L, M, x, y, w').

    x and y stand for k_r and k_25r, so x*y = w^2 and y < w < x.
    """

    w: Real
    L: Real
    M: Real
    x: Real
    y: Real
    w_prime: Real
    eq12_residual: Real
    eq13_residual: Real
    method: SolveMethod = SolveMethod.RADICAL


@dataclass(frozen=True)
class ParametricEvaluation:
    """Result of the full parametric pipeline for one w."""

    input_w: Real
    solution: SexticSolution
    r: Real
    q: Real
    a_r: Real
    R: Real
    residuals: Mapping[str, Real] = field(default_factory=lambda: MappingProxyType({}))
    R_prime: Real | None = None


@dataclass(frozen=True)
class VariantDiagnostic:
    """Relative error of each denominator variant against the eta-quotient a_r."""

    r: Real
    errors: Mapping[DenominatorVariant, Real]

    @property
    def winner(self) -> DenominatorVariant:
        """Return the variant with the smallest error."""
        return min(self.errors, key=lambda variant: self.errors[variant])


#####################################
# Sextic and modular equation
#####################################


def _complement(ctx: NumericContext, x: Real) -> Real:
    return ctx.mp.sqrt((1 - x) * (1 + x))


def _unit_open(ctx: NumericContext, name: str, value: object) -> Real:
    value = ctx.real(value)
    if not 0 < value < 1:
        raise DomainError(f"{name} must lie in (0, 1), got {ctx.mp.nstr(value, 15)}")
    return value


def solve_L(ctx: NumericContext, w: object) -> Real:
    """Return the positive root of L^2 + 18(1 - w^2) L - 384 w^2 = 0."""
    mp = ctx.mp
    w = _unit_open(ctx, "w", w)
    b = 18 * (1 - w**2)
    c = 384 * w**2
    return 2 * c / (b + mp.sqrt(b**2 + 4 * c))


def w_from_L(ctx: NumericContext, L: object) -> Real:
    """Return w = sqrt(L(18 + L) / (6(64 + 3L)))."""
    L = ctx.real(L)
    return ctx.mp.sqrt(L * (18 + L) / (6 * (64 + 3 * L)))


def sextic_eq13(ctx: NumericContext, w: object) -> Polynomial:
    """Return the sextic in x whose roots include k_r when w = sqrt(k_r k_25r).

    Coefficients, constant term first:
    w^6, 10w^5, 15w^4, -16w - 20w^3 - 16w^5, 15w^2, 10w, 1.
    The polynomial is invariant under x -> w^2/x up to the factor x^6/w^6.
    """
    w = ctx.real(w)
    return Polynomial.of(
        ctx,
        [w**6, 10 * w**5, 15 * w**4, -16 * w - 20 * w**3 - 16 * w**5, 15 * w**2, 10 * w, 1],
    )


def residual_eq13(ctx: NumericContext, x: object, w: object) -> Real:
    """Return |P(x)| / sum |terms of P(x)| for the sextic at w."""
    mp = ctx.mp
    x = ctx.real(x)
    terms = [c * x**i for i, c in enumerate(sextic_eq13(ctx, w).coeffs)]
    return abs(mp.fsum(terms)) / mp.fsum(abs(t) for t in terms)


def residual_eq12(
    ctx: NumericContext,
    x: object,
    y: object,
    *,
    x_prime: object | None = None,
    y_prime: object | None = None,
) -> Real:
    """Return x y + x' y' + 2 * 4^(1/3) (x y x' y')^(1/3) - 1 for the pair (k_r, k_25r) = (x, y)."""
    mp = ctx.mp
    x = _unit_open(ctx, "x", x)
    y = _unit_open(ctx, "y", y)
    xp = _complement(ctx, x) if x_prime is None else ctx.real(x_prime)
    yp = _complement(ctx, y) if y_prime is None else ctx.real(y_prime)
    return x * y + xp * yp + 2 * mp.cbrt(4) * mp.cbrt(x * y * xp * yp) - 1


def _check_near_one(ctx: NumericContext, x: Real) -> None:
    mp = ctx.mp
    if 1 - x < mp.ldexp(mp.mpf(1), -(ctx.precision_bits // 4)):
        raise DomainError(
            f"recovered modulus x={mp.nstr(x, 20)} is too close to 1 for this precision"
        )


def _solution(ctx: NumericContext, w: Real, L: Real, M: Real, x: Real, method: SolveMethod) -> SexticSolution:
    y = w**2 / x
    return SexticSolution(
        w=w,
        L=L,
        M=M,
        x=x,
        y=y,
        w_prime=ctx.mp.sqrt(_complement(ctx, x) * _complement(ctx, y)),
        eq12_residual=abs(residual_eq12(ctx, x, y)),
        eq13_residual=residual_eq13(ctx, x, w),
        method=method,
    )


def _radical_x(ctx: NumericContext, w: Real, L: Real, M: Real) -> Real | None:
    """Return x = w/s^2 from the radical formula, or None when s leaves (0, 1)."""
    mp = ctx.mp
    z = mp.root(L / M, 6)
    t = z - 4 / z
    a = mp.sqrt(ctx.real(2) / 3) * t
    hyp = mp.sqrt(a**2 + 4)
    s = 2 / (hyp - a) if a < 0 else (a + hyp) / 2
    if not 0 < s < 1:
        return None
    x = w / s**2
    return x if x < 1 else None


def _sextic_root_x(ctx: NumericContext, w: Real) -> Real:
    """Pick the root of the sextic on (w, 1) that best satisfies the modular equation."""
    best, best_residual = None, None
    for root in real_roots_in(ctx, sextic_eq13(ctx, w), Interval(w, ctx.real(1))):
        x = root.value
        if not w < x < 1:
            continue
        residual = abs(residual_eq12(ctx, x, w**2 / x))
        if best_residual is None or residual < best_residual:
            best, best_residual = x, residual
    if best is None:
        raise ResidualTooLargeError("eq13", ctx.real(1), ctx.tolerance())
    return best


def prop1_xy(ctx: NumericContext, w: object) -> SexticSolution:
    """Recover (x, y) = (k_r, k_25r) from w = sqrt(k_r k_25r).

    L = solve_L(w), M = (18 + L)/(64 + 3L), t = (L/M)^(1/6) - 4 (M/L)^(1/6),
    s = (sqrt(4 + 2t^2/3) + sqrt(2/3) t)/2, x = w/s^2, y = w s^2.
    When s leaves (0, 1) or the sextic or modular-equation residual is above
    tolerance, x is taken instead from the real roots of the sextic on (w, 1).

    Raises:
        DomainError: If w is outside (0, 1) or x is too close to 1 to keep x' accurate.
        ResidualTooLargeError: If neither route satisfies both residual checks.
    """
    mp = ctx.mp
    w = _unit_open(ctx, "w", w)
    L = solve_L(ctx, w)
    M = (18 + L) / (64 + 3 * L)
    tol = ctx.tolerance()

    x = _radical_x(ctx, w, L, M)
    if x is not None:
        _check_near_one(ctx, x)
        solution = _solution(ctx, w, L, M, x, SolveMethod.RADICAL)
        if solution.eq13_residual < tol and solution.eq12_residual < tol:
            return solution
        logger.warning(
            f"radical solution at w={mp.nstr(w, 12)} fails its residual checks "
            f"(eq12 {mp.nstr(solution.eq12_residual, 3)}, eq13 {mp.nstr(solution.eq13_residual, 3)}); "
            "isolating sextic roots"
        )
    else:
        logger.warning(f"radical solution at w={mp.nstr(w, 12)} leaves 0 < s < 1; isolating sextic roots")

    x = _sextic_root_x(ctx, w)
    _check_near_one(ctx, x)
    solution = _solution(ctx, w, L, M, x, SolveMethod.SEXTIC_ROOTS)
    if solution.eq13_residual >= tol:
        raise ResidualTooLargeError("eq13", solution.eq13_residual, tol)
    if solution.eq12_residual >= tol:
        raise ResidualTooLargeError("eq12", solution.eq12_residual, tol)
    return solution


#####################################
# Multiplier and a_r
#####################################


def _bracket(ctx: NumericContext, x: Real, w: Real) -> Real:
    """Return w/x + w'/x' - w w'/(x x'), the reciprocal of M_5."""
    mp = ctx.mp
    y = w**2 / x
    if not 0 < y < 1:
        raise DomainError(f"w^2/x must lie in (0, 1), got {mp.nstr(y, 15)}")
    xp = _complement(ctx, x)
    wp = mp.sqrt(xp * _complement(ctx, y))
    return w / x + wp / xp - w * wp / (x * xp)


def multiplier_from_w(ctx: NumericContext, x: object, w: object) -> Real:
    """Return M_5 = (w/x + w'/x' - w w'/(x x'))^(-1)."""
    x = _unit_open(ctx, "x", x)
    w = _unit_open(ctx, "w", w)
    return 1 / _bracket(ctx, x, w)


def a_parametric(
    ctx: NumericContext,
    x: object,
    w: object,
    variant: DenominatorVariant = DenominatorVariant.EQ25,
) -> Real:
    """Return a_r from (x, w) = (k_r, sqrt(k_r k_25r)).

    a_r = (16x^6 - 26x^4 - w x^3 + 10x^2 + w x) / D * (w/x + w'/x' - w w'/(x x'))^3
    with D = x^4 - 6x^3 w - 20 x w^3 + 15 w^2 x^2 - 6 x w + 15 w^4 + w^2.
    The EQ23 variant uses -20 x^3 w^3 in D instead.

    Raises:
        DivisionByZeroError: If D vanishes at working precision.
    """
    mp = ctx.mp
    x = _unit_open(ctx, "x", x)
    w = _unit_open(ctx, "w", w)
    numerator = 16 * x**6 - 26 * x**4 - w * x**3 + 10 * x**2 + w * x
    cubic_term = x * w**3 if variant == DenominatorVariant.EQ25 else x**3 * w**3
    terms = [x**4, -6 * x**3 * w, -20 * cubic_term, 15 * w**2 * x**2, -6 * x * w, 15 * w**4, w**2]
    denominator = mp.fsum(terms)
    if abs(denominator) <= ctx.eps * mp.fsum(abs(t) for t in terms):
        raise DivisionByZeroError(f"a_r denominator vanishes at x={mp.nstr(x, 15)}, w={mp.nstr(w, 15)}")
    return numerator / denominator * _bracket(ctx, x, w) ** 3


def a_from_moduli(ctx: NumericContext, r: object) -> Real:
    """Return a_r = (k'_r/k'_25r)^2 sqrt(k_r/k_25r) M_5(r)^(-3)."""
    mp = ctx.mp
    base = singular_modulus(ctx, r)
    lifted = singular_modulus(ctx, 25 * base.r)
    m5 = multiplier5(ctx, base.r).value
    k, kp = base.modulus.k, base.modulus.k_prime
    k25, kp25 = lifted.modulus.k, lifted.modulus.k_prime
    return (kp / kp25) ** 2 * mp.sqrt(k / k25) / m5**3


def residual_eq21(ctx: NumericContext, r: object) -> Real:
    """Return the relative residual of w^5 - k^2 w - k^3 (k^2 - 1) / (a_r M_5^3) at r."""
    mp = ctx.mp
    base = singular_modulus(ctx, r)
    lifted = singular_modulus(ctx, 25 * base.r)
    k = base.modulus.k
    w = mp.sqrt(k * lifted.modulus.k)
    a = a_quotient(ctx, base.q_nome).a
    m5 = multiplier5(ctx, base.r).value
    terms = [w**5, -(k**2) * w, -(k**3) * (k**2 - 1) / (a * m5**3)]
    return abs(mp.fsum(terms)) / max(abs(t) for t in terms)


def coefficient_variant_diagnostic(ctx: NumericContext, r: object) -> VariantDiagnostic:
    """Compare both denominator variants of a_parametric against a_quotient at r."""
    mp = ctx.mp
    base = singular_modulus(ctx, r)
    lifted = singular_modulus(ctx, 25 * base.r)
    x = base.modulus.k
    w = mp.sqrt(x * lifted.modulus.k)
    target = a_quotient(ctx, base.q_nome).a
    errors = {
        variant: abs(a_parametric(ctx, x, w, variant) - target) / abs(target)
        for variant in DenominatorVariant
    }
    diagnostic = VariantDiagnostic(r=base.r, errors=MappingProxyType(errors))
    logger.info(
        f"denominator variants at r={mp.nstr(base.r, 10)}: "
        + ", ".join(f"{v.value}={mp.nstr(e, 3)}" for v, e in errors.items())
    )
    return diagnostic


#####################################
# Pipeline
#####################################


def derivative_parametric(ctx: NumericContext, evaluation: ParametricEvaluation) -> Real:
    """Return R'(q) from the parametric data.

    R' = 2^(4/3) x^(1/2) (1 - x^2) / (5 w^(1/6) w'^(2/3))
         * (w/x + w'/x' - w w'/(x x'))^(1/2) * R * K(x)^2 e^(pi sqrt r) / pi^2
    """
    mp = ctx.mp
    sol = evaluation.solution
    x, w, wp = sol.x, sol.w, sol.w_prime
    xp = _complement(ctx, x)
    K = elliptic_k_from_complement(ctx, xp)
    prefactor = mp.cbrt(16) * mp.sqrt(x) * xp**2 / (5 * mp.root(w, 6) * mp.cbrt(wp**2))
    return (
        prefactor
        * mp.sqrt(_bracket(ctx, x, w))
        * evaluation.R
        * K**2
        * mp.exp(mp.pi * mp.sqrt(evaluation.r))
        / mp.pi**2
    )


def evaluate_parametric(
    ctx: NumericContext, w: object, *, with_derivative: bool = True
) -> ParametricEvaluation:
    """Run the parametric pipeline for w and cross-check it against the direct routes.

    The residuals record holds |R - R_cf|, the modular-equation and sextic
    residuals, and |a - a_quotient| / a. Any of them above 10^(-target_digits + 15) raises.
    """
    mp = ctx.mp
    solution = prop1_xy(ctx, w)
    x = solution.x
    r = inverse_singular_modulus(ctx, x, _complement(ctx, x))
    q = mp.exp(-mp.pi * mp.sqrt(r))
    a = a_parametric(ctx, x, solution.w)
    R = rrcf_from_a(ctx, a)

    residuals = {
        "R_vs_cf": abs(R - rrcf_cf(ctx, q).R),
        "eq12": solution.eq12_residual,
        "eq13": solution.eq13_residual,
        "a_vs_quotient": abs(a - a_quotient(ctx, q).a) / abs(a),
    }
    limit = ctx.tolerance(PIPELINE_LOSS)
    for name, value in residuals.items():
        if value >= limit:
            raise ResidualTooLargeError(name, value, limit)

    evaluation = ParametricEvaluation(
        input_w=solution.w,
        solution=solution,
        r=r,
        q=q,
        a_r=a,
        R=R,
        residuals=MappingProxyType(residuals),
    )
    logger.debug(f"pipeline w={mp.nstr(solution.w, 12)} -> r={mp.nstr(r, 20)}")
    if with_derivative:
        evaluation = replace(evaluation, R_prime=derivative_parametric(ctx, evaluation))
    return evaluation


__all__ = [
    "DenominatorVariant",
    "ParametricEvaluation",
    "SexticSolution",
    "SolveMethod",
    "VariantDiagnostic",
    "a_from_moduli",
    "a_parametric",
    "coefficient_variant_diagnostic",
    "derivative_parametric",
    "evaluate_parametric",
    "multiplier_from_w",
    "prop1_xy",
    "residual_eq12",
    "residual_eq13",
    "residual_eq21",
    "sextic_eq13",
    "solve_L",
    "w_from_L",
]
