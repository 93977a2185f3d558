"""Closed-form constants used as oracles by the suites and tests.

Each function evaluates a radical expression in the caller's context. Values
marked printed are transcriptions of published radicals that do not all hold;
the suites report those with the erratum flag instead of failing on them.
"""

from .elliptic import elliptic_k
from .numerics import NumericContext, Real


def evaluation1_R(ctx: NumericContext) -> Real:
    """R(exp(-2 pi)) = -(1 + sqrt5)/2 + sqrt((5 + sqrt5)/2)."""
    mp = ctx.mp
    s5 = mp.sqrt(5)
    return -(1 + s5) / 2 + mp.sqrt((5 + s5) / 2)


def gamma_five_quarters_pow4(ctx: NumericContext) -> Real:
    """Gamma(5/4)^4 = pi K(1/sqrt2)^2 / 16, from Gamma(1/4)^2 = 4 sqrt(pi) K(1/sqrt2)."""
    mp = ctx.mp
    return mp.pi * elliptic_k(ctx, 1 / mp.sqrt(2)) ** 2 / 16


def evaluation1_R_prime(ctx: NumericContext) -> Real:
    """R'(exp(-2 pi)) = 8 sqrt((2/5)(9 + 5 sqrt5 - 2 sqrt(50 + 22 sqrt5))) e^(2 pi) / pi^3 Gamma(5/4)^4."""
    mp = ctx.mp
    s5 = mp.sqrt(5)
    radical = mp.sqrt(ctx.real(2) / 5 * (9 + 5 * s5 - 2 * mp.sqrt(50 + 22 * s5)))
    return 8 * radical * mp.exp(2 * mp.pi) / mp.pi**3 * gamma_five_quarters_pow4(ctx)


def evaluation2_w(ctx: NumericContext) -> Real:
    """w = (sqrt2/4)(sqrt5 - 1) - sqrt(7 sqrt5 - 15)/2, which gives x = 1/sqrt2."""
    mp = ctx.mp
    s5 = mp.sqrt(5)
    return mp.sqrt(2) / 4 * (s5 - 1) - mp.sqrt(7 * s5 - 15) / 2


def evaluation2_x(ctx: NumericContext) -> Real:
    """x = 1/sqrt2 = k_1."""
    return 1 / ctx.mp.sqrt(2)


def _eval2_radicals(ctx: NumericContext) -> tuple[Real, Real, Real]:
    mp = ctx.mp
    s5 = mp.sqrt(5)
    return s5, mp.sqrt(-30 + 14 * s5), mp.sqrt(-150 + 70 * s5)


def evaluation2_printed_w_prime(ctx: NumericContext) -> Real:
    """Printed w' = ((1 + 21 sqrt(-30 + 14 sqrt5) - 9 sqrt(-150 + 70 sqrt5)) / sqrt2)^(1/4)."""
    mp = ctx.mp
    _, u, v = _eval2_radicals(ctx)
    return mp.root((1 + 21 * u - 9 * v) / mp.sqrt(2), 4)


def evaluation2_printed_a(ctx: NumericContext) -> Real:
    """Printed radical for 1/R^5 - 11 - R^5 at q = exp(-pi)."""
    mp = ctx.mp
    s5, u, v = _eval2_radicals(ctx)
    inner = 1 - s5 + u + mp.power(2, ctx.real(3) / 8) * (-3 + s5 - u) * mp.root(1 + 21 * u - 9 * v, 4)
    last = mp.sqrt(-1574 + 704 * s5) - 655 * u + 293 * v
    return -(3 + s5 - u) / 8 * inner**3 / last


def eq37_modulus(ctx: NumericContext) -> Real:
    """k_(2/9) = -49 + 35 sqrt2 + 4 sqrt(3 (99 - 70 sqrt2))."""
    mp = ctx.mp
    s2 = mp.sqrt(2)
    return -49 + 35 * s2 + 4 * mp.sqrt(3 * (99 - 70 * s2))


def eq37_complement(ctx: NumericContext) -> Real:
    """Complementary modulus of eq37_modulus as sqrt((1 - k)(1 + k))."""
    mp = ctx.mp
    k = eq37_modulus(ctx)
    return mp.sqrt((1 - k) * (1 + k))


def evaluation5_V(ctx: NumericContext) -> Real:
    """V(exp(-pi sqrt2)) = sqrt(3/2) - 1."""
    return ctx.mp.sqrt(ctx.real(3) / 2) - 1


def evaluation5_V_step(ctx: NumericContext) -> Real:
    """V(exp(-pi sqrt2 / 3)) = 2^(-1/3) (sqrt(3/2) - 1)^(1/3)."""
    mp = ctx.mp
    return mp.cbrt(evaluation5_V(ctx) / 2)


__all__ = [
    "eq37_complement",
    "eq37_modulus",
    "evaluation1_R",
    "evaluation1_R_prime",
    "evaluation2_printed_a",
    "evaluation2_printed_w_prime",
    "evaluation2_w",
    "evaluation2_x",
    "evaluation5_V",
    "evaluation5_V_step",
    "gamma_five_quarters_pow4",
]
