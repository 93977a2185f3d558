"""Test the degree-5 modular equation, a_r and the parametric pipeline.

Module Information:
    - Filename: test_modular5.py
    - Module: test_modular5
    - Location: tests/
"""

import pytest

from rogers_ramanujan import modular5
from rogers_ramanujan.closed_forms import evaluation2_w, evaluation2_x
from rogers_ramanujan.elliptic import multiplier5, singular_modulus
from rogers_ramanujan.errors import DomainError
from rogers_ramanujan.modular5 import (
    DenominatorVariant,
    SolveMethod,
    a_from_moduli,
    a_parametric,
    coefficient_variant_diagnostic,
    evaluate_parametric,
    multiplier_from_w,
    prop1_xy,
    residual_eq12,
    residual_eq13,
    residual_eq21,
    sextic_eq13,
    solve_L,
    w_from_L,
)
from rogers_ramanujan.rrcf import a_quotient, rrcf_cf, rrcf_derivative_q


def _pair(ctx, r):
    """Return (k_r, k_25r, w)."""
    k = singular_modulus(ctx, r).modulus.k
    k25 = singular_modulus(ctx, 25 * ctx.real(r)).modulus.k
    return k, k25, ctx.mp.sqrt(k * k25)


def test_solve_L_round_trip(ctx):
    """w_from_L inverts solve_L."""
    w = ctx.real("0.3")
    assert abs(w_from_L(ctx, solve_L(ctx, w)) - w) < ctx.tolerance()


def test_sextic_symmetry(ctx):
    """x^6 P(w^2/x) = w^6 P(x)."""
    w, x = ctx.real("0.2"), ctx.real("0.4")
    p = sextic_eq13(ctx, w)
    assert abs(x**6 * p(w**2 / x) - w**6 * p(x)) < ctx.tolerance()


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_prop1_recovers_the_moduli(ctx, r):
    """From w alone the pair (k_r, k_25r) comes back."""
    k, k25, w = _pair(ctx, r)
    solution = prop1_xy(ctx, w)
    assert abs(solution.x - k) < ctx.tolerance(10)
    assert abs(solution.y - k25) < ctx.tolerance(10)
    assert solution.eq12_residual < ctx.tolerance(10)
    assert solution.eq13_residual < ctx.tolerance(10)


def test_prop1_reproduces_evaluation2(ctx):
    """The printed w gives x = 1/sqrt2 and y = k_25."""
    solution = prop1_xy(ctx, evaluation2_w(ctx))
    assert abs(solution.x - evaluation2_x(ctx)) < ctx.tolerance(10)
    assert abs(solution.y - singular_modulus(ctx, 25).modulus.k) < ctx.tolerance(10)


def test_modular_equation_holds_for_singular_pairs(ctx):
    """Both residuals vanish on (k_2, k_50)."""
    k, k25, w = _pair(ctx, 2)
    assert abs(residual_eq12(ctx, k, k25)) < ctx.tolerance(10)
    assert residual_eq13(ctx, k, w) < ctx.tolerance(10)


def test_modular_equation_fails_for_generic_pairs(ctx):
    """A made-up pair does not satisfy it."""
    assert abs(residual_eq12(ctx, "0.5", "0.5")) > ctx.real("1e-3")


def test_prop1_rejects_w_near_one(ctx):
    """x would sit too close to 1 to keep its complement accurate."""
    with pytest.raises(DomainError):
        prop1_xy(ctx, "0.9999")


def test_prop1_rejects_w_outside_the_unit_interval(ctx):
    """w must lie in (0, 1)."""
    with pytest.raises(DomainError):
        prop1_xy(ctx, "1.5")


@pytest.mark.parametrize("r", [1, 2, 3])
def test_multiplier_from_w_matches_K_ratio(ctx, r):
    """The bracket formula equals K(k_25r)/K(k_r)."""
    k, _, w = _pair(ctx, r)
    assert abs(multiplier_from_w(ctx, k, w) - multiplier5(ctx, r).value) < ctx.tolerance(10)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_a_parametric_matches_eta_quotient(ctx, r):
    """a_r from (x, w) equals f(-q)^6 / (q f(-q^5)^6)."""
    k, _, w = _pair(ctx, r)
    q = singular_modulus(ctx, r).q_nome
    a = a_quotient(ctx, q).a
    assert abs(a_parametric(ctx, k, w) - a) / a < ctx.tolerance(15)
    assert abs(a_from_moduli(ctx, r) - a) / a < ctx.tolerance(15)


def test_only_one_denominator_variant_holds(ctx):
    """The -20 x w^3 denominator wins; the -20 x^3 w^3 form is off by about half a percent."""
    diagnostic = coefficient_variant_diagnostic(ctx, 1)
    assert diagnostic.winner == DenominatorVariant.EQ25
    assert diagnostic.errors[DenominatorVariant.EQ25] < ctx.tolerance(15)
    assert diagnostic.errors[DenominatorVariant.EQ23] > ctx.real("1e-3")


@pytest.mark.parametrize("r", [1, 2])
def test_w_relation_to_a_and_multiplier(ctx, r):
    """w^5 - k^2 w = k^3 (k^2 - 1) / (a_r M_5^3)."""
    assert residual_eq21(ctx, r) < ctx.tolerance(10)


def test_pipeline_recovers_r_R_and_derivative(ctx):
    """w for r = 2 runs all the way to R and R'."""
    _, _, w = _pair(ctx, 2)
    evaluation = evaluate_parametric(ctx, w)
    q = evaluation.q
    assert abs(evaluation.r - 2) < ctx.tolerance(10)
    assert abs(evaluation.R - rrcf_cf(ctx, q).R) < ctx.tolerance(15)
    exact = rrcf_derivative_q(ctx, q)
    assert abs(evaluation.R_prime - exact) / exact < ctx.tolerance(10)
    assert set(evaluation.residuals) == {"R_vs_cf", "eq12", "eq13", "a_vs_quotient"}


def test_pipeline_can_skip_the_derivative(fast_ctx):
    """with_derivative=False leaves R_prime unset."""
    evaluation = evaluate_parametric(fast_ctx, evaluation2_w(fast_ctx), with_derivative=False)
    assert evaluation.R_prime is None
    assert abs(evaluation.r - 1) < fast_ctx.tolerance(10)


@pytest.mark.parametrize("quarters", [1, 4, 16])
def test_prop1_falls_back_to_sextic_roots(ctx, monkeypatch, quarters):
    """With the radical route unavailable, root isolation on the sextic still finds k_r."""
    monkeypatch.setattr(modular5, "_radical_x", lambda *args: None)
    r = ctx.real(quarters) / 4
    k, k25, w = _pair(ctx, r)
    solution = prop1_xy(ctx, w)
    assert solution.method == SolveMethod.SEXTIC_ROOTS
    assert abs(solution.x - k) < ctx.tolerance(10)
    assert abs(solution.y - k25) < ctx.tolerance(10)


def test_pipeline_residuals_are_read_only(fast_ctx):
    """The residuals record of a frozen evaluation cannot be edited."""
    evaluation = evaluate_parametric(fast_ctx, evaluation2_w(fast_ctx), with_derivative=False)
    with pytest.raises(TypeError):
        evaluation.residuals["R_vs_cf"] = fast_ctx.real(0)
