"""Test R(q), a_r and R'(q).

Module Information:
    - Filename: test_rrcf.py
    - Module: test_rrcf
    - Location: tests/
"""

import pytest

from rogers_ramanujan.closed_forms import evaluation1_R, evaluation1_R_prime
from rogers_ramanujan.errors import DomainError, NonConvergenceError
from rogers_ramanujan.qseries import QNome
from rogers_ramanujan.rrcf import (
    Route,
    RRValue,
    a_of_r,
    a_quotient,
    rrcf_cf,
    rrcf_derivative_fd,
    rrcf_derivative_q,
    rrcf_from_a,
    rrcf_via_identity,
)


def _q_exp_minus_2pi(ctx):
    mp = ctx.mp
    return mp.exp(-2 * mp.pi)


def test_continued_fraction_reproduces_evaluation1(ctx):
    """R(exp(-2pi)) = -(1 + sqrt5)/2 + sqrt((5 + sqrt5)/2)."""
    value = rrcf_cf(ctx, _q_exp_minus_2pi(ctx))
    assert value.route == Route.CONTINUED_FRACTION
    assert abs(value.R - evaluation1_R(ctx)) < ctx.tolerance()
    assert ctx.nstr(value.R, 10) == "0.2840790438"


@pytest.mark.parametrize("q", ["0.05", "0.15", "0.25", "0.35"])
def test_two_routes_agree(ctx, q):
    """The continued fraction and the eta quotient give the same R."""
    direct = rrcf_cf(ctx, q)
    eta = rrcf_via_identity(ctx, q)
    assert eta.route == Route.ETA_QUOTIENT
    assert abs(direct.R - eta.R) < ctx.tolerance()


@pytest.mark.parametrize("q", ["0.1", "0.3"])
def test_a_from_R_matches_eta_quotient(ctx, q):
    """1/R^5 - 11 - R^5 = f(-q)^6 / (q f(-q^5)^6)."""
    a = a_quotient(ctx, q).a
    assert abs(rrcf_cf(ctx, q).a - a) / a < ctx.tolerance()


def test_small_q_leading_term(ctx):
    """R(q) / q^(1/5) = 1 - q + O(q^2)."""
    q = ctx.real("1e-20")
    ratio = rrcf_cf(ctx, q).R / ctx.mp.root(q, 5)
    assert abs(ratio - 1) < ctx.real("1e-19")


def test_a_at_exp_minus_pi(fast_ctx):
    """a_1 is about 17.5458."""
    mp = fast_ctx.mp
    a = a_quotient(fast_ctx, mp.exp(-mp.pi)).a
    assert abs(a - fast_ctx.real("17.5458")) < fast_ctx.real("1e-3")


def test_rrcf_from_a_inverts(ctx):
    """Inverting a gives back R."""
    value = rrcf_cf(ctx, "0.2")
    assert abs(rrcf_from_a(ctx, a_of_r(value.R)) - value.R) < ctx.tolerance()
    assert abs(rrcf_from_a(ctx, a_quotient(ctx, "0.2")) - value.R) < ctx.tolerance()


def test_rrcf_from_a_negative_branch(ctx):
    """For a + 11 < 0 the root is taken in its cancellation-free form."""
    mp = ctx.mp
    assert abs(rrcf_from_a(ctx, -12) ** 5 - (1 + mp.sqrt(5)) / 2) < ctx.tolerance()


def test_rrcf_from_a_rejects_a_below_minus_13(ctx):
    """a <= -13 has no positive R."""
    with pytest.raises(DomainError):
        rrcf_from_a(ctx, -13)


def test_rrvalue_checks_its_range(ctx):
    """R outside (0, 1) is not a continued-fraction value."""
    with pytest.raises(DomainError):
        RRValue(q=QNome.of(ctx, "0.1"), R=ctx.real(1), route=Route.CONTINUED_FRACTION, digits=50)


def test_derivative_reproduces_closed_form(ctx):
    """R'(exp(-2pi)) from the eta-product formula matches the radical closed form."""
    q = _q_exp_minus_2pi(ctx)
    expected = evaluation1_R_prime(ctx)
    assert abs(rrcf_derivative_q(ctx, q) - expected) / expected < ctx.tolerance(10)
    assert abs(expected - ctx.real("30.1408")) < ctx.real("1e-3")


def test_derivative_matches_finite_difference(ctx):
    """A central difference agrees to about half the digits."""
    q = _q_exp_minus_2pi(ctx)
    exact = rrcf_derivative_q(ctx, q)
    assert abs(rrcf_derivative_fd(ctx, q) - exact) / exact < ctx.half_tolerance(5)


def test_continued_fraction_caps_depth(ctx):
    """q = 0.999 would need a depth far beyond max_iter."""
    with pytest.raises(NonConvergenceError):
        rrcf_cf(ctx, "0.999")
