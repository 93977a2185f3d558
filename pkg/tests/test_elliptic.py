"""Test K, singular moduli, the inverse modulus and the degree-5 multiplier.

Module Information:
    - Filename: test_elliptic.py
    - Module: test_elliptic
    - Location: tests/
"""

import pytest

from rogers_ramanujan.closed_forms import eq37_complement, eq37_modulus
from rogers_ramanujan.elliptic import (
    Modulus,
    elliptic_k,
    elliptic_k_from_complement,
    eq20_polynomial,
    inverse_singular_modulus,
    multiplier5,
    singular_modulus,
    singular_modulus_by_bisection,
)
from rogers_ramanujan.errors import DomainError
from rogers_ramanujan.numerics import Interval, real_roots_in


@pytest.mark.parametrize("k", ["0.1", "0.5", "0.9", "0.999"])
def test_elliptic_k_matches_mpmath(ctx, k):
    """mpmath's ellipk takes the parameter m = k^2."""
    mp = ctx.mp
    expected = mp.ellipk(mp.mpf(k) ** 2)
    assert abs(elliptic_k(ctx, k) - expected) / expected < ctx.tolerance()


def test_elliptic_k_from_complement_matches(ctx):
    """Both entry points agree when k' is exact."""
    mp = ctx.mp
    k = mp.mpf("0.6")
    assert abs(elliptic_k_from_complement(ctx, "0.8") - elliptic_k(ctx, k)) < ctx.tolerance()


def test_elliptic_k_refuses_k_near_one(ctx):
    """k = 1 has no finite K."""
    with pytest.raises(DomainError):
        elliptic_k(ctx, 1)


def test_known_singular_moduli(ctx):
    """k_1 = 1/sqrt2, k_2 = sqrt2 - 1, k_4 = 3 - 2 sqrt2."""
    mp = ctx.mp
    s2 = mp.sqrt(2)
    assert abs(singular_modulus(ctx, 1).modulus.k - 1 / s2) < ctx.tolerance()
    assert abs(singular_modulus(ctx, 2).modulus.k - (s2 - 1)) < ctx.tolerance()
    assert abs(singular_modulus(ctx, 4).modulus.k - (3 - 2 * s2)) < ctx.tolerance()


def test_singular_modulus_below_one_uses_the_complement(ctx):
    """k_(1/r) = k'_r."""
    half = singular_modulus(ctx, "0.5").modulus
    two = singular_modulus(ctx, 2).modulus
    assert abs(half.k - two.k_prime) < ctx.tolerance()
    assert half.residual() < ctx.tolerance()


@pytest.mark.parametrize("r", ["0.25", "1", "3", "9"])
def test_theta_route_agrees_with_bisection(ctx, r):
    """The period-ratio bisection is an independent check."""
    theta = singular_modulus(ctx, r, cross_check=True).modulus.k
    bisected = singular_modulus_by_bisection(ctx, r).k
    assert abs(theta - bisected) < ctx.tolerance()


@pytest.mark.parametrize("r", ["0.25", "0.5", "1", "2", "5", "25"])
def test_inverse_round_trip(ctx, r):
    """k^(-1)(k_r) = r."""
    modulus = singular_modulus(ctx, r).modulus
    recovered = inverse_singular_modulus(ctx, modulus.k, modulus.k_prime)
    assert abs(recovered - ctx.real(r)) < ctx.tolerance()


def test_inverse_of_printed_two_ninths_modulus(ctx):
    """The radical for k_(2/9) inverts to 2/9."""
    r = inverse_singular_modulus(ctx, eq37_modulus(ctx), eq37_complement(ctx))
    assert abs(r - ctx.real(2) / 9) < ctx.tolerance(10)


def test_inverse_rejects_out_of_range(ctx):
    """x must lie in (0, 1)."""
    with pytest.raises(DomainError):
        inverse_singular_modulus(ctx, "1.5")


def test_modulus_from_k_rejects_out_of_range(ctx):
    """Moduli live in (0, 1)."""
    with pytest.raises(DomainError):
        Modulus.from_k(ctx, "1.5")


def test_multiplier_at_one_is_a_radical(ctx):
    """M_5(1) = (2 + sqrt5)/5."""
    mp = ctx.mp
    m5 = multiplier5(ctx, 1)
    assert abs(m5.value - (2 + mp.sqrt(5)) / 5) < ctx.tolerance(10)
    assert m5.eq20_residual < ctx.tolerance()
    assert abs(m5.multiplier * m5.value - 1) < ctx.tolerance()


def test_multiplier_is_a_tangential_root_at_one(ctx):
    """At r = 1 the multiplier is a double root, found through the critical points."""
    m5 = multiplier5(ctx, 1).value
    p = eq20_polynomial(ctx, singular_modulus(ctx, 1).modulus)
    roots = real_roots_in(ctx, p, Interval(ctx.real(1) / 5, ctx.real(1)))
    matches = [root for root in roots if abs(root.value - m5) < ctx.real("1e-20")]
    assert len(matches) == 1
    assert matches[0].multiplicity == 2


def test_multiplier_is_a_simple_root_at_two(ctx):
    """At r = 2 the K ratio is one of the simple real roots."""
    m5 = multiplier5(ctx, 2).value
    p = eq20_polynomial(ctx, singular_modulus(ctx, 2).modulus)
    roots = real_roots_in(ctx, p, Interval(ctx.real(1) / 5, ctx.real(1)))
    assert any(abs(root.value - m5) < ctx.tolerance() and root.multiplicity == 1 for root in roots)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_multiplier_residuals(ctx, r):
    """The K ratio satisfies its polynomial to tolerance."""
    assert multiplier5(ctx, r).eq20_residual < ctx.tolerance(10)
