"""Complete elliptic integral K, singular moduli and the degree-5 multiplier.

K is computed through the AGM. The singular modulus k_r, defined by
K(k')/K(k) = sqrt(r), comes from the theta quotient k = theta_2^2/theta_3^2
at q = exp(-pi*sqrt(r)); bisection on the defining equation is kept as an
independent check. For r < 1 the modulus is taken from the complementary
point 1/r, so the theta series never run at q > exp(-pi).

Module Information:
    - Filename: elliptic.py
    - Module: elliptic
    - Location: src/rogers_ramanujan/
"""

from dataclasses import dataclass

from .errors import DomainError, ResidualTooLargeError
from .numerics import Interval, NumericContext, Polynomial, Real, agm, bisect_root
from .qseries import QNome, theta2, theta3, theta4
from .utils_logger import logger

#####################################
# Types
#####################################


@dataclass(frozen=True)
class Modulus:
    """A modulus pair (k, k') with k^2 + k'^2 = 1.

    Either value may round to exactly 1 when the other is tiny.
    """

    k: Real
    k_prime: Real

    def __post_init__(self) -> None:
        """Keep both members in (0, 1]."""
        if not (0 < self.k <= 1 and 0 < self.k_prime <= 1):
            raise DomainError(f"modulus pair out of range: k={self.k}, k'={self.k_prime}")

    @classmethod
    def from_k(cls, ctx: NumericContext, k: object) -> "Modulus":
        """Complete k with k' = sqrt((1-k)(1+k))."""
        k = ctx.real(k)
        if not 0 < k < 1:
            raise DomainError(f"modulus must satisfy 0 < k < 1, got {k}")
        return cls(k, ctx.mp.sqrt((1 - k) * (1 + k)))

    def complementary(self) -> "Modulus":
        """Return (k', k)."""
        return Modulus(self.k_prime, self.k)

    def residual(self) -> Real:
        """Return |k^2 + k'^2 - 1|."""
        return abs(self.k**2 + self.k_prime**2 - 1)


@dataclass(frozen=True)
class SingularPoint:
    """The singular modulus at r together with K(k_r) and the nome exp(-pi*sqrt(r))."""

    r: Real
    modulus: Modulus
    K_value: Real
    q_nome: Real


@dataclass(frozen=True)
class Multiplier5:
    """M_5(r) = K(k_25r)/K(k_r) and the residual of its defining quintic-times-linear equation."""

    r: Real
    value: Real
    eq20_residual: Real

    @property
    def multiplier(self) -> Real:
        """Return m = 1/M_5(r)."""
        return 1 / self.value


#####################################
# K
#####################################


def elliptic_k(ctx: NumericContext, k: object) -> Real:
    """Return K(k) = pi / (2 agm(1, sqrt(1-k^2))) for 0 <= k < 1.

    Moduli within 2^(-precision_bits/2) of 1 are refused: the complementary
    modulus would carry no precision. Use elliptic_k_from_complement when k'
    is known directly.
    """
    mp = ctx.mp
    k = ctx.real(k)
    if k < 0 or k >= 1 - mp.ldexp(mp.mpf(1), -(ctx.precision_bits // 2)):
        raise DomainError(f"K(k) needs 0 <= k < 1 away from 1, got k={mp.nstr(k, 15)}")
    k_prime = mp.sqrt((1 - k) * (1 + k))
    return mp.pi / (2 * agm(ctx, 1, k_prime))


def elliptic_k_from_complement(ctx: NumericContext, k_prime: object) -> Real:
    """Return K(k) given the complementary modulus k' in (0, 1]."""
    mp = ctx.mp
    k_prime = ctx.real(k_prime)
    if not 0 < k_prime <= 1:
        raise DomainError(f"complementary modulus must lie in (0, 1], got {k_prime}")
    return mp.pi / (2 * agm(ctx, 1, k_prime))


#####################################
# Singular moduli
#####################################


def singular_modulus_by_bisection(ctx: NumericContext, r: object) -> Modulus:
    """Solve K(k')/K(k) = sqrt(r) for k by bisection.

    The period ratio equals agm(1, k')/agm(1, k) and decreases in k. Only
    r >= 1 is bisected; r < 1 is answered by swapping the pair at 1/r.
    """
    mp = ctx.mp
    r = ctx.real(r)
    if r <= 0:
        raise DomainError(f"r must be positive, got {r}")
    if r < 1:
        return singular_modulus_by_bisection(ctx, 1 / r).complementary()

    root_r = mp.sqrt(r)

    def period_ratio_gap(k: Real) -> Real:
        k_prime = mp.sqrt((1 - k) * (1 + k))
        return agm(ctx, 1, k_prime) / agm(ctx, 1, k) - root_r

    bracket = Interval(mp.ldexp(mp.mpf(1), -ctx.precision_bits), ctx.real("0.75"))
    return Modulus.from_k(ctx, bisect_root(ctx, period_ratio_gap, bracket))


def singular_modulus(ctx: NumericContext, r: object, *, cross_check: bool = False) -> SingularPoint:
    """Return the singular modulus k_r, K(k_r) and the nome for r > 0.

    Args:
        ctx: Numeric context.
        r: Positive real.
        cross_check: Also solve the period-ratio equation by bisection and raise
            ResidualTooLargeError if the two routes disagree beyond tolerance.
    """
    mp = ctx.mp
    r = ctx.real(r)
    if r <= 0:
        raise DomainError(f"r must be positive, got {r}")

    if r < 1:
        dual = singular_modulus(ctx, 1 / r)
        modulus = dual.modulus.complementary()
    else:
        q = QNome.from_r(ctx, r)
        t2, t3, t4 = theta2(ctx, q), theta3(ctx, q), theta4(ctx, q)
        modulus = Modulus(t2**2 / t3**2, t4**2 / t3**2)

    point = SingularPoint(
        r=r,
        modulus=modulus,
        K_value=elliptic_k_from_complement(ctx, modulus.k_prime),
        q_nome=mp.exp(-mp.pi * mp.sqrt(r)),
    )

    if cross_check:
        other = singular_modulus_by_bisection(ctx, r)
        gap = abs(other.k - modulus.k)
        logger.debug(f"k_r theta vs bisection at r={mp.nstr(r, 10)}: {mp.nstr(gap, 3)}")
        if gap >= ctx.tolerance():
            raise ResidualTooLargeError("k_r cross-check", gap, ctx.tolerance())
    return point


def inverse_singular_modulus(ctx: NumericContext, x: object, x_prime: object | None = None) -> Real:
    """Return r = (K(x')/K(x))^2, the r with k_r = x.

    Pass x_prime when the complementary modulus is known more accurately than
    sqrt(1 - x^2), e.g. for x close to 1.
    """
    mp = ctx.mp
    x = ctx.real(x)
    if not 0 < x < 1:
        raise DomainError(f"inverse modulus needs 0 < x < 1, got {mp.nstr(x, 15)}")
    x_prime = mp.sqrt((1 - x) * (1 + x)) if x_prime is None else ctx.real(x_prime)
    if not 0 < x_prime < 1:
        raise DomainError(f"complementary modulus must lie in (0, 1), got {mp.nstr(x_prime, 15)}")
    return (agm(ctx, 1, x_prime) / agm(ctx, 1, x)) ** 2


#####################################
# Degree-5 multiplier
#####################################


def eq20_polynomial(ctx: NumericContext, modulus: Modulus) -> Polynomial:
    """Return (5x - 1)^5 (1 - x) - 256 k^2 k'^2 x, whose roots include M_5(r)."""
    x = Polynomial.monomial(ctx)
    kk = modulus.k**2 * modulus.k_prime**2
    return (5 * x - 1) ** 5 * (1 - x) - x * (256 * kk)


def multiplier5(ctx: NumericContext, r: object) -> Multiplier5:
    """Return M_5(r) = K(k_25r)/K(k_r).

    The value always comes from the K ratio; the polynomial only supplies a
    residual check, scaled by its largest coefficient.
    """
    mp = ctx.mp
    base = singular_modulus(ctx, r)
    lifted = singular_modulus(ctx, 25 * base.r)
    value = lifted.K_value / base.K_value
    if not ctx.real(1) / 5 < value < 1:
        raise DomainError(f"M_5 out of (1/5, 1): {value}")

    p = eq20_polynomial(ctx, base.modulus)
    residual = abs(p(value)) / p.scale
    logger.debug(f"M_5({mp.nstr(base.r, 10)}) = {mp.nstr(value, 20)}, eq20 residual {mp.nstr(residual, 3)}")
    if residual >= ctx.tolerance():
        raise ResidualTooLargeError("eq20", residual, ctx.tolerance())
    return Multiplier5(r=base.r, value=value, eq20_residual=residual)


__all__ = [
    "Modulus",
    "Multiplier5",
    "SingularPoint",
    "elliptic_k",
    "elliptic_k_from_complement",
    "eq20_polynomial",
    "inverse_singular_modulus",
    "multiplier5",
    "singular_modulus",
    "singular_modulus_by_bisection",
]
