"""Ramanujan's cubic continued fraction V(q) and its link to singular moduli.

V(q) = q^(1/3) / (1 + (q + q^2)/(1 + (q^2 + q^4)/(1 + (q^3 + q^6)/(1 + ...))))

With T = sqrt(1 - 8 V^3), the modulus of the nome is
k^2 = (1 - T)(3 + T)^3 / ((1 + T)(3 - T)^3), which is the map V_i. The
degree-3 modular equation ties k_r to k_9r, and V(q^(1/3)) is an algebraic
function of V(q), so every value in the chain V(q), V(q^(1/3)), ... maps back
to a known r through k^(-1).
"""

from dataclasses import dataclass
from enum import StrEnum

from .elliptic import inverse_singular_modulus
from .errors import DomainError
from .numerics import NumericContext, Polynomial, Real, continued_fraction_tail
from .qseries import QNome
from .utils_logger import logger


class Mod3Variant(StrEnum):
    """Form of the degree-3 modular equation used by residual_mod3."""

    CLASSICAL = "classical"
    PRINTED = "printed"


@dataclass(frozen=True)
class CubicValue:
    """V(q) together with T = sqrt(1 - 8V^3) and the modulus k it determines."""

    q: QNome
    V: Real
    T: Real
    k: Real
    k_prime: Real

    def __post_init__(self) -> None:
        """V lies in (0, 1/2) and T in (0, 1)."""
        if not (0 < self.V < 0.5 and 0 < self.T < 1):
            raise DomainError(f"cubic value out of range: V={self.V}, T={self.T}")

    @property
    def eq31_residual(self) -> Real:
        """Return |T^2 + 8V^3 - 1|."""
        return abs(self.T**2 + 8 * self.V**3 - 1)

    @property
    def eq32_residual(self) -> Real:
        """Return |k^2 (1 + T)(3 - T)^3 - (1 - T)(3 + T)^3|."""
        T = self.T
        return abs(self.k**2 * (1 + T) * (3 - T) ** 3 - (1 - T) * (3 + T) ** 3)


@dataclass(frozen=True)
class CubicParametric:
    """x = G(w3) = k_r and the parametric cubic value t for w3 = k_r k_9r."""

    w3: Real
    x: Real
    k_9r: Real
    t: Real
    mod3_residual: Real


#####################################
# The continued fraction
#####################################


def _T(ctx: NumericContext, V: Real) -> Real:
    return ctx.mp.sqrt(1 - 8 * V**3)


def _check_cubic_range(ctx: NumericContext, value: object) -> Real:
    value = ctx.real(value)
    if not 0 < value < ctx.real(1) / 2:
        raise DomainError(f"cubic value must lie in (0, 1/2), got {ctx.mp.nstr(value, 15)}")
    return value


def cubic_cf(ctx: NumericContext, q: "QNome | object") -> CubicValue:
    """Evaluate V(q) by backward recurrence and derive T and k from it.

    Raises:
        NonConvergenceError: If q is so close to 1 that the depth exceeds max_iter.
    """
    mp = ctx.mp
    nome = QNome.of(ctx, q)
    q_value = nome.value
    tail, depth = continued_fraction_tail(ctx, lambda n: q_value**n + q_value ** (2 * n), q_value)
    V = mp.cbrt(q_value) / tail
    logger.debug(f"V({mp.nstr(q_value, 12)}) by continued fraction, depth {depth}")
    return CubicValue(q=nome, V=V, T=_T(ctx, V), k=Vi_of(ctx, V), k_prime=Vi_complement(ctx, V))


def Vi_of(ctx: NumericContext, t: object) -> Real:
    """Return V_i(t) = sqrt((1 - T)/(1 + T) * ((3 + T)/(3 - T))^3) with T = sqrt(1 - 8t^3)."""
    mp = ctx.mp
    t = _check_cubic_range(ctx, t)
    T = _T(ctx, t)
    one_minus_T = 8 * t**3 / (1 + T)
    return mp.sqrt(one_minus_T / (1 + T) * ((3 + T) / (3 - T)) ** 3)


def Vi_complement(ctx: NumericContext, t: object) -> Real:
    """Return the complementary modulus 4 T^(3/2) / sqrt((1 + T)(3 - T)^3) of V_i(t)."""
    mp = ctx.mp
    t = _check_cubic_range(ctx, t)
    T = _T(ctx, t)
    return 4 * T * mp.sqrt(T) / mp.sqrt((1 + T) * (3 - T) ** 3)


#####################################
# Parametric side
#####################################


def G_of(ctx: NumericContext, w3: object) -> Real:
    """Return x = G(w3), the k_r with k_r k_9r = w3.

    x = w3 / sqrt(2 s - 3 w3 + 2 s^3 - 2 s sqrt(1 - 3 s + 4 w3 - 3 s^3 + w3^2)), s = sqrt(w3).

    Raises:
        DomainError: If w3 is outside (0, 1) or a radicand is negative.
    """
    mp = ctx.mp
    w3 = ctx.real(w3)
    if not 0 < w3 < 1:
        raise DomainError(f"w3 must lie in (0, 1), got {mp.nstr(w3, 15)}")
    s = mp.sqrt(w3)
    inner = 1 - 3 * s + 4 * w3 - 3 * s**3 + w3**2
    if inner < 0:
        raise DomainError(f"inner radicand of G is negative at w3={mp.nstr(w3, 15)}")
    outer = 2 * s - 3 * w3 + 2 * s**3 - 2 * s * mp.sqrt(inner)
    if outer <= 0:
        raise DomainError(f"outer radicand of G is not positive at w3={mp.nstr(w3, 15)}")
    x = w3 / mp.sqrt(outer)
    if not w3 < x < 1:
        raise DomainError(f"G({mp.nstr(w3, 15)}) = {mp.nstr(x, 15)} is not a modulus above w3")
    return x


def t_parametric(ctx: NumericContext, x: object, w3: object) -> Real:
    """Return t = (1 - x^2)^(1/3) w3^(1/4) / (2^(1/3) x^(1/3) (1 - sqrt(w3)))."""
    mp = ctx.mp
    x, w3 = ctx.real(x), ctx.real(w3)
    if not (0 < x < 1 and 0 < w3 < 1):
        raise DomainError("t_parametric needs x and w3 in (0, 1)")
    return mp.cbrt((1 - x) * (1 + x)) * mp.root(w3, 4) / (mp.cbrt(2 * x) * (1 - mp.sqrt(w3)))


def residual_mod3(
    ctx: NumericContext,
    k_r: object,
    k_9r: object,
    variant: Mod3Variant = Mod3Variant.CLASSICAL,
) -> Real:
    """Return the degree-3 modular equation residual for the pair (k_r, k_9r).

    CLASSICAL: sqrt(k_r k_9r) + sqrt(k'_r k'_9r) - 1.
    PRINTED: sqrt(k_r k'_r) + sqrt(k_9r k'_9r) - 1, which singular moduli do not satisfy.
    """
    mp = ctx.mp
    k, k9 = ctx.real(k_r), ctx.real(k_9r)
    if not (0 < k < 1 and 0 < k9 < 1):
        raise DomainError("degree-3 modular equation needs both moduli in (0, 1)")
    kp = mp.sqrt((1 - k) * (1 + k))
    k9p = mp.sqrt((1 - k9) * (1 + k9))
    if variant == Mod3Variant.PRINTED:
        return mp.sqrt(k * kp) + mp.sqrt(k9 * k9p) - 1
    return mp.sqrt(k * k9) + mp.sqrt(kp * k9p) - 1


def cubic_parametric(ctx: NumericContext, w3: object) -> CubicParametric:
    """Return x = G(w3), k_9r = w3/x and t for a given w3."""
    x = G_of(ctx, w3)
    w3 = ctx.real(w3)
    k9 = w3 / x
    return CubicParametric(
        w3=w3,
        x=x,
        k_9r=k9,
        t=t_parametric(ctx, x, w3),
        mod3_residual=abs(residual_mod3(ctx, x, k9)),
    )


#####################################
# Cube-root chain
#####################################


def step_cube_root(ctx: NumericContext, V: object) -> Real:
    """Return V(q^(1/3)) = (V (1 - V + V^2) / (1 + 2V + 4V^2))^(1/3) given V = V(q)."""
    V = _check_cubic_range(ctx, V)
    return ctx.mp.cbrt(V * (1 - V + V**2) / (1 + 2 * V + 4 * V**2))


def cube_root_chain(ctx: NumericContext, V: object, steps: int) -> list[Real]:
    """Return [V, V(q^(1/3)), ..., V(q^(1/3^steps))] starting from V = V(q)."""
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    chain = [_check_cubic_range(ctx, V)]
    for _ in range(steps):
        chain.append(step_cube_root(ctx, chain[-1]))
    return chain


def identity36_residual(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return |k^(-1)(V_i(V(q))) - (log q)^2 / pi^2|."""
    mp = ctx.mp
    value = cubic_cf(ctx, q)
    r = inverse_singular_modulus(ctx, value.k, value.k_prime)
    return abs(r - mp.log(value.q.value) ** 2 / mp.pi**2)


def rho3_sextic(ctx: NumericContext) -> Polynomial:
    """Return 512x^6 - 4608x^5 + 51264x^4 + 50048x^3 - 6408x^2 - 72x - 1."""
    return Polynomial.of(ctx, [-1, -72, -6408, 50048, 51264, -4608, 512])


def rho3_residual(ctx: NumericContext, rho: object) -> Real:
    """Return |P(rho)| / sum |terms| for the rho_3 sextic."""
    mp = ctx.mp
    rho = ctx.real(rho)
    terms = [c * rho**i for i, c in enumerate(rho3_sextic(ctx).coeffs)]
    return abs(mp.fsum(terms)) / mp.fsum(abs(t) for t in terms)


__all__ = [
    "CubicParametric",
    "CubicValue",
    "G_of",
    "Mod3Variant",
    "Vi_complement",
    "Vi_of",
    "cube_root_chain",
    "cubic_cf",
    "cubic_parametric",
    "identity36_residual",
    "residual_mod3",
    "rho3_residual",
    "rho3_sextic",
    "step_cube_root",
    "t_parametric",
]
