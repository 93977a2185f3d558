"""The Rogers-Ramanujan continued fraction R(q), a_r and R'(q).

Two independent routes produce R(q): the continued fraction itself and the
quadratic in R that follows from the eta quotient at q^(1/5). The quantity
a = 1/R^5 - 11 - R^5 has its own eta-quotient form and inverts back to R.
"""

from dataclasses import dataclass
from enum import StrEnum

from .errors import DomainError
from .numerics import NumericContext, Real, continued_fraction_tail
from .qseries import QNome, euler_f
from .utils_logger import logger


class Route(StrEnum):
    """How an RRValue was computed."""

    CONTINUED_FRACTION = "continued_fraction"
    ETA_QUOTIENT = "eta_quotient"


class ASource(StrEnum):
    """Where an AValue came from."""

    ETA_QUOTIENT = "eta_quotient"
    PARAMETRIC = "parametric"
    MODULI = "moduli"


@dataclass(frozen=True)
class RRValue:
    """R(q) for 0 < q < 1, with the route that produced it."""

    q: QNome
    R: Real
    route: Route
    digits: int

    def __post_init__(self) -> None:
        """R lies strictly between 0 and 1."""
        if not 0 < self.R < 1:
            raise DomainError(f"R(q) must lie in (0, 1), got {self.R}")

    @property
    def a(self) -> Real:
        """Return 1/R^5 - 11 - R^5."""
        return a_of_r(self.R)


@dataclass(frozen=True)
class AValue:
    """a_r = 1/R^5 - 11 - R^5 and where it was computed."""

    a: Real
    source: ASource


def a_of_r(R: Real) -> Real:
    """Return 1/R^5 - 11 - R^5."""
    r5 = R**5
    return 1 / r5 - 11 - r5


def rrcf_cf(ctx: NumericContext, q: "QNome | object") -> RRValue:
    """Evaluate q^(1/5) / (1 + q/(1 + q^2/(1 + q^3/(1 + ...)))) by backward recurrence.

    Raises:
        NonConvergenceError: If q is so close to 1 that the depth exceeds max_iter.
    """
    mp = ctx.mp
    nome = QNome.of(ctx, q)
    q_value = nome.value
    tail, depth = continued_fraction_tail(ctx, lambda n: q_value**n, q_value)
    R = mp.root(q_value, 5) / tail
    logger.debug(f"R({mp.nstr(q_value, 12)}) by continued fraction, depth {depth}")
    return RRValue(q=nome, R=R, route=Route.CONTINUED_FRACTION, digits=ctx.target_digits)


def rrcf_via_identity(ctx: NumericContext, q: "QNome | object") -> RRValue:
    """Compute R(q) from c = f(-q^(1/5)) / (q^(1/5) f(-q^5)).

    R is the positive root of 1/R - 1 - R = c, taken in the cancellation-free
    form 2 / ((c + 1) + sqrt((c + 1)^2 + 4)).
    """
    mp = ctx.mp
    nome = QNome.of(ctx, q)
    q_fifth = mp.root(nome.value, 5)
    c = euler_f(ctx, q_fifth) / (q_fifth * euler_f(ctx, nome.value**5))
    R = 2 / ((c + 1) + mp.sqrt((c + 1) ** 2 + 4))
    return RRValue(q=nome, R=R, route=Route.ETA_QUOTIENT, digits=ctx.target_digits)


def a_quotient(ctx: NumericContext, q: "QNome | object") -> AValue:
    """Return a = f(-q)^6 / (q f(-q^5)^6)."""
    q_value = QNome.of(ctx, q).value
    a = euler_f(ctx, q_value) ** 6 / (q_value * euler_f(ctx, q_value**5) ** 6)
    return AValue(a=a, source=ASource.ETA_QUOTIENT)


def rrcf_from_a(ctx: NumericContext, a: "AValue | object") -> Real:
    """Invert a = 1/R^5 - 11 - R^5 for the positive R.

    R^5 is the positive root of X^2 + (a + 11) X - 1 = 0.

    Raises:
        DomainError: If a <= -13.
    """
    mp = ctx.mp
    a = ctx.real(a.a if isinstance(a, AValue) else a)
    if a <= -13:
        raise DomainError(f"a must exceed -13, got {mp.nstr(a, 15)}")
    b = a + 11
    disc = mp.sqrt(b**2 + 4)
    r5 = 2 / (b + disc) if b >= 0 else (disc - b) / 2
    return mp.root(r5, 5)


def rrcf_derivative_q(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return R'(q) = (1/5) q^(-5/6) f(-q)^4 R(q) (1/R^5 - 11 - R^5)^(1/6)."""
    mp = ctx.mp
    q_value = QNome.of(ctx, q).value
    R = rrcf_cf(ctx, q_value).R
    a = a_of_r(R)
    if a <= 0:
        raise DomainError(f"1/R^5 - 11 - R^5 must be positive, got {mp.nstr(a, 15)}")
    return (
        mp.power(q_value, ctx.real(-5) / 6)
        * euler_f(ctx, q_value) ** 4
        * R
        * mp.root(a, 6)
        / 5
    )


def rrcf_derivative_fd(ctx: NumericContext, q: "QNome | object", h: object | None = None) -> Real:
    """Central difference (R(q+h) - R(q-h)) / 2h with h = 10^(-target_digits/2) by default."""
    q_value = QNome.of(ctx, q).value
    step = ctx.mp.mpf(10) ** (-ctx.mp.mpf(ctx.target_digits) / 2) if h is None else ctx.real(h)
    upper = rrcf_cf(ctx, q_value + step).R
    lower = rrcf_cf(ctx, q_value - step).R
    return (upper - lower) / (2 * step)


__all__ = [
    "ASource",
    "AValue",
    "RRValue",
    "Route",
    "a_of_r",
    "a_quotient",
    "rrcf_cf",
    "rrcf_derivative_fd",
    "rrcf_derivative_q",
    "rrcf_from_a",
    "rrcf_via_identity",
]
