"""q-products, Euler's function and the Jacobi theta series.

Every infinite sum or product here is truncated at the first term below
2^(-precision_bits) and returns a SeriesResult carrying the number of terms
used and a geometric bound on what was left out. Nomes above 0.9 are refused;
modular transformations of the series are not provided.

The eta-quotient residuals compare f(-q) against the elliptic-integral
closed forms at q = exp(-pi*sqrt(r)).
"""

from collections.abc import Callable
from dataclasses import dataclass

from .errors import DomainError, NonConvergenceError
from .numerics import NumericContext, Real
from .utils_logger import logger

MAX_SERIES_NOME = "0.9"


@dataclass(frozen=True)
class QNome:
    """A nome q with 0 < q < 1."""

    value: Real

    def __post_init__(self) -> None:
        """Reject nomes outside the open unit interval."""
        if not 0 < self.value < 1:
            raise DomainError(f"nome must satisfy 0 < q < 1, got {self.value}")

    @classmethod
    def of(cls, ctx: NumericContext, q: "QNome | object") -> "QNome":
        """Wrap a raw value, or convert an existing nome into ctx."""
        if isinstance(q, QNome):
            return cls(ctx.real(q.value))
        return cls(ctx.real(q))

    @classmethod
    def from_r(cls, ctx: NumericContext, r: object) -> "QNome":
        """Return q = exp(-pi*sqrt(r)) for r > 0."""
        r = ctx.real(r)
        if r <= 0:
            raise DomainError(f"r must be positive, got {r}")
        mp = ctx.mp
        return cls(mp.exp(-mp.pi * mp.sqrt(r)))


@dataclass(frozen=True)
class SeriesResult:
    """A truncated series or product with its truncation bookkeeping.

    Attributes:
        value: The partial sum or partial product.
        terms: Number of terms (or factors) actually used.
        tail_bound: Bound on |exact - value|.
        digits_believed: Decimal digits of value the tail bound vouches for.
    """

    value: Real
    terms: int
    tail_bound: Real
    digits_believed: int


@dataclass(frozen=True)
class EtaQuotientReport:
    """Both sides of an eta-quotient identity at a singular value and their relative residual."""

    r: Real
    lhs: Real
    rhs: Real
    residual: Real

    @classmethod
    def compare(cls, r: Real, lhs: Real, rhs: Real) -> "EtaQuotientReport":
        """Build a report with residual |lhs - rhs| / max(|lhs|, |rhs|)."""
        return cls(r=r, lhs=lhs, rhs=rhs, residual=abs(lhs - rhs) / max(abs(lhs), abs(rhs)))


#####################################
# Helpers
#####################################


def _series_nome(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return q as a real in ctx, refusing nomes the plain series cannot handle."""
    value = QNome.of(ctx, q).value
    if value > ctx.real(MAX_SERIES_NOME):
        raise DomainError(f"q={ctx.nstr(value, 10)} is above {MAX_SERIES_NOME}; series refused")
    return value


def _result(ctx: NumericContext, value: Real, terms: int, tail: Real) -> SeriesResult:
    mp = ctx.mp
    if tail == 0 or value == 0:
        believed = ctx.target_digits
    else:
        believed = min(ctx.target_digits, max(0, int(mp.floor(-mp.log10(tail / abs(value))))))
    return SeriesResult(value=value, terms=terms, tail_bound=tail, digits_believed=believed)


#####################################
# Products
#####################################


def qpochhammer_result(
    ctx: NumericContext, a: object, q: "QNome | object", n: int | None = None
) -> SeriesResult:
    """Return (a; q)_n, or (a; q)_infinity when n is None.

    The infinite product stops at the first factor with |a q^K| < 2^(-precision_bits).
    The bound |log tail| <= 2|a| q^K / (1 - q) is turned into an absolute bound.
    """
    mp = ctx.mp
    a = ctx.real(a)

    if n is not None:
        if n < 0:
            raise DomainError(f"n must be non-negative, got {n}")
        q_value = QNome.of(ctx, q).value
        value = mp.fprod(1 - a * q_value**k for k in range(n))
        return _result(ctx, ctx.real(value), n, ctx.real(0))

    q_value = _series_nome(ctx, q)
    factors = []
    term = a
    while abs(term) >= ctx.eps:
        if len(factors) >= ctx.max_iter:
            raise NonConvergenceError(f"q-product needs more than {ctx.max_iter} factors")
        factors.append(1 - term)
        term *= q_value

    value = mp.fprod(factors)
    log_tail = 2 * abs(term) / (1 - q_value)
    tail = abs(value) * mp.expm1(log_tail)
    logger.debug(f"(a;q)_inf used {len(factors)} factors, tail <= {mp.nstr(tail, 3)}")
    return _result(ctx, value, len(factors), tail)


def qpochhammer(ctx: NumericContext, a: object, q: "QNome | object", n: int | None = None) -> Real:
    """Return the value of (a; q)_n (n=None for the infinite product)."""
    return qpochhammer_result(ctx, a, q, n).value


def euler_f_product(ctx: NumericContext, q: "QNome | object") -> SeriesResult:
    """Return f(-q) = (q; q)_infinity from the raw product."""
    q_value = _series_nome(ctx, q)
    return qpochhammer_result(ctx, q_value, q_value)


#####################################
# Series
#####################################


def euler_f_result(ctx: NumericContext, q: "QNome | object") -> SeriesResult:
    """Return f(-q) from the pentagonal-number series.

    f(-q) = 1 + sum_{k>=1} (-1)^k (q^(k(3k-1)/2) + q^(k(3k+1)/2)).
    """
    mp = ctx.mp
    q_value = _series_nome(ctx, q)
    terms = [ctx.real(1)]
    k = 1
    while True:
        lead = q_value ** (k * (3 * k - 1) // 2)
        if lead < ctx.eps:
            break
        if k > ctx.max_iter:
            raise NonConvergenceError(f"pentagonal series needs more than {ctx.max_iter} terms")
        sign = -1 if k % 2 else 1
        terms.append(sign * (lead + q_value ** (k * (3 * k + 1) // 2)))
        k += 1

    value = mp.fsum(terms)
    tail = 2 * lead / (1 - q_value)
    return _result(ctx, value, len(terms), tail)


def euler_f(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return f(-q) = prod_{n>=1} (1 - q^n), via the pentagonal-number series."""
    return euler_f_result(ctx, q).value


def _theta_sum(
    ctx: NumericContext,
    q_value: Real,
    exponent: Callable[[int], object],
    sign: Callable[[int], int],
) -> tuple[Real, int, Real]:
    """Sum sign(n) q^exponent(n) for n = 0, 1, ... until a term drops below eps."""
    mp = ctx.mp
    terms = []
    n = 0
    while True:
        term = mp.power(q_value, exponent(n))
        if term < ctx.eps and n > 0:
            break
        if n > ctx.max_iter:
            raise NonConvergenceError(f"theta series needs more than {ctx.max_iter} terms")
        terms.append(sign(n) * term)
        n += 1
    return mp.fsum(terms), len(terms), term / (1 - q_value)


def theta2_result(ctx: NumericContext, q: "QNome | object") -> SeriesResult:
    """theta_2(q) = 2 sum_{n>=0} q^((n+1/2)^2)."""
    q_value = _series_nome(ctx, q)
    quarter = ctx.real(1) / 4
    total, terms, tail = _theta_sum(ctx, q_value, lambda n: n * n + n + quarter, lambda n: 1)
    return _result(ctx, 2 * total, terms, 2 * tail)


def theta3_result(ctx: NumericContext, q: "QNome | object") -> SeriesResult:
    """theta_3(q) = 1 + 2 sum_{n>=1} q^(n^2)."""
    q_value = _series_nome(ctx, q)
    total, terms, tail = _theta_sum(ctx, q_value, lambda n: (n + 1) ** 2, lambda n: 1)
    return _result(ctx, 1 + 2 * total, terms + 1, 2 * tail)


def theta4_result(ctx: NumericContext, q: "QNome | object") -> SeriesResult:
    """theta_4(q) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2)."""
    q_value = _series_nome(ctx, q)
    total, terms, tail = _theta_sum(
        ctx, q_value, lambda n: (n + 1) ** 2, lambda n: 1 if n % 2 else -1
    )
    return _result(ctx, 1 + 2 * total, terms + 1, 2 * tail)


def theta2(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return theta_2(q)."""
    return theta2_result(ctx, q).value


def theta3(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return theta_3(q)."""
    return theta3_result(ctx, q).value


def theta4(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return theta_4(q)."""
    return theta4_result(ctx, q).value


def jacobi_residual(ctx: NumericContext, q: "QNome | object") -> Real:
    """Return |theta_3^4 - theta_2^4 - theta_4^4| / theta_3^4."""
    t2, t3, t4 = theta2(ctx, q), theta3(ctx, q), theta4(ctx, q)
    return abs(t3**4 - t2**4 - t4**4) / t3**4


#####################################
# Eta-quotient identities
#####################################


def residual_eq8(ctx: NumericContext, r: object) -> EtaQuotientReport:
    """Compare f(-q)^8 with 2^(8/3) pi^-4 q^(-1/3) k^(2/3) k'^(8/3) K(k)^4 at q = exp(-pi sqrt r)."""
    from .elliptic import singular_modulus  # deferred: elliptic imports this module

    mp = ctx.mp
    point = singular_modulus(ctx, r)
    q = point.q_nome
    k, kp = point.modulus.k, point.modulus.k_prime
    lhs = euler_f(ctx, q) ** 8
    third = ctx.real(1) / 3
    rhs = (
        mp.power(2, 8 * third)
        / mp.pi**4
        * mp.power(q, -third)
        * mp.power(k, 2 * third)
        * mp.power(kp, 8 * third)
        * point.K_value**4
    )
    report = EtaQuotientReport.compare(point.r, lhs, rhs)
    logger.debug(f"eq8 at r={mp.nstr(point.r, 8)}: residual {mp.nstr(report.residual, 3)}")
    return report


def residual_eq9(ctx: NumericContext, r: object) -> EtaQuotientReport:
    """Compare f(-q^2)^6 with 2 k k' K(k)^3 / (pi^3 q^(1/2)) at q = exp(-pi sqrt r)."""
    from .elliptic import singular_modulus

    mp = ctx.mp
    point = singular_modulus(ctx, r)
    q = point.q_nome
    lhs = euler_f(ctx, q**2) ** 6
    rhs = 2 * point.modulus.k * point.modulus.k_prime * point.K_value**3 / (mp.pi**3 * mp.sqrt(q))
    report = EtaQuotientReport.compare(point.r, lhs, rhs)
    logger.debug(f"eq9 at r={mp.nstr(point.r, 8)}: residual {mp.nstr(report.residual, 3)}")
    return report


__all__ = [
    "EtaQuotientReport",
    "QNome",
    "SeriesResult",
    "euler_f",
    "euler_f_product",
    "euler_f_result",
    "jacobi_residual",
    "qpochhammer",
    "qpochhammer_result",
    "residual_eq8",
    "residual_eq9",
    "theta2",
    "theta2_result",
    "theta3",
    "theta3_result",
    "theta4",
    "theta4_result",
]
