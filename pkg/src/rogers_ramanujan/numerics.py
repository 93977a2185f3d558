"""Precision bookkeeping and the generic numerical kernels.

Every other module threads a NumericContext through its calls. The context
owns a private mpmath context at the working precision, so no function here
or elsewhere touches mpmath's global ``mp`` object.

Module Information:
    - Filename: numerics.py
    - Module: numerics
    - Location: src/rogers_ramanujan/

Key Concepts:
    - NumericContext: target digits, guard digits, working bits, iteration caps
    - Arithmetic-geometric mean (the kernel behind K)
    - Bracketed bisection and Newton polishing
    - Real-root isolation for polynomials of degree at most eight
"""

#####################################
# Imports At the Top
#####################################

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
import math

import mpmath
from mpmath.ctx_mp import MPContext

from .errors import (
    DegreeTooHighError,
    DerivativeVanishedError,
    DomainError,
    NonConvergenceError,
    NoSignChangeError,
)
from .utils_logger import logger

# Annotation alias. Values are instances of the owning context's own mpf subclass.
Real = mpmath.mpf

BITS_PER_DIGIT = 3.33
MIN_PRECISION_BITS = 64
MAX_ROOT_DEGREE = 8
# The AGM means stop shrinking a few ulps above 2^(-precision_bits) once rounding dominates.
AGM_SLACK_BITS = 4

#####################################
# Numeric context
#####################################


@dataclass(frozen=True)
class NumericContext:
    """Immutable precision policy shared by every operation.

    Attributes:
        target_digits: Decimal digits the caller wants to trust.
        guard_digits: Extra digits carried internally.
        precision_bits: Working binary precision; derived from the digits when 0.
        max_iter: Cap for iterative methods and continued-fraction depth.
        seed_grid: Number of cells in the sign-change scan of real_roots_in.
    """

    target_digits: int = 50
    guard_digits: int = 15
    precision_bits: int = 0
    max_iter: int = 10_000
    seed_grid: int = 1024
    _mp: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the policy, derive the working bits and build the private mpmath context."""
        if self.target_digits < 1:
            raise DomainError(f"target_digits must be positive, got {self.target_digits}")
        if self.guard_digits < 0:
            raise DomainError(f"guard_digits must be non-negative, got {self.guard_digits}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be at least 1, got {self.max_iter}")
        if self.seed_grid < 2:
            raise DomainError(f"seed_grid must be at least 2, got {self.seed_grid}")

        needed = max(
            MIN_PRECISION_BITS,
            math.ceil(BITS_PER_DIGIT * (self.target_digits + self.guard_digits)),
        )
        bits = self.precision_bits or needed
        if bits < needed:
            raise DomainError(
                f"precision_bits={bits} is below the {needed} bits needed for "
                f"{self.target_digits}+{self.guard_digits} digits"
            )
        object.__setattr__(self, "precision_bits", bits)

        mp = MPContext()
        mp.prec = bits
        object.__setattr__(self, "_mp", mp)

    @property
    def mp(self) -> MPContext:
        """Return the private mpmath context running at ``precision_bits``."""
        return self._mp

    @property
    def guard_bits(self) -> int:
        """Return the guard digits expressed in bits."""
        return math.ceil(BITS_PER_DIGIT * self.guard_digits)

    @property
    def eps(self) -> Real:
        """Return 2^(-precision_bits)."""
        return self.mp.ldexp(self.mp.mpf(1), -self.precision_bits)

    def tolerance(self, loss: int = 5) -> Real:
        """Return the acceptance bound 10^(-target_digits + loss) for residuals."""
        return self.mp.mpf(10) ** (loss - self.target_digits)

    def half_tolerance(self, loss: int = 4) -> Real:
        """Return 10^(-target_digits/2 + loss), the bound used for finite-difference oracles."""
        return self.mp.mpf(10) ** (loss - self.mp.mpf(self.target_digits) / 2)

    def real(self, value: object) -> Real:
        """Convert an int, str, float or mpf (from any context) into this context."""
        if isinstance(value, bool):
            raise DomainError("booleans are not real numbers here")
        result = self.mp.mpf(value)
        if not self.mp.isfinite(result):
            raise DomainError(f"non-finite value {value!r}")
        return result

    def with_digits(self, target_digits: int) -> "NumericContext":
        """Return a context with the same policy at a different target precision."""
        return NumericContext(
            target_digits=target_digits,
            guard_digits=self.guard_digits,
            max_iter=self.max_iter,
            seed_grid=self.seed_grid,
        )

    def doubled(self) -> "NumericContext":
        """Return a context at twice the target digits, used for stability checks."""
        return self.with_digits(2 * self.target_digits)

    def nstr(self, value: object, digits: int | None = None) -> str:
        """Render a value as a decimal string with the given number of significant digits."""
        return self.mp.nstr(value, digits or self.target_digits)


#####################################
# Intervals and polynomials
#####################################


@dataclass(frozen=True)
class Interval:
    """A closed search interval with ``lo < hi``."""

    lo: Real
    hi: Real

    def __post_init__(self) -> None:
        """Reject empty or reversed intervals."""
        if not self.lo < self.hi:
            raise DomainError(f"interval needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Real:
        """Return ``hi - lo``."""
        return self.hi - self.lo


@dataclass(frozen=True)
class Polynomial:
    """A real polynomial with coefficients stored constant term first.

    Trailing zero coefficients are dropped on construction so the leading
    coefficient is always nonzero.
    """

    ctx: NumericContext = field(repr=False, compare=False)
    coeffs: tuple[Real, ...]

    def __post_init__(self) -> None:
        """Convert coefficients into the context and strip zero leading terms."""
        values = [self.ctx.real(c) for c in self.coeffs]
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        if not values or (len(values) == 1 and values[0] == 0):
            raise DomainError("the zero polynomial has no degree")
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def of(cls, ctx: NumericContext, coeffs: Iterable[object]) -> "Polynomial":
        """Build a polynomial from coefficients given constant term first."""
        return cls(ctx, tuple(coeffs))

    @classmethod
    def monomial(cls, ctx: NumericContext) -> "Polynomial":
        """Return the polynomial x."""
        return cls(ctx, (0, 1))

    @property
    def degree(self) -> int:
        """Return the degree, ``len(coeffs) - 1``."""
        return len(self.coeffs) - 1

    @property
    def scale(self) -> Real:
        """Return the largest absolute coefficient."""
        return max(abs(c) for c in self.coeffs)

    def __call__(self, x: object) -> Real:
        """Evaluate the polynomial at x."""
        return self.ctx.mp.polyval(list(reversed(self.coeffs)), self.ctx.real(x))

    def derivative(self) -> "Polynomial":
        """Return the derivative polynomial; constants have none."""
        if self.degree == 0:
            raise DomainError("the derivative of a constant is the zero polynomial")
        return Polynomial(self.ctx, tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def _coerce(self, other: "Polynomial | object") -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial(self.ctx, (other,))

    def __add__(self, other: "Polynomial | object") -> "Polynomial":
        """Add two polynomials, or a polynomial and a constant."""
        rhs = self._coerce(other)
        size = max(len(self.coeffs), len(rhs.coeffs))
        zero = self.ctx.real(0)
        left = list(self.coeffs) + [zero] * (size - len(self.coeffs))
        right = list(rhs.coeffs) + [zero] * (size - len(rhs.coeffs))
        return Polynomial(self.ctx, tuple(a + b for a, b in zip(left, right, strict=True)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        """Negate every coefficient."""
        return Polynomial(self.ctx, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial | object") -> "Polynomial":
        """Subtract a polynomial or a constant."""
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "Polynomial":
        """Subtract this polynomial from a constant."""
        return self._coerce(other) - self

    def __mul__(self, other: "Polynomial | object") -> "Polynomial":
        """Multiply by a polynomial or a scalar."""
        rhs = self._coerce(other)
        out = [self.ctx.real(0)] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(rhs.coeffs):
                out[i + j] += a * b
        return Polynomial(self.ctx, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        """Raise to a non-negative integer power."""
        if exponent < 0:
            raise DomainError("polynomials only take non-negative integer powers")
        result = Polynomial(self.ctx, (1,))
        for _ in range(exponent):
            result = result * self
        return result


@dataclass(frozen=True)
class RealRoot:
    """A real root reported by real_roots_in."""

    value: Real
    multiplicity: int = 1


#####################################
# Kernels
#####################################


def agm(ctx: NumericContext, a: object, b: object) -> Real:
    """Return the arithmetic-geometric mean of two positive reals.

    Iterates until |a_n - b_n| <= 2^(AGM_SLACK_BITS - precision_bits) * a_n.
    A bound of 2^(-precision_bits) * a_n sits at the rounding floor of the
    square root and may never be met. With the 4-bit slack the result is within
    a few units in the last place of the exact mean.

    Raises:
        DomainError: If a or b is not positive.
        NonConvergenceError: If max_iter iterations do not suffice.
    """
    mp = ctx.mp
    a, b = ctx.real(a), ctx.real(b)
    if a <= 0 or b <= 0:
        raise DomainError(f"agm needs positive arguments, got a={a}, b={b}")
    if a == b:
        return a

    threshold = mp.ldexp(mp.mpf(1), AGM_SLACK_BITS - ctx.precision_bits)
    for iteration in range(1, ctx.max_iter + 1):
        a, b = (a + b) / 2, mp.sqrt(a * b)
        if abs(a - b) <= threshold * a:
            logger.debug(f"agm converged after {iteration} iterations")
            return (a + b) / 2
    raise NonConvergenceError(f"agm did not converge in {ctx.max_iter} iterations")


def bisect_root(ctx: NumericContext, f: Callable[[Real], Real], bracket: Interval) -> Real:
    """Find a root of a continuous function that changes sign on the bracket.

    Stops once the bracket is narrower than 2^(-precision_bits + guard_bits),
    relative to the magnitude of its endpoints.

    Raises:
        NoSignChangeError: If f has the same sign at both ends.
        NonConvergenceError: If max_iter halvings do not suffice.
    """
    mp = ctx.mp
    lo, hi = ctx.real(bracket.lo), ctx.real(bracket.hi)
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if mp.sign(f_lo) == mp.sign(f_hi):
        raise NoSignChangeError(f"no sign change on [{mp.nstr(lo, 8)}, {mp.nstr(hi, 8)}]")

    goal = mp.ldexp(mp.mpf(1), ctx.guard_bits - ctx.precision_bits) * max(1, abs(lo), abs(hi))
    for iteration in range(1, ctx.max_iter + 1):
        mid = (lo + hi) / 2
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if mp.sign(f_mid) == mp.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo < goal:
            logger.debug(f"bisection converged after {iteration} halvings")
            return (lo + hi) / 2
    raise NonConvergenceError(f"bisection did not converge in {ctx.max_iter} halvings")


def newton_refine(
    ctx: NumericContext,
    f: Callable[[Real], Real],
    f_prime: Callable[[Real], Real],
    x0: object,
) -> Real:
    """Polish a bisection-grade seed to full working precision.

    Raises:
        DerivativeVanishedError: If |f'| is negligible next to |f| at an iterate.
        NonConvergenceError: If max_iter steps do not suffice.
    """
    mp = ctx.mp
    x = ctx.real(x0)
    goal = mp.ldexp(mp.mpf(1), ctx.guard_bits - ctx.precision_bits)
    for iteration in range(1, ctx.max_iter + 1):
        fx = f(x)
        if fx == 0:
            return x
        dfx = f_prime(x)
        if dfx == 0 or abs(dfx) < ctx.eps * abs(fx):
            raise DerivativeVanishedError(f"f'({mp.nstr(x, 12)}) vanished")
        step = fx / dfx
        x -= step
        if abs(step) <= goal * max(1, abs(x)):
            logger.debug(f"newton converged after {iteration} steps")
            return x
    raise NonConvergenceError(f"newton did not converge in {ctx.max_iter} steps")


def _polish(ctx: NumericContext, p: Polynomial, cell: Interval) -> Real:
    """Bisect p on a sign-change cell, then try a Newton polish that stays inside it."""
    seed = bisect_root(ctx, p, cell)
    dp = p.derivative()
    try:
        refined = newton_refine(ctx, p, dp, seed)
    except (DerivativeVanishedError, NonConvergenceError):
        return seed
    return refined if cell.lo <= refined <= cell.hi else seed


def _multiplicity(ctx: NumericContext, p: Polynomial, x: Real, threshold: Real) -> int:
    """Count how many successive derivatives vanish at x (relative to their coefficient scale)."""
    count = 1
    q = p
    while q.degree >= 1:
        q = q.derivative()
        if abs(q(x)) >= threshold * q.scale:
            break
        count += 1
    return count


def _sign_change_cells(
    ctx: NumericContext, xs: Sequence[Real], values: Sequence[Real]
) -> Iterable[Interval]:
    mp = ctx.mp
    for i in range(len(xs) - 1):
        if values[i] != 0 and values[i + 1] != 0 and mp.sign(values[i]) != mp.sign(values[i + 1]):
            yield Interval(xs[i], xs[i + 1])


def real_roots_in(ctx: NumericContext, p: Polynomial, search: Interval) -> list[RealRoot]:
    """Return every real root of p in the interval, ascending, with multiplicities.

    Simple roots are isolated by a sign-change scan over ``ctx.seed_grid``
    uniform cells, bisected and Newton-polished. Roots of even multiplicity do
    not change sign, so the critical points of p are isolated the same way and
    kept when |p| there is below 2^(-precision_bits/2) times the largest
    coefficient. Roots closer than 2^(-precision_bits/3) are merged.

    Raises:
        DegreeTooHighError: If the degree exceeds eight.
    """
    if p.degree > MAX_ROOT_DEGREE:
        raise DegreeTooHighError(f"degree {p.degree} exceeds {MAX_ROOT_DEGREE}")
    if p.degree == 0:
        return []

    mp = ctx.mp
    lo, hi = ctx.real(search.lo), ctx.real(search.hi)
    cells = ctx.seed_grid
    xs = [lo + (hi - lo) * i / cells for i in range(cells + 1)]
    values = [p(x) for x in xs]

    candidates = [x for x, v in zip(xs, values, strict=True) if v == 0]
    candidates.extend(_polish(ctx, p, cell) for cell in _sign_change_cells(ctx, xs, values))

    zero_level = mp.ldexp(p.scale, -(ctx.precision_bits // 2))
    if p.degree >= 2:
        dp = p.derivative()
        d_values = [dp(x) for x in xs]
        for cell in _sign_change_cells(ctx, xs, d_values):
            critical = _polish(ctx, dp, cell)
            if abs(p(critical)) < zero_level:
                candidates.append(critical)

    merge_distance = mp.ldexp(mp.mpf(1), -(ctx.precision_bits // 3))
    vanish_level = mp.ldexp(mp.mpf(1), -(ctx.precision_bits // 3))
    roots: list[RealRoot] = []
    for x in sorted(candidates):
        if roots and abs(x - roots[-1].value) <= merge_distance * max(1, abs(x)):
            continue
        roots.append(RealRoot(x, _multiplicity(ctx, p, x, vanish_level)))

    logger.debug(f"real_roots_in: degree {p.degree}, {len(roots)} roots in [{lo}, {hi}]")
    return roots


def continued_fraction_tail(
    ctx: NumericContext, numerator: Callable[[int], Real], q: Real
) -> tuple[Real, int]:
    """Evaluate 1 + a_1/(1 + a_2/(1 + ...)) by backward recurrence.

    The partial numerators a_n must decay like q^n. The starting depth is
    ceil(precision_bits * ln 2 / -ln q); the depth doubles until deepening by
    eight more levels moves the value by at most four ulps.

    Returns:
        The value and the depth that produced it.

    Raises:
        NonConvergenceError: If the required depth exceeds max_iter.
    """
    mp = ctx.mp

    def evaluate(depth: int) -> Real:
        tail = ctx.real(1)
        for n in range(depth, 0, -1):
            tail = 1 + numerator(n) / tail
        return tail

    estimate = mp.ceil(ctx.precision_bits * mp.ln2 / -mp.log(q))
    if estimate > ctx.max_iter:
        raise NonConvergenceError(
            f"continued fraction at q={mp.nstr(q, 10)} needs depth {mp.nstr(estimate, 8)} "
            f"> max_iter={ctx.max_iter}"
        )
    depth = max(1, int(estimate))
    while depth + 8 <= ctx.max_iter:
        value, deeper = evaluate(depth), evaluate(depth + 8)
        if abs(deeper - value) <= mp.ldexp(abs(deeper), 2 - ctx.precision_bits):
            logger.debug(f"continued fraction stable at depth {depth + 8}")
            return deeper, depth + 8
        depth *= 2
    raise NonConvergenceError(f"continued fraction did not stabilise within depth {ctx.max_iter}")


__all__ = [
    "Interval",
    "NumericContext",
    "Polynomial",
    "Real",
    "RealRoot",
    "agm",
    "bisect_root",
    "continued_fraction_tail",
    "newton_refine",
    "real_roots_in",
]
