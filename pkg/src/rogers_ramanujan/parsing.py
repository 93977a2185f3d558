"""Turn command-line strings into reals without passing through binary floats.

Accepted input is a decimal literal, a fraction such as ``2/9``, or a small
expression over ``pi``, ``e``, ``sqrt``, ``cbrt``, ``exp``, ``log`` and
``+ - * / **``. Shorthands ``sqrt2`` (for ``sqrt(2)``) and ``2pi`` (for
``2*pi``) are expanded first. The expression is evaluated node by node from
its syntax tree; nothing else is allowed.
"""

import ast
from collections.abc import Callable
import operator
import re

from .errors import InputError
from .numerics import NumericContext, Real

MAX_INPUT_LENGTH = 256
MAX_EXPONENT = 10_000

_SQRT_SHORTHAND = re.compile(r"\b(sqrt|cbrt)(\d+(?:\.\d+)?)")
_IMPLICIT_PRODUCT = re.compile(r"(\d|\))\s*(?=(pi|sqrt|cbrt|exp|log|\())")

_BINARY: dict[type[ast.operator], Callable[[Real, Real], Real]] = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def normalize(text: str) -> str:
    """Expand shorthands: ``sqrt2`` -> ``sqrt(2)``, ``2pi`` -> ``2*pi``, ``^`` -> ``**``."""
    source = text.strip().replace("^", "**")
    source = _SQRT_SHORTHAND.sub(r"\1(\2)", source)
    return _IMPLICIT_PRODUCT.sub(r"\1*", source)


def parse_real(ctx: NumericContext, text: str) -> Real:
    """Parse text into a finite real in ctx.

    Raises:
        InputError: If the text is not an accepted expression or does not evaluate to a finite real.
    """
    if not text or len(text) > MAX_INPUT_LENGTH:
        raise InputError(f"expected a number or expression, got {text!r}")
    source = normalize(text)
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse {text!r}: {exc.msg}") from exc

    value = _evaluate(ctx, source, tree.body)
    if not ctx.mp.isfinite(value):
        raise InputError(f"{text!r} does not evaluate to a finite real")
    return value


def _evaluate(ctx: NumericContext, source: str, node: ast.expr) -> Real:
    mp = ctx.mp
    match node:
        case ast.Constant(value=bool()):
            raise InputError("booleans are not numbers")
        case ast.Constant(value=int() | float()):
            # decimal literals are re-read from the source text, never from the float
            literal = ast.get_source_segment(source, node)
            try:
                return ctx.real(literal)
            except (TypeError, ValueError) as exc:
                raise InputError(f"cannot read the literal {literal!r}") from exc
        case ast.Name(id="pi"):
            return +mp.pi
        case ast.Name(id="e"):
            return +mp.e
        case ast.UnaryOp(op=ast.USub(), operand=operand):
            return -_evaluate(ctx, source, operand)
        case ast.UnaryOp(op=ast.UAdd(), operand=operand):
            return _evaluate(ctx, source, operand)
        case ast.BinOp(left=left, op=ast.Pow(), right=right):
            base, exponent = _evaluate(ctx, source, left), _evaluate(ctx, source, right)
            if abs(exponent) > MAX_EXPONENT:
                raise InputError(f"exponent {mp.nstr(exponent, 8)} is too large")
            return _real_only(mp.power(base, exponent))
        case ast.BinOp(left=left, op=op, right=right) if type(op) in _BINARY:
            lhs, rhs = _evaluate(ctx, source, left), _evaluate(ctx, source, right)
            if isinstance(op, ast.Div) and rhs == 0:
                raise InputError("division by zero")
            return _BINARY[type(op)](lhs, rhs)
        case ast.Call(func=ast.Name(id=name), args=[arg], keywords=[]) if name in _FUNCTIONS:
            argument = _evaluate(ctx, source, arg)
            return _FUNCTIONS[name](ctx, argument)
    raise InputError(f"unsupported syntax in {source!r}")


def _real_only(value: object) -> Real:
    if not hasattr(value, "real") or getattr(value, "imag", 0) != 0:
        raise InputError("expression leaves the real line")
    return value


def _sqrt(ctx: NumericContext, x: Real) -> Real:
    if x < 0:
        raise InputError("sqrt of a negative number")
    return ctx.mp.sqrt(x)


def _log(ctx: NumericContext, x: Real) -> Real:
    if x <= 0:
        raise InputError("log of a non-positive number")
    return ctx.mp.log(x)


def _exp(ctx: NumericContext, x: Real) -> Real:
    if x > MAX_EXPONENT:
        raise InputError("exp argument too large")
    return ctx.mp.exp(x)


_FUNCTIONS: dict[str, Callable[[NumericContext, Real], Real]] = {
    "sqrt": _sqrt,
    "cbrt": lambda ctx, x: ctx.mp.cbrt(x),
    "exp": _exp,
    "log": _log,
}


__all__ = ["normalize", "parse_real"]
