"""Parsing of polynomials, scalars and curve equations given on the command line.

Polynomials are written in ``x`` with ASCII operators, e.g. ``"x^7 - 2"`` or
``"x^2 - 1/3"``, or as little-endian JSON arrays such as ``"[-2, 0, 1]"``.
Coefficients are rationals; over ``Fq`` they may involve the generator ``a``
of F_q over F_p and over ``Fpt`` the variable ``t``.
"""

import json
from fractions import Fraction
from tokenize import TokenError
from typing import Any, FrozenSet, List

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from python.algebra.fields import FieldDescriptor, FieldKind
from python.algebra.poly import Poly
from python.cli.exceptions import InputError
from python.cli.serialization import decode_element
from python.curves.models import HyperellipticModel

X, Y = sympy.symbols("x y")
GENERATOR = sympy.Symbol("a")
T = sympy.Symbol("t")

_TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication_application)
_LOCALS = {"x": X, "y": Y, "a": GENERATOR, "t": T}


def _coefficient_symbols(field: FieldDescriptor) -> FrozenSet[sympy.Symbol]:
    if field.kind == FieldKind.FINITE:
        return frozenset({GENERATOR})
    if field.kind == FieldKind.RATIONAL_FUNCTION:
        return frozenset({T})
    return frozenset()


def parse_expression(text: str) -> sympy.Expr:
    """Parse ASCII input, ``^`` meaning power, into a sympy expression.

    Raises:
        InputError: If the text is not a well-formed expression
    """
    if not text.strip():
        raise InputError(text, "empty input")
    try:
        expr = parse_expr(text, local_dict=dict(_LOCALS), transformations=_TRANSFORMATIONS)
    except (SyntaxError, TokenError, TypeError, ValueError, sympy.SympifyError) as e:
        raise InputError(text, f"not a polynomial expression ({e})") from e
    if not isinstance(expr, sympy.Expr):
        raise InputError(text, "not a polynomial expression")
    return sympy.expand(expr)


def _rational(expr: sympy.Expr, text: str) -> Fraction:
    if not expr.is_Rational:
        raise InputError(text, f"{expr} is not a rational number")
    return Fraction(int(expr.p), int(expr.q))


def _residues(expr: sympy.Expr, symbol: sympy.Symbol, p: int, text: str) -> List[int]:
    """Little-endian coefficients of a polynomial in symbol, reduced mod p."""
    try:
        coeffs = sympy.Poly(expr, symbol).all_coeffs()
    except sympy.PolynomialError as e:
        raise InputError(text, f"{expr} is not a polynomial in {symbol}") from e
    prime = FieldDescriptor.prime(p)
    try:
        return [prime.coerce(_rational(c, text)).as_int() for c in reversed(coeffs)]
    except ZeroDivisionError as e:
        raise InputError(text, str(e)) from e


def _coefficient(expr: sympy.Expr, field: FieldDescriptor, text: str) -> Any:
    """Map a coefficient expression into field."""
    extra = expr.free_symbols - _coefficient_symbols(field)
    if extra:
        names = ", ".join(sorted(str(s) for s in extra))
        raise InputError(text, f"unexpected symbol(s) {names} in a coefficient over {field}")
    if field.kind == FieldKind.FINITE:
        return field.coerce(_residues(expr, GENERATOR, field.p, text))
    if field.kind == FieldKind.RATIONAL_FUNCTION:
        num, den = sympy.fraction(sympy.together(expr))
        den_coeffs = _residues(sympy.expand(den), T, field.p, text)
        if not any(den_coeffs):
            raise InputError(text, f"denominator {den} vanishes mod {field.p}")
        return field.from_polys(
            tuple(_residues(sympy.expand(num), T, field.p, text)), tuple(den_coeffs)
        )
    try:
        return field.coerce(_rational(expr, text))
    except ZeroDivisionError as e:
        raise InputError(text, str(e)) from e


def _poly_in(expr: sympy.Expr, symbol: sympy.Symbol, field: FieldDescriptor, text: str) -> Poly:
    extra = expr.free_symbols - {symbol} - _coefficient_symbols(field)
    if extra:
        names = ", ".join(sorted(str(s) for s in extra))
        raise InputError(text, f"unexpected symbol(s) {names}")
    try:
        coeffs = sympy.Poly(expr, symbol).all_coeffs()
    except sympy.PolynomialError as e:
        raise InputError(text, f"not a polynomial in {symbol}") from e
    return Poly(field, [_coefficient(c, field, text) for c in reversed(coeffs)])


def _json_coefficient(value: Any, field: FieldDescriptor, text: str) -> Any:
    if isinstance(value, str):
        return _coefficient(parse_expression(value), field, text)
    if isinstance(value, bool) or not isinstance(value, (int, list)):
        raise InputError(text, f"unsupported coefficient {value!r}")
    if isinstance(value, int):
        return field.coerce(value)
    try:
        return decode_element(field, value)
    except (TypeError, ValueError) as e:
        raise InputError(text, f"bad coefficient {value!r} ({e})") from e


def parse_poly(text: str, field: FieldDescriptor) -> Poly:
    """Parse a univariate polynomial in x over field.

    Args:
        text: ASCII such as ``"x^5 - x - 1"`` or a little-endian JSON array
        field: Coefficient field

    Returns:
        The polynomial

    Raises:
        InputError: If the text is malformed or a coefficient does not map into field

    Example Usage:
        ```python
        parse_poly("x^7 - 2", FieldDescriptor.rationals())  # Poly(Q, [-2, 0, ..., 1])
        parse_poly("[1, 1, 0, 1]", FieldDescriptor.prime(2))  # x^3 + x + 1
        ```
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            values = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputError(text, f"malformed JSON array ({e.msg})") from e
        if not isinstance(values, list):
            raise InputError(text, "expected a JSON array")
        return Poly(field, [_json_coefficient(v, field, text) for v in values])
    return _poly_in(parse_expression(stripped), X, field, text)


def parse_scalar(text: str, field: FieldDescriptor) -> Any:
    """Parse one element of field, e.g. ``"-1/3"`` or ``"a + 1"`` over Fq."""
    return _coefficient(parse_expression(text), field, text)


def parse_curve(text: str, field: FieldDescriptor) -> HyperellipticModel:
    """Parse ``y^2 + Q(x) y = R(x)``, with both sides free to hold any terms.

    The equation must have degree two in y with a constant coefficient of y^2.

    Raises:
        InputError: If the text is not such an equation
        ValueError: If the resulting model is invalid, e.g. Q = 0 in characteristic 2
    """
    if text.count("=") != 1:
        raise InputError(text, "expected exactly one '='")
    lhs, rhs = (parse_expression(side) for side in text.split("="))
    expr = sympy.expand(lhs - rhs)
    extra = expr.free_symbols - {X, Y} - _coefficient_symbols(field)
    if extra:
        names = ", ".join(sorted(str(s) for s in extra))
        raise InputError(text, f"unexpected symbol(s) {names}")
    try:
        in_y = sympy.Poly(expr, Y)
    except sympy.PolynomialError as e:
        raise InputError(text, "not polynomial in y") from e
    if in_y.degree() != 2:
        raise InputError(text, f"expected degree 2 in y, got {in_y.degree()}")
    c2, c1, c0 = (sympy.expand(c) for c in in_y.all_coeffs())
    if c2.has(X):
        raise InputError(text, "the coefficient of y^2 must not involve x")
    lead = _coefficient(c2, field, text)
    if not lead:
        raise InputError(text, f"the coefficient of y^2 vanishes over {field}")
    Q = _poly_in(c1, X, field, text)
    R = _poly_in(sympy.expand(-c0), X, field, text)
    return HyperellipticModel(
        Poly(field, [c / lead for c in Q.coeffs]), Poly(field, [c / lead for c in R.coeffs])
    )
