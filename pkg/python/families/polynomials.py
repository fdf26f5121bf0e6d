"""Polynomials shared by the explicit families."""

from typing import Any

import sympy

from python.algebra.etale import EtaleAlgebra, EtaleElement
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly, PolynomialRing, resultant

Q = FieldDescriptor.rationals()


def kummer_polynomial(ell: int, m: Any, field: FieldDescriptor = Q) -> Poly:
    """x^ell - m."""
    return Poly.monomial(field, ell) - field.coerce(m)


def cyclotomic_polynomial(n: int, field: FieldDescriptor = Q) -> Poly:
    """The n-th cyclotomic polynomial, mapped into field."""
    X = sympy.Symbol("X")
    coeffs = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()
    return Poly(field, [int(c) for c in reversed(coeffs)])


def alpha_element(algebra: EtaleAlgebra) -> EtaleElement:
    """alpha = b (1 - b) for the generator b of the algebra."""
    b = algebra.gen()
    return b - b * b


def alpha_resultant(modulus: Poly) -> Poly:
    """Res_y(modulus(y), X - y + y^2) made monic, the polynomial of y (1 - y).

    The resultant is taken over the polynomial ring in X, so the result is
    exact whatever the base field.
    """
    field = modulus.ring
    ring = PolynomialRing(field, var="X")
    lifted = Poly(ring, [ring.coerce(c) for c in modulus.coeffs])
    quadratic = Poly(ring, [Poly.x(field), ring.coerce(-1), ring.coerce(1)])
    return resultant(lifted, quadratic).monic()


def order_at(poly: Poly, root: Any) -> int:
    """Multiplicity of root as a zero of poly; -1 for the zero polynomial."""
    shifted = poly.compose(Poly(poly.ring, [poly.ring.coerce(root), 1]))
    return shifted.order_at_zero()
