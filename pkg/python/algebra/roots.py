"""Roots of univariate polynomials lying in the coefficient field.

Over Q rational roots come from sympy's factorization over the integers.
Over finite fields the distinct roots are split out of gcd(f, x^q - x) by
the Cantor-Zassenhaus equal-degree method, with the trace map replacing the
quadratic character in characteristic 2.
"""

from fractions import Fraction
from typing import Any, List, Optional

import sympy

from python.algebra.fields import FieldDescriptor, FieldKind
from python.algebra.poly import Poly, gcd
from python.algebra.random_source import SplitMix64


def roots_in_field(f: Poly, rng: Optional[SplitMix64] = None) -> Optional[List[Any]]:
    """Distinct roots of f in its coefficient field.

    Args:
        f: Nonzero polynomial over a FieldDescriptor
        rng: Generator for the splitting step over finite fields

    Returns:
        Sorted list of roots over Q, a list over finite fields, or None over
        F_p(t) where no root finder is available
    """
    field = f.ring
    if not f:
        raise ValueError("every element is a root of the zero polynomial")
    if f.degree < 1:
        return []
    if field.kind == FieldKind.RATIONALS:
        return _rational_roots(f)
    if field.is_finite:
        return finite_field_roots(f, rng or SplitMix64(0))
    return None


def _rational_roots(f: Poly) -> List[Fraction]:
    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f.coeffs)
    )
    roots = sympy.Poly(expr, x, domain="QQ").ground_roots()
    return sorted(Fraction(str(r)) for r in roots)


def finite_field_roots(f: Poly, rng: SplitMix64) -> List[Any]:
    """All distinct roots of f in the finite field it is defined over."""
    field: FieldDescriptor = f.ring
    q = field.order
    x = Poly.x(field)
    split = gcd(f, x.pow_mod(q, f) - x)
    out: List[Any] = []
    _split_linear(split, field, rng, out)
    return out


def _split_linear(g: Poly, field: FieldDescriptor, rng: SplitMix64, out: List[Any]) -> None:
    if g.degree < 1:
        return
    if g.degree == 1:
        out.append(-g.coeff(0) / g.coeff(1))
        return
    q = field.order
    x = Poly.x(field)
    while True:
        a = field.random_element(rng, 1)
        if field.characteristic == 2:
            z = (x * field.random_element(rng, 1) + a) % g
            trial = Poly(field)
            power = z
            for _ in range(field.n):
                trial = trial + power
                power = (power * power) % g
        else:
            trial = (x + a).pow_mod((q - 1) // 2, g) - 1
        h = gcd(g, trial)
        if 0 < h.degree < g.degree:
            _split_linear(h, field, rng, out)
            _split_linear(g.exact_div(h), field, rng, out)
            return
