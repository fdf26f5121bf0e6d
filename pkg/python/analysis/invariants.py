"""Classical invariants of binary quartics and ternary cubics.

For ell = a x^4 + b x^3 + c x^2 + d x + e (a = 0 for cubics) the curve
y^2 = ell has j-invariant 256 I^3 / disc, where disc is the discriminant of
ell as a binary quartic form. For monic quartics and monic cubics that is the
ordinary polynomial discriminant; for a cubic with leading coefficient b it
is b^2 times it. The integer identity 4 I^3 - J^2 = 27 disc keeps the
formula meaningful in characteristic 3.
"""

from dataclasses import dataclass
from typing import Any, List, Tuple

import sympy

from python.algebra.exceptions import UnsupportedCharacteristicError
from python.algebra.linalg import determinant
from python.algebra.poly import Poly, discriminant
from python.curves.forms import TernaryForm
from python.curves.models import PlaneCubic


@dataclass(frozen=True)
class JData:
    """Invariants of y^2 = ell for a cubic or quartic ell.

    Attributes:
        I: 12ae - 3bd + c^2
        J: 72ace + 9bcd - 27ad^2 - 27eb^2 - 2c^3
        disc: Binary-form discriminant of ell
        j: 256 I^3 / disc
    """

    I: Any
    J: Any
    disc: Any
    j: Any


def _quartic_coefficients(ell: Poly) -> Tuple[Any, Any, Any, Any, Any]:
    c = [ell.coeff(i) for i in range(5)]
    return c[4], c[3], c[2], c[1], c[0]


def binary_discriminant(ell: Poly) -> Any:
    """Discriminant of ell read as a binary quartic form."""
    if ell.degree == 4:
        return discriminant(ell)
    if ell.degree == 3:
        return ell.lc * ell.lc * discriminant(ell)
    raise ValueError(f"expected a cubic or quartic, got degree {ell.degree}")


def j_invariant(ell: Poly) -> JData:
    """I, J, discriminant and j-invariant of y^2 = ell.

    Args:
        ell: Polynomial of degree 3 or 4 over a field of characteristic not 2

    Raises:
        UnsupportedCharacteristicError: In characteristic 2
        ValueError: If the degree is wrong or the discriminant vanishes
    """
    if ell.ring.characteristic == 2:
        raise UnsupportedCharacteristicError(2, "j_invariant of y^2 = ell")
    disc = binary_discriminant(ell)
    if not disc:
        raise ValueError(f"discriminant of {ell} vanishes")
    a, b, c, d, e = _quartic_coefficients(ell)
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3
    return JData(I=I, J=J, disc=disc, j=256 * I**3 / disc)


def generic_invariants(degree: int) -> Tuple[sympy.Expr, sympy.Expr, sympy.Expr]:
    """I, J and the binary discriminant of a generic cubic or quartic over Z."""
    a, b, c, d, e, x = sympy.symbols("a b c d e x")
    if degree == 4:
        ell = a * x**4 + b * x**3 + c * x**2 + d * x + e
        disc = sympy.discriminant(ell, x)
    elif degree == 3:
        a = sympy.Integer(0)
        ell = b * x**3 + c * x**2 + d * x + e
        disc = b**2 * sympy.discriminant(ell, x)
    else:
        raise ValueError(f"expected degree 3 or 4, got {degree}")
    I = 12 * a * e - 3 * b * d + c**2
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d**2 - 27 * e * b**2 - 2 * c**3
    return I, J, sympy.expand(disc)


def invariant_identity_residual(degree: int) -> sympy.Expr:
    """Expanded 4 I^3 - J^2 - 27 disc for the generic form; zero when it holds."""
    I, J, disc = generic_invariants(degree)
    return sympy.expand(4 * I**3 - J**2 - 27 * disc)


def hessian(form: TernaryForm) -> TernaryForm:
    """Determinant of the matrix of second partials."""
    second: List[List[TernaryForm]] = [
        [form.partial(i).partial(j) for j in range(3)] for i in range(3)
    ]
    (m00, m01, m02), (m10, m11, m12), (m20, m21, m22) = second
    return (
        m00 * (m11 * m22 - m12 * m21)
        - m01 * (m10 * m22 - m12 * m20)
        + m02 * (m10 * m21 - m11 * m20)
    )


def ternary_cubic_discriminant(cubic: Any) -> Any:
    """Degree-12 invariant of a ternary cubic; zero iff the curve is singular.

    It is the determinant of the 6x6 matrix whose rows are the quadratic
    coefficient vectors of C_x, C_y, C_z, H_x, H_y, H_z, with H the Hessian.
    Characteristic 2 and 3 are refused since the Hessian degenerates there.

    Args:
        cubic: PlaneCubic or cubic TernaryForm
    """
    form = cubic.form if isinstance(cubic, PlaneCubic) else cubic
    if form.degree != 3:
        raise ValueError(f"expected a cubic form, got degree {form.degree}")
    p = form.field.characteristic
    if p in (2, 3):
        raise UnsupportedCharacteristicError(p, "ternary_cubic_discriminant")
    H = hessian(form)
    rows = [form.partial(i).coefficient_vector(2) for i in range(3)]
    rows += [H.partial(i).coefficient_vector(2) for i in range(3)]
    return determinant(rows, form.field)
