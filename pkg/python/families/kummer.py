"""Kummer families: curves with new points over Q(m^(1/ell)).

For a root b of x^ell - m put alpha = b (1 - b). The product
(x^ell - m)((1 - x)^ell - m) depends only on x (1 - x), so the polynomial
of alpha reads f = x^ell + m t(x) with deg t = (ell - 1)/2. From
alpha^ell = -m t(alpha) the point (alpha, alpha^((ell+1)/2)) lies on
y^2 = -m x t(x).
"""

from fractions import Fraction
from typing import Any, Dict, List, Tuple

import sympy

from python.algebra.etale import EtaleAlgebra, char_poly
from python.algebra.poly import Poly, interpolate, is_separable
from python.algebra.sqrt_decomp import approx_sqrt, odd_decompose
from python.curves.models import HyperellipticModel
from python.families.exceptions import FamilyParameterError
from python.families.polynomials import (
    Q,
    alpha_element,
    alpha_resultant,
    cyclotomic_polynomial,
    kummer_polynomial,
    order_at,
)
from python.families.report import (
    FamilyReport,
    IdentityCheck,
    check,
    emit,
    family_point,
    is_integral,
    point_check,
)

FAMILY_3MOD4 = "kummer_3mod4"
FAMILY_ALPHA = "kummer_alpha"
FAMILY_THREE_STAR = "kummer_three_star"
FAMILY_H_IDENTITY = "h_identity"
ALPHA_METHODS = ("charpoly", "resultant")
INTERPOLATION_SAMPLES = (1, 2, 3)


def _require_prime(family: str, ell: int, minimum: int) -> None:
    if ell < minimum or not sympy.isprime(ell):
        raise FamilyParameterError(family, f"ell must be a prime >= {minimum}, got {ell}")


def kummer_algebra(family: str, ell: int, m: Any) -> EtaleAlgebra:
    """Q[b]/(b^ell - m).

    Raises:
        FamilyParameterError: If x^ell - m is not squarefree
    """
    modulus = kummer_polynomial(ell, m)
    if not is_separable(modulus):
        raise FamilyParameterError(family, f"x^{ell} - {m} is not squarefree")
    return EtaleAlgebra(modulus, var="b")


def alpha_min_poly(ell: int, m: Any, method: str = "charpoly") -> Poly:
    """Polynomial of alpha = b (1 - b) for b^ell = m.

    Args:
        ell: Degree of the Kummer extension
        m: Radicand
        method: "charpoly" for the characteristic polynomial of
            multiplication by alpha, "resultant" for Res_y(y^ell - m, X - y + y^2)

    Raises:
        ValueError: For an unknown method
        FamilyParameterError: If x^ell - m is not squarefree
    """
    if method not in ALPHA_METHODS:
        raise ValueError(f"Unknown method: '{method}'. Available methods: {list(ALPHA_METHODS)}")
    algebra = kummer_algebra(FAMILY_ALPHA, ell, m)
    if method == "resultant":
        return alpha_resultant(algebra.modulus)
    return char_poly(alpha_element(algebra))


def family_kummer_3mod4(ell: int, m: Any) -> FamilyReport:
    """y^2 = 4x^((ell+1)/2) + m x + 4 through (b, b^((ell+1)/2) + 2) for ell = 3 mod 4.

    Raises:
        FamilyParameterError: If ell is not a prime 3 mod 4 above 3, if
            x^ell - m is not squarefree or if the right-hand side is inseparable
    """
    if ell % 4 != 3:
        raise FamilyParameterError(FAMILY_3MOD4, f"ell must be 3 mod 4, got {ell}")
    _require_prime(FAMILY_3MOD4, ell, 7)
    algebra = kummer_algebra(FAMILY_3MOD4, ell, m)
    half = (ell + 1) // 2
    rhs = Poly.monomial(Q, half, 4) + Poly(Q, [4, m])
    if not is_separable(rhs):
        raise FamilyParameterError(FAMILY_3MOD4, f"{rhs} is not separable")
    curve = HyperellipticModel.from_rhs(rhs)
    b = algebra.gen()
    label = f"(b, b^{half} + 2)"
    coords = (b, b**half + 2)
    checks = (
        point_check(curve, label, coords),
        point_check(curve, "(0, 2)", (0, 2)),
        check("genus = (ell - 3)/4", curve.genus == (ell - 3) // 4, curve.genus),
    )
    return emit(
        FamilyReport(
            family=FAMILY_3MOD4,
            params={"ell": ell, "m": m},
            curve=curve,
            points=(family_point(curve, label, coords, target_min_poly=algebra.modulus),),
            rational_points=((0, 2),),
            checks=checks,
            genus=curve.genus,
        )
    )


def cofactor_checks(f: Poly, ell: int, m: Any) -> List[IdentityCheck]:
    """Checks on c in f = x^ell + m(m - 1) + ell m x (x - 1) c(x)."""
    x = Poly.x(Q)
    c, remainder = divmod(f - x**ell - (m * m - m), (x * x - x).scale(ell * m))
    checks = [check("ell m x(x - 1) divides f - x^ell - m(m - 1)", not remainder, remainder)]
    expected = {
        0: Fraction(-1),
        1: Fraction(ell - 5, 2),
        2: Fraction(-(ell - 5) * (ell - 7), 6),
        3: Fraction((ell - 5) * (ell - 7) * (ell - 10), 24),
    }
    for i, value in expected.items():
        checks.append(check(f"c_{i} = {value}", c.coeff(i) == value, c.coeff(i)))
    checks.append(check("deg c = (ell - 5)/2", c.degree == (ell - 5) // 2, c.degree))
    lc = (-1) ** ((ell - 3) // 2)
    checks.append(check(f"lc(c) = {lc}", c.lc == lc, c.lc))
    return checks


def _odd_decompose_companion(
    f: Poly, algebra: EtaleAlgebra, params: Dict[str, Any]
) -> FamilyReport:
    """y^2 = ell(x) from x f = h^2 - ell, through (alpha, h(alpha)) and (0, h(0))."""
    decomposition = odd_decompose(f)
    h = decomposition.h
    curve = HyperellipticModel.from_rhs(decomposition.ell)
    alpha = alpha_element(algebra)
    coords = (alpha, h(alpha))
    rational = (0, h(0))
    ell = f.degree
    checks = (
        point_check(curve, "(alpha, h(alpha))", coords),
        point_check(curve, "(0, h(0))", rational),
        check("genus = (ell - 3) // 4", curve.genus == (ell - 3) // 4, curve.genus),
    )
    return FamilyReport(
        family=f"{FAMILY_ALPHA}/odd_decompose",
        params=params,
        curve=curve,
        points=(family_point(curve, "(alpha, h(alpha))", coords, target_min_poly=f),),
        rational_points=(rational,),
        checks=checks,
        genus=curve.genus,
        extras={"h": h},
    )


def family_kummer_alpha(ell: int, m: Any, method: str = "charpoly") -> FamilyReport:
    """y^2 = -m x t(x) through (alpha, alpha^((ell+1)/2)), alpha = b (1 - b).

    Shape failures are reported as failed checks. For ell = 1 mod 4 the
    odd decomposition x f = h^2 - ell(x) gives a companion curve y^2 = ell(x)
    through (alpha, h(alpha)), emitted when its genus is positive.

    Example Usage:
        ```python
        report = family_kummer_alpha(7, 2)
        report.genus  # 1
        report.passed  # True
        ```

    Raises:
        FamilyParameterError: If ell is not a prime >= 5 or x^ell - m is not
            squarefree
    """
    _require_prime(FAMILY_ALPHA, ell, 5)
    algebra = kummer_algebra(FAMILY_ALPHA, ell, m)
    alpha = alpha_element(algebra)
    f = alpha_min_poly(ell, m, method)
    mq = Q.coerce(m)
    x = Poly.x(Q)
    t = (f - x**ell).scale(1 / mq)
    params = {"ell": ell, "m": m}
    checks = [
        check("f(alpha) = 0", not f(alpha)),
        check("f(0) = m^2 - m", f.coeff(0) == mq * mq - mq, f.coeff(0)),
        check("deg t = (ell - 1)/2", t.degree == (ell - 1) // 2, t.degree),
    ]
    if mq.denominator == 1:
        checks.append(check("t has integer coefficients", is_integral(t), t))
    if ell >= 13:
        checks.extend(cofactor_checks(f, ell, mq))
    rhs = (x * t).scale(-mq)
    curve = HyperellipticModel.from_rhs(rhs)
    half = (ell + 1) // 2
    label = f"(alpha, alpha^{half})"
    coords = (alpha, alpha**half)
    checks.append(check("y^2 = -m x t(x) is separable", is_separable(rhs)))
    checks.append(point_check(curve, label, coords))
    checks.append(point_check(curve, "(0, 0)", (0, 0)))
    if ell % 4 == 3:
        checks.append(check("genus = (ell - 3)/4", curve.genus == (ell - 3) // 4, curve.genus))
    companions: Tuple[FamilyReport, ...] = ()
    # For ell = 5 the companion y^2 = ell(x) is a conic.
    if ell % 4 == 1 and (ell - 3) // 4 >= 1:
        companions = (_odd_decompose_companion(f, algebra, params),)
    return emit(
        FamilyReport(
            family=FAMILY_ALPHA,
            params=params,
            curve=curve,
            points=(family_point(curve, label, coords, target_min_poly=algebra.modulus),),
            rational_points=((0, 0),),
            checks=tuple(checks),
            genus=curve.genus,
            extras={"f": f, "t": t},
            companions=companions,
        )
    )


def family_kummer_three_star(ell: int) -> FamilyReport:
    """The member m = (-1/3)^((ell-1)/2), where (x - 1/3)^2 divides t.

    The curve is y^2 = -m x t(x) / (x - 1/3)^2 with the point
    (alpha, alpha^((ell+1)/2) / (alpha - 1/3)).

    Raises:
        FamilyParameterError: If ell is not a prime >= 13 with 6 | ell - 1
    """
    if (ell - 1) % 6:
        raise FamilyParameterError(FAMILY_THREE_STAR, f"6 must divide ell - 1, got ell={ell}")
    _require_prime(FAMILY_THREE_STAR, ell, 13)
    m = Fraction(-1, 3) ** ((ell - 1) // 2)
    algebra = kummer_algebra(FAMILY_THREE_STAR, ell, m)
    alpha = alpha_element(algebra)
    f = char_poly(alpha)
    x = Poly.x(Q)
    t = (f - x**ell).scale(1 / m)
    third = Fraction(1, 3)
    order = order_at(t, third)
    params = {"ell": ell, "m": m}
    checks = [
        check("f(alpha) = 0", not f(alpha)),
        check("(x - 1/3)^2 divides t", order >= 2, f"ord = {order}"),
    ]
    if order < 2:
        return emit(FamilyReport(family=FAMILY_THREE_STAR, params=params, checks=tuple(checks)))
    rhs = (x * t).scale(-m).exact_div(Poly(Q, [-third, 1]) ** 2)
    curve = HyperellipticModel.from_rhs(rhs)
    half = (ell + 1) // 2
    label = f"(alpha, alpha^{half} / (alpha - 1/3))"
    coords = (alpha, alpha**half / (alpha - third))
    checks.append(check("curve is separable", is_separable(rhs)))
    checks.append(point_check(curve, label, coords))
    return emit(
        FamilyReport(
            family=FAMILY_THREE_STAR,
            params=params,
            curve=curve,
            points=(family_point(curve, label, coords, target_min_poly=algebra.modulus),),
            rational_points=((0, 0),),
            checks=tuple(checks),
            genus=curve.genus,
            extras={"t": t},
        )
    )


def _h_coefficient_checks(h: Poly, ell: int) -> List[IdentityCheck]:
    n = (ell - 1) // 2
    sign = (-1) ** n
    expected = {
        n - 1: Fraction(-(ell * ell - 1), 8),
        2: Fraction(sign * (ell - 3) * (ell - 4), 2),
        1: Fraction(-sign * (ell - 2)),
        0: Fraction(sign),
    }
    return [
        check(f"coefficient of x^{i} in h = {value}", h.coeff(i) == value, h.coeff(i))
        for i, value in expected.items()
    ]


def verify_h_identity(ell: int) -> FamilyReport:
    """x^ell - g(x)^2/4 = (x - 1/4) h(x)^2, with h the polynomial of 1/w.

    g is the coefficient of m in f(x, m) = x^ell + m g(x) + m^2. f has
    degree 2 in m, so it is recovered exactly by interpolating the
    coefficients of f(x, m) at three integer values of m. w is
    zeta + zeta^-1 + 2 for a primitive ell-th root of unity zeta.

    Raises:
        FamilyParameterError: If ell is not a prime >= 13
    """
    _require_prime(FAMILY_H_IDENTITY, ell, 13)
    specializations = [alpha_min_poly(ell, m) for m in INTERPOLATION_SAMPLES]
    layers = [
        interpolate(Q, [(m, f.coeff(i)) for m, f in zip(INTERPOLATION_SAMPLES, specializations)])
        for i in range(ell + 1)
    ]
    x = Poly.x(Q)
    constant_in_m = Poly(Q, [layer.coeff(0) for layer in layers])
    g = Poly(Q, [layer.coeff(1) for layer in layers])
    quadratic_in_m = Poly(Q, [layer.coeff(2) for layer in layers])
    checks = [
        check(
            "f(x, m) = x^ell + m g(x) + m^2",
            constant_in_m == x**ell and quadratic_in_m == 1,
            g,
        )
    ]
    lhs = x**ell - (g * g).scale(Fraction(1, 4))
    quarter = Poly(Q, [Fraction(-1, 4), 1])
    quotient, remainder = divmod(lhs, quarter)
    h = approx_sqrt(quotient).h
    checks.append(check("x - 1/4 divides x^ell - g^2/4", not remainder, remainder))
    checks.append(check("x^ell - g^2/4 = (x - 1/4) h^2", lhs == quarter * h * h, h))
    checks.append(check("h has integer coefficients", is_integral(h), h))
    cyclotomic = EtaleAlgebra(cyclotomic_polynomial(ell), var="zeta")
    zeta = cyclotomic.gen()
    w = zeta + zeta ** (ell - 1) + 2
    checks.append(check("h(1/w) = 0", not h(w.inverse())))
    checks.extend(_h_coefficient_checks(h, ell))
    return emit(
        FamilyReport(
            family=FAMILY_H_IDENTITY,
            params={"ell": ell},
            checks=tuple(checks),
            extras={"g": g, "h": h},
        )
    )
