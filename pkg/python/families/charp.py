"""Hyperelliptic curves over F_p(u) with a new point of degree d.

In F_p(u)[theta]/(theta^d - z) put a = z^((p^m+1)/d) = theta^(p^m+1). The
curve y^2 = x (x^g + 1)(x^g + a^g) carries the point
(theta, theta^((g+1)/2) (theta^g + 1)^((p^m+1)/2)): theta^(p^m) = a / theta, so
(theta^g + 1)^(p^m + 1) = theta^(-g) (theta^g + 1)(theta^g + a^g).
For even g, d is odd and theta^((g+1)/2) stands for
(u^-1 theta^((d+1)/2))^(g+1), a square root of theta^(g+1) since
theta^(d+1) = u^2 theta.
"""

from math import gcd

import sympy

from python.algebra.kummer_ring import KummerRing
from python.algebra.poly import Poly, is_separable
from python.curves.models import HyperellipticModel
from python.families.exceptions import FamilyParameterError
from python.families.report import FamilyReport, check, emit, family_point, point_check

FAMILY = "charp"


def _validate(p: int, m_exp: int, d: int, g: int) -> None:
    if p < 3 or not sympy.isprime(p):
        raise FamilyParameterError(FAMILY, f"p must be an odd prime, got {p}")
    if m_exp < 1 or g < 1:
        raise FamilyParameterError(FAMILY, f"m and g must be positive, got m={m_exp}, g={g}")
    if gcd(g, p) != 1:
        raise FamilyParameterError(FAMILY, f"g must be coprime to p={p}, got {g}")
    if d <= 2 or (p**m_exp + 1) % d:
        raise FamilyParameterError(
            FAMILY, f"d must exceed 2 and divide p^m + 1 = {p**m_exp + 1}, got {d}"
        )
    if g % 2 == 0 and d % 2 == 0:
        raise FamilyParameterError(FAMILY, f"g or d must be odd, got g={g}, d={d}")


def family_charp(p: int, m_exp: int, d: int, g: int) -> FamilyReport:
    """The genus-g curve y^2 = x (x^g + 1)(x^g + a^g) over F_p(u).

    Args:
        p: Odd characteristic
        m_exp: Exponent m in p^m + 1
        d: Degree of theta, a divisor of p^m + 1 above 2
        g: Genus, coprime to p; g or d odd

    Example Usage:
        ```python
        report = family_charp(3, 1, 4, 1)
        report.genus  # 1
        report.passed  # True
        ```

    Raises:
        FamilyParameterError: If a hypothesis fails
    """
    _validate(p, m_exp, d, g)
    ring = KummerRing(p, d)
    field = ring.field
    q1 = p**m_exp + 1
    a = ring.z ** (q1 // d)
    ag = a**g
    x = Poly.x(field)
    rhs = x * (x**g + 1) * (x**g + ag)
    curve = HyperellipticModel.from_rhs(rhs)
    theta = ring.theta
    checks = [
        check("a^g != 1", ag != field.one(), ag),
        check("a = theta^(p^m + 1)", theta**q1 == ring.algebra.coerce(a)),
        check("curve is separable", is_separable(rhs)),
    ]
    if g % 2:
        root = theta ** ((g + 1) // 2)
        root_label = f"theta^{(g + 1) // 2}"
    else:
        theta1 = theta ** ((d + 1) // 2) / ring.u
        checks.append(check("(u^-1 theta^((d+1)/2))^2 = theta", theta1 * theta1 == theta))
        root = theta1 ** (g + 1)
        root_label = f"(u^-1 theta^{(d + 1) // 2})^{g + 1}"
    label = f"(theta, {root_label} (theta^{g} + 1)^{q1 // 2})"
    coords = (theta, root * (theta**g + 1) ** (q1 // 2))
    checks.append(point_check(curve, label, coords))
    checks.append(point_check(curve, "(0, 0)", (0, 0)))
    checks.append(check(f"genus = {g}", curve.genus == g, curve.genus))
    return emit(
        FamilyReport(
            family=FAMILY,
            params={"p": p, "m": m_exp, "d": d, "g": g},
            curve=curve,
            points=(family_point(curve, label, coords, target_min_poly=ring.algebra.modulus),),
            rational_points=((0, 0),),
            checks=tuple(checks),
            genus=curve.genus,
            extras={"a": a},
        )
    )
