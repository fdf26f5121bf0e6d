"""Cyclotomic families.

For a primitive p-th root of unity zeta, alpha = zeta (1 - zeta) has a
polynomial f that computation shows to be x^(p-1) + p t(x), with t of
degree (p - 3)/2 vanishing at 1 to order 2 exactly when 6 | p - 1. Then
alpha^(p-1) = -p t(alpha) puts (alpha, alpha^((p-1)/2)/(alpha - 1)) on
y^2 = -p t(x)/(x - 1)^2. These shapes are treated as conjectural.

The second family sums three points over Q(i), Q(zeta_3) and Q(zeta_5) on one
elliptic curve to get a point over Q(zeta_60).
"""

from fractions import Fraction
from functools import reduce
from typing import Any, Dict, List

import sympy
from absl import logging

from python.algebra.etale import EtaleAlgebra, char_poly, tower, tower_element_degree
from python.algebra.irreducibility import IrreducibilityStatus, certify_irreducible
from python.algebra.poly import Poly
from python.algebra.sqrt_decomp import approx_sqrt
from python.analysis.reduction import QuarticReduction
from python.analysis.weierstrass import ec_add
from python.curves.models import HyperellipticModel
from python.families.exceptions import FamilyParameterError
from python.families.polynomials import Q, alpha_element, cyclotomic_polynomial, order_at
from python.families.report import (
    FamilyReport,
    IdentityCheck,
    check,
    emit,
    family_point,
    is_integral,
    point_check,
)

FAMILY_SPECIAL = "cyclotomic_special"
FAMILY_ZETA60 = "zeta60"
ZETA60_DEGREE = 16
# -(1/4)(x^3 + 3x^2/2 + x + 15/16)
ZETA60_ELL = Poly(Q, [Fraction(-15, 64), Fraction(-1, 4), Fraction(-3, 8), Fraction(-1, 4)])


def family_cyclotomic_special(p: int) -> FamilyReport:
    """y^2 = -p t(x)/(x - 1)^2 through (alpha, alpha^((p-1)/2)/(alpha - 1)).

    Shape checks are conjectural: a failure is reported with status
    SHAPE_FAILED and no curve is emitted.

    Raises:
        FamilyParameterError: If p is not a prime >= 11
    """
    if p < 11 or not sympy.isprime(p):
        raise FamilyParameterError(FAMILY_SPECIAL, f"p must be a prime >= 11, got {p}")
    algebra = EtaleAlgebra(cyclotomic_polynomial(p), var="zeta")
    alpha = alpha_element(algebra)
    f = char_poly(alpha)
    x = Poly.x(Q)
    rest = f - x ** (p - 1)
    t = rest.scale(Fraction(1, p))
    order = order_at(t, 1)
    expected_order = 2 if (p - 1) % 6 == 0 else 1
    params = {"p": p}
    checks: List[IdentityCheck] = [
        check("f(alpha) = 0", not f(alpha)),
        check("p divides f - x^(p-1)", is_integral(t), t, conjectural=True),
        check("deg t = (p - 3)/2", t.degree == (p - 3) // 2, t.degree, conjectural=True),
        check(
            f"ord_(x-1) t = {expected_order}",
            order == expected_order,
            f"ord = {order}",
            conjectural=True,
        ),
    ]
    extras: Dict[str, Any] = {"f": f, "t": t, "order": order}
    shape_ok = all(c.passed for c in checks)
    if not shape_ok:
        logging.warning("cyclotomic_special: shape fails for p=%d", p)
    if not shape_ok or order != 2:
        return emit(
            FamilyReport(family=FAMILY_SPECIAL, params=params, checks=tuple(checks), extras=extras)
        )
    rhs = t.scale(-p).exact_div(Poly(Q, [-1, 1]) ** 2)
    curve = HyperellipticModel.from_rhs(rhs)
    half = (p - 1) // 2
    label = f"(alpha, alpha^{half}/(alpha - 1))"
    coords = (alpha, alpha**half / (alpha - 1))
    checks.append(point_check(curve, label, coords))
    return emit(
        FamilyReport(
            family=FAMILY_SPECIAL,
            params=params,
            curve=curve,
            points=(family_point(curve, label, coords, target_min_poly=algebra.modulus),),
            checks=tuple(checks),
            genus=curve.genus,
            extras=extras,
        )
    )


def zeta60_product() -> Poly:
    """(x^2 + 1)(x^2 + x + 1)(x^4 + x^3 + x^2 + x + 1)."""
    return cyclotomic_polynomial(4) * cyclotomic_polynomial(3) * cyclotomic_polynomial(5)


def family_zeta60() -> FamilyReport:
    """P + Q + R over Q(zeta_60) on y^2 = ell(x), where f = h^2 - ell.

    f is the product of the cyclotomic polynomials of orders 4, 3 and 5, so
    (r, h(r)) lies on the curve for each of its roots r. The points at i,
    zeta_3 and zeta_5 are moved into Q(i)(zeta_3)(zeta_5) and added on the
    Weierstrass model of the cubic ell.
    """
    f = zeta60_product()
    decomposition = approx_sqrt(f)
    h, ell = decomposition.h, decomposition.ell
    irreducibility = certify_irreducible(ell.monic())
    checks: List[IdentityCheck] = [
        check("ell = -(1/4)(x^3 + 3x^2/2 + x + 15/16)", ell == ZETA60_ELL, ell),
        check("f = h^2 - ell", f == h * h - ell),
        check(
            "ell is irreducible, so no rational 2-torsion",
            irreducibility.status == IrreducibilityStatus.PROVED,
            irreducibility.method,
        ),
    ]
    curve = HyperellipticModel.from_rhs(ell)
    reduction = QuarticReduction(ell)
    E = reduction.curve
    top = tower(Q, [[1, 0, 1], [1, 1, 1], [1, 1, 1, 1, 1]], names=("i", "zeta3", "zeta5"))
    layers = top.layers
    generators = [top.coerce(layers[0].gen()), top.coerce(layers[1].gen()), top.gen()]
    images = []
    for order, generator in zip((4, 3, 5), generators):
        local = EtaleAlgebra(cyclotomic_polynomial(order), var=f"zeta{order}")
        r = local.gen()
        checks.append(point_check(curve, f"(zeta_{order}, h(zeta_{order}))", (r, h(r))))
        x_top = r.as_poly()(generator)
        images.append(reduction.image(x_top, h(x_top)))
    total = reduce(lambda P, R: ec_add(E, P, R), images)
    x_degree = tower_element_degree(total.x)
    checks.append(point_check(E, "P + Q + R", total))
    point = family_point(E, "P + Q + R", total, target_degree=ZETA60_DEGREE)
    checks.append(
        check(
            "degree of K(P + Q + R) = 16",
            point.certificate.residue_degree == ZETA60_DEGREE,
            point.certificate.residue_degree,
        )
    )
    return emit(
        FamilyReport(
            family=FAMILY_ZETA60,
            params={},
            curve=E,
            points=(point,),
            checks=tuple(checks),
            genus=1,
            extras={"h": h, "ell": ell, "quartic_curve": curve, "x_degree": x_degree},
        )
    )
