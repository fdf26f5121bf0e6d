"""The ell = 11 Kummer member, carried by a plane cubic.

alpha = b (1 - b) with b^11 = m is a root of
f = x^11 + 11m(x^5 - 5x^4 + 7x^3 - 4x^2 + x) + m(m - 1). Multiplying f(alpha)
by alpha shows that (alpha, alpha^4) lies on the cubic
y^3 + 11m(y x^2 - 5xy + 7y - 4x^3 + x^2) + m(m - 1)x = 0.
"""

from typing import Any, Dict

from absl import logging

from python.algebra.etale import char_poly
from python.algebra.poly import Poly
from python.analysis.reduction import CubicReduction
from python.curves.models import PlaneCubic
from python.families.exceptions import FamilyParameterError
from python.families.kummer import kummer_algebra
from python.families.polynomials import Q, alpha_element
from python.families.report import FamilyReport, check, emit, family_point, point_check

FAMILY = "kummer11"
# m and 2^11 m (or 3^11 m) define the same field Q(m^(1/11)).
J_MULTIPLIERS = (1, 2**11, 3**11)


def kummer11_polynomial(m: Any) -> Poly:
    m = Q.coerce(m)
    inner = Poly(Q, [0, 1, -4, 7, -5, 1]).scale(11 * m)
    return Poly.monomial(Q, 11) + inner + (m * m - m)


def kummer11_cubic(m: Any) -> PlaneCubic:
    m = Q.coerce(m)
    return PlaneCubic.from_affine(
        Q,
        {
            (0, 3): 1,
            (2, 1): 11 * m,
            (1, 1): -55 * m,
            (0, 1): 77 * m,
            (3, 0): -44 * m,
            (2, 0): 11 * m,
            (1, 0): m * m - m,
        },
    )


def kummer11_j(m: Any) -> Any:
    """j-invariant of the cubic, reduced to Weierstrass form at (0, 0).

    Raises:
        ValueError: If the cubic is singular
    """
    return CubicReduction(kummer11_cubic(m), (0, 0, 1)).curve.j_invariant


def family_kummer11(m: Any) -> FamilyReport:
    """The cubic with the new point (alpha, alpha^4) over Q(m^(1/11)).

    Raises:
        FamilyParameterError: If m is 0 or 1, or x^11 - m is not squarefree
    """
    mq = Q.coerce(m)
    if mq in (0, 1):
        raise FamilyParameterError(FAMILY, f"m must avoid 0 and 1, got {m}")
    algebra = kummer_algebra(FAMILY, 11, mq)
    alpha = alpha_element(algebra)
    f = kummer11_polynomial(mq)
    cubic = kummer11_cubic(mq)
    label = "(alpha, alpha^4)"
    coords = (alpha, alpha**4, 1)
    checks = [
        check("f(alpha) = 0", not f(alpha)),
        check("f is the polynomial of alpha", f == char_poly(alpha), f),
        point_check(cubic, label, coords),
        point_check(cubic, "(0, 0)", (0, 0, 1)),
    ]
    smoothness = cubic.smoothness()
    checks.append(check("cubic is smooth", smoothness.smooth, smoothness.witness))
    extras: Dict[str, Any] = {}
    if smoothness.smooth:
        j_values: Dict[Any, Any] = {}
        for k in J_MULTIPLIERS:
            try:
                j_values[mq * k] = kummer11_j(mq * k)
            except ValueError as error:
                logging.warning("kummer11: no j-invariant at m=%s: %s", mq * k, error)
                j_values[mq * k] = None
        extras["j_values"] = j_values
        found = {j for j in j_values.values() if j is not None}
        checks.append(
            check(
                "j(m), j(2^11 m), j(3^11 m) are distinct",
                len(found) == len(J_MULTIPLIERS),
                list(j_values.values()),
            )
        )
    else:
        logging.warning("kummer11: the cubic is singular for m=%s", m)
    return emit(
        FamilyReport(
            family=FAMILY,
            params={"m": m},
            curve=cubic,
            points=(family_point(cubic, label, coords, target_min_poly=algebra.modulus),),
            rational_points=((0, 0, 1),),
            checks=tuple(checks),
            genus=1,
            extras=extras,
        )
    )
