"""Points over Q(2^(1/ell)) on the Fermat quotients y^ell = (x - 1) x^a."""

from typing import Tuple

import sympy

from python.algebra.etale import EtaleAlgebra
from python.algebra.poly import Poly
from python.curves.models import SuperellipticModel
from python.families.exceptions import FamilyParameterError
from python.families.polynomials import Q, kummer_polynomial
from python.families.report import FamilyPoint, FamilyReport, check, emit, family_point, point_check

FAMILY = "fermat_quotient"


def has_extra_automorphism(ell: int, a: int) -> bool:
    """Whether a^2 + a + 1 = 0 mod ell, the condition for an automorphism of order 3."""
    return (a * a + a + 1) % ell == 0


def family_fermat_quotient(ell: int, a: int) -> FamilyReport:
    """y^ell = (x - 1) x^a, of genus (ell - 1)/2, with three points over Q(r), r^ell = 2.

    The points are (2, r^a), (-1, (-1)^(a+1) r) and (1/2, -1/r^(a+1)).

    Raises:
        FamilyParameterError: If ell is not an odd prime or a is outside [1, ell - 2]
    """
    if ell < 3 or not sympy.isprime(ell):
        raise FamilyParameterError(FAMILY, f"ell must be an odd prime, got {ell}")
    if not 1 <= a <= ell - 2:
        raise FamilyParameterError(FAMILY, f"a must lie in [1, {ell - 2}], got {a}")
    curve = SuperellipticModel(ell, Poly(Q, [-1, 1]) * Poly.monomial(Q, a))
    modulus = kummer_polynomial(ell, 2)
    r = EtaleAlgebra(modulus, var="r").gen()
    claimed = (
        (f"(2, r^{a})", (2, r**a)),
        (f"(-1, (-1)^{a + 1} r)", (-1, r * (-1) ** (a + 1))),
        (f"(1/2, -1/r^{a + 1})", (Q.coerce(1) / 2, -(r.inverse() ** (a + 1)))),
    )
    points: Tuple[FamilyPoint, ...] = tuple(
        family_point(curve, label, coords, target_min_poly=modulus, seed=i)
        for i, (label, coords) in enumerate(claimed)
    )
    checks = [point_check(curve, label, coords) for label, coords in claimed]
    checks.append(check("genus = (ell - 1)/2", curve.genus == (ell - 1) // 2, curve.genus))
    return emit(
        FamilyReport(
            family=FAMILY,
            params={"ell": ell, "a": a},
            curve=curve,
            points=points,
            rational_points=((0, 0), (1, 0)),
            checks=tuple(checks),
            genus=curve.genus,
            extras={"extra_automorphism": has_extra_automorphism(ell, a)},
        )
    )
