"""Sums of new points over composite towers, and two worked 2-torsion examples.

If P is new over L1 and Q is new over L2, with L1 and L2 linearly disjoint
Galois extensions, then P + Q is new over L1 L2 as long as E(K) has no
nontrivial torsion point of order dividing the gcd of the Galois group
exponents. ``compose_new_point`` builds the tower L1[b]/(m2), adds the
points there and checks the torsion hypothesis with division polynomials.
"""

from dataclasses import dataclass
from math import gcd
from typing import Any, Optional, Sequence, Tuple

from absl import logging

from python.algebra.etale import EtaleAlgebra, EtaleElement
from python.algebra.exceptions import UnsupportedCharacteristicError
from python.algebra.fields import FieldDescriptor
from python.algebra.irreducibility import IrreducibilityStatus, certify_irreducible
from python.algebra.poly import Poly, discriminant
from python.algebra.random_source import SplitMix64
from python.analysis.certificates import NewPointCertificate, newness_certificate
from python.analysis.exceptions import NotApplicableError
from python.analysis.weierstrass import (
    MAX_DIVISION_INDEX,
    ECPoint,
    WeierstrassCurve,
    ec_add,
    negate,
    torsion_free_up_to,
)

Q = FieldDescriptor.rationals()


@dataclass(frozen=True)
class CompositionResult:
    """P + Q over the composite tower.

    Attributes:
        point: P + Q with coordinates in the tower
        certificate: Newness certificate of P + Q against [L1 : K][L2 : K]
        tower: The algebra L1[b]/(m2)
        exponent_gcd: e, the gcd of the Galois exponents supplied
        torsion_free: Whether E(K) has no nontrivial e-torsion; None if unchecked
    """

    point: ECPoint
    certificate: NewPointCertificate
    tower: EtaleAlgebra
    exponent_gcd: int
    torsion_free: Optional[bool]


def _embed_first(tower: EtaleAlgebra, value: Any) -> EtaleElement:
    return tower.coerce(value)


def _embed_second(tower: EtaleAlgebra, value: Any) -> EtaleElement:
    if isinstance(value, EtaleElement):
        return value.as_poly()(tower.gen())
    return tower.coerce(value)


def compose_new_point(
    E: WeierstrassCurve,
    first: Tuple[ECPoint, Poly],
    second: Tuple[ECPoint, Poly],
    torsion_check_bound: int = MAX_DIVISION_INDEX,
    exponents: Optional[Sequence[int]] = None,
    rng: Optional[SplitMix64] = None,
) -> CompositionResult:
    """Add P over K[a]/(m1) and Q over K[b]/(m2) inside K[a][b]/(m2).

    Args:
        E: Curve over K
        first: P and m1; P's coordinates lie in K[a]/(m1) or in K
        second: Q and m2; Q's coordinates lie in K[b]/(m2) or in K
        torsion_check_bound: Largest e for which E(K)[e] is searched
        exponents: Exponents of the two Galois groups; the degrees are used
            when omitted, which only enlarges the torsion that is checked
        rng: Generator for the certificate's primitive-element sampling

    Returns:
        CompositionResult; a failed or skipped torsion check appears as a
        certificate warning

    Raises:
        ZeroDivisorError: If the tower is not a field, so that L1 and L2 are
            not linearly disjoint
    """
    (P, m1), (Qpt, m2) = first, second
    A1 = EtaleAlgebra(m1, var="a")
    tower = EtaleAlgebra(Poly(A1, m2.coeffs), var="b")
    P_up = ECPoint(_embed_first(tower, P.x), _embed_first(tower, P.y))
    Q_up = ECPoint(_embed_second(tower, Qpt.x), _embed_second(tower, Qpt.y))
    total = ec_add(E, P_up, Q_up)
    if total.is_infinity:
        raise ValueError("P + Q is the point at infinity")
    d1, d2 = m1.degree, m2.degree
    e = gcd(*exponents) if exponents else gcd(d1, d2)
    torsion_free: Optional[bool] = True
    if e > 1:
        torsion_free = torsion_free_up_to(E, e) if e <= torsion_check_bound else None
    certificate = newness_certificate(E, total, target_degree=d1 * d2, rng=rng)
    if torsion_free is None:
        certificate = certificate.with_warnings(f"torsion of order dividing {e} unchecked")
    elif not torsion_free:
        certificate = certificate.with_warnings(f"E(K) has torsion of order dividing {e}")
    logging.info(
        "composed point: residue degree %d of %d (%s)",
        certificate.residue_degree,
        d1 * d2,
        certificate.status,
    )
    return CompositionResult(
        point=total,
        certificate=certificate,
        tower=tower,
        exponent_gcd=e,
        torsion_free=torsion_free,
    )


@dataclass(frozen=True)
class TwoTorsionTriple:
    """The three 2-torsion points of y^2 = f(x) over the splitting tower.

    Attributes:
        curve: The elliptic curve
        tower: K[t1]/(f) followed by the quadratic cofactor
        points: P1, P2, P3
        relation_holds: Whether P1 + P2 = -P3
    """

    curve: WeierstrassCurve
    tower: EtaleAlgebra
    points: Tuple[ECPoint, ECPoint, ECPoint]
    relation_holds: bool


def three_two_torsion_example(
    a2: Any, a4: Any, a6: Any, field: FieldDescriptor = Q
) -> TwoTorsionTriple:
    """Check P1 + P2 = -P3 for the 2-torsion of y^2 = x^3 + a2 x^2 + a4 x + a6.

    Raises:
        NotApplicableError: If the cubic is reducible or its splitting field
            has degree 3
    """
    if field.characteristic == 2:
        raise UnsupportedCharacteristicError(2, "three_two_torsion_example")
    f = Poly(field, [a6, a4, a2, 1])
    if certify_irreducible(f).status == IrreducibilityStatus.FAILED:
        raise NotApplicableError(f"{f} is reducible")
    if field.sqrt(discriminant(f)) is not None:
        raise NotApplicableError(f"the splitting field of {f} has degree 3")
    E = WeierstrassCurve(field, 0, a2, 0, a4, a6)
    A1 = EtaleAlgebra(f, var="t1")
    theta1 = A1.gen()
    cofactor = Poly(A1, f.coeffs).exact_div(Poly(A1, [-theta1, 1]))
    tower = EtaleAlgebra(cofactor, var="t2")
    t1, t2 = tower.coerce(theta1), tower.gen()
    t3 = -E.a2 - t1 - t2
    zero = tower.zero()
    P1, P2, P3 = ECPoint(t1, zero), ECPoint(t2, zero), ECPoint(t3, zero)
    holds = ec_add(E, P1, P2) == negate(E, P3)
    return TwoTorsionTriple(curve=E, tower=tower, points=(P1, P2, P3), relation_holds=holds)


def modular_polynomial_2(X: Any, Y: Any) -> Any:
    """The classical level-2 modular polynomial at (X, Y)."""
    return (
        X**3
        + Y**3
        - X * X * Y * Y
        + 1488 * (X * X * Y + X * Y * Y)
        - 162000 * (X * X + Y * Y)
        + 40773375 * X * Y
        + 8748000000 * (X + Y)
        - 157464000000000
    )


@dataclass(frozen=True)
class DescentReport:
    """Outcome of the quadratic descent onto T = (0, 0).

    Attributes:
        curve: E: y^2 = x(x^2 + a2 x + a4)
        d: The parameter; 0 selects F = K(sqrt(a2^2 - 4 a4))
        algebra: F = K[s]/(s^2 - d) or K[s]/(s^2 - a2^2 + 4 a4)
        point: P = (alpha, s alpha), or (alpha, 0) when d = 0
        conjugate: sigma(P)
        relation_holds: Whether P - sigma(P) = T
        quotient: E' : y^2 = x(x^2 - 2 a2 x + a2^2 - 4 a4)
        j: j(E)
        j_quotient: j(E')
        modular_relation_holds: Whether Phi_2(j, j') = 0
        certificate: Newness certificate of P over F
    """

    curve: WeierstrassCurve
    d: Any
    algebra: EtaleAlgebra
    point: ECPoint
    conjugate: ECPoint
    relation_holds: bool
    quotient: WeierstrassCurve
    j: Any
    j_quotient: Any
    modular_relation_holds: bool
    certificate: NewPointCertificate


def _conjugate(z: EtaleElement) -> EtaleElement:
    return z.as_poly()(-z.algebra.gen())


def descent_criterion(a2: Any, a4: Any, d: Any, field: FieldDescriptor = Q) -> bool:
    """Whether K(sqrt d) carries a point P with P - sigma(P) = (0, 0)."""
    a2, a4, d = field.coerce(a2), field.coerce(a4), field.coerce(d)
    if not d:
        return field.sqrt(a2 * a2 - 4 * a4) is None
    if field.sqrt(d) is not None:
        return False
    return field.sqrt(d * (d * d - 2 * a2 * d + a2 * a2 - 4 * a4)) is not None


def find_descent_parameter(
    a2: Any, a4: Any, bound: int = 50, field: FieldDescriptor = Q
) -> Optional[int]:
    """Smallest nonzero integer d with |d| <= bound meeting the criterion."""
    for magnitude in range(1, bound + 1):
        for d in (magnitude, -magnitude):
            if descent_criterion(a2, a4, d, field):
                return d
    return None


def two_torsion_descent(a2: Any, a4: Any, d: Any, field: FieldDescriptor = Q) -> DescentReport:
    """Build P over F with P - sigma(P) = (0, 0) on y^2 = x(x^2 + a2 x + a4).

    Args:
        a2, a4: Curve coefficients
        d: Nonzero non-square with d(d^2 - 2 a2 d + a2^2 - 4 a4) a square, or
            0 for the branch F = K(sqrt(a2^2 - 4 a4))
        field: Base field K

    Raises:
        UnsupportedCharacteristicError: In characteristic 2
        ValueError: If the curve is singular
        NotApplicableError: If the criterion fails for d
    """
    if field.characteristic == 2:
        raise UnsupportedCharacteristicError(2, "two_torsion_descent")
    E = WeierstrassCurve(field, 0, a2, 0, a4, 0)
    a2, a4, d = E.a2, E.a4, field.coerce(d)
    if not descent_criterion(a2, a4, d, field):
        raise NotApplicableError(f"d = {d} fails the descent criterion")
    delta = a2 * a2 - 4 * a4
    if d:
        algebra = EtaleAlgebra(Poly(field, [-d, 0, 1]), var="s")
        s = algebra.gen()
        r = field.sqrt(d * (d * d - 2 * a2 * d + delta))
        alpha = (-(a2 - d) + (r / d) * s) / 2
        P = ECPoint(alpha, s * alpha)
    else:
        algebra = EtaleAlgebra(Poly(field, [-delta, 0, 1]), var="s")
        alpha = (-a2 + algebra.gen()) / 2
        P = ECPoint(alpha, algebra.zero())
    sigma_P = ECPoint(_conjugate(P.x), _conjugate(P.y))
    difference = ec_add(E, P, negate(E, sigma_P))
    T = ECPoint(field.zero(), field.zero())
    quotient = WeierstrassCurve(field, 0, -2 * a2, 0, delta, 0)
    j, j_quotient = E.j_invariant, quotient.j_invariant
    return DescentReport(
        curve=E,
        d=d,
        algebra=algebra,
        point=P,
        conjugate=sigma_P,
        relation_holds=difference == T,
        quotient=quotient,
        j=j,
        j_quotient=j_quotient,
        modular_relation_holds=not modular_polynomial_2(j, j_quotient),
        certificate=newness_certificate(E, P),
    )
