"""Point membership and new-point certificates.

A point P on a curve X/K with coordinates in an etale tower L over K is new
over L when K(P) = L. The certificate records the characteristic polynomial
of x(P), the degree of K(x(P), y(P)) found by primitive-element sampling,
an irreducibility certificate for L, and whether P is special, i.e. whether
y(P) already lies in K[x(P)].
"""

from dataclasses import dataclass, replace
from typing import Any, List, Optional, Sequence, Tuple

from absl import logging

from python.algebra.etale import EtaleAlgebra, EtaleElement, char_poly
from python.algebra.exceptions import FieldMismatchError
from python.algebra.fields import FieldDescriptor
from python.algebra.irreducibility import (
    IrreducibilityCertificate,
    IrreducibilityStatus,
    certify_irreducible,
)
from python.algebra.linalg import solve
from python.algebra.poly import Poly, is_squarefree, squarefree_part
from python.algebra.random_source import SplitMix64
from python.analysis.weierstrass import ECPoint, WeierstrassCurve
from python.curves.models import PlaneCubic

PRIMITIVE_SAMPLES = 5
LAMBDA_BOUND = 1000


@dataclass(frozen=True)
class NewPointCertificate:
    """Evidence that a point generates a given extension.

    Attributes:
        x: x-coordinate of the point
        y: y-coordinate of the point
        chi_x: Characteristic polynomial of x over K
        squarefree: Whether chi_x is squarefree
        irreducibility: Certificate for the target extension
        degree: Target degree d = [L : K]
        on_curve: Whether the point satisfies the curve equation
        special: Whether y lies in K[x]
        residue_degree: Degree of K(x, y) over K
        lambdas: Multipliers tried for the primitive element x + lambda y
        warnings: Hypotheses of the construction that could not be confirmed
    """

    x: Any
    y: Any
    chi_x: Poly
    squarefree: bool
    irreducibility: IrreducibilityCertificate
    degree: int
    on_curve: bool
    special: bool
    residue_degree: int
    lambdas: Tuple[Any, ...] = ()
    warnings: Tuple[str, ...] = ()

    @property
    def irreducibility_status(self) -> IrreducibilityStatus:
        return self.irreducibility.status

    @property
    def is_new(self) -> bool:
        return (
            self.on_curve
            and self.residue_degree == self.degree
            and self.irreducibility.status != IrreducibilityStatus.FAILED
        )

    @property
    def status(self) -> str:
        if not self.is_new:
            return "NOT_NEW"
        return "NEW_WITH_WARNINGS" if self.warnings else "NEW"

    def with_warnings(self, *warnings: str) -> "NewPointCertificate":
        return replace(self, warnings=self.warnings + tuple(warnings))


def _coordinates(point: Any) -> List[Any]:
    if isinstance(point, ECPoint):
        if point.is_infinity:
            return []
        return [point.x, point.y]
    return list(point)


def common_algebra(field: FieldDescriptor, coords: Sequence[Any]) -> Optional[EtaleAlgebra]:
    """The largest algebra among the coordinates, checked to contain the others.

    Returns:
        The ambient algebra, or None when every coordinate lies in the base field

    Raises:
        FieldMismatchError: If the coordinates live over different fields or in
            algebras that are not layers of one tower
    """
    algebras = {c.algebra for c in coords if isinstance(c, EtaleElement)}
    for c in coords:
        if not isinstance(c, EtaleElement):
            field.coerce(c)
    if not algebras:
        return None
    top = max(algebras, key=lambda a: len(a.layers))
    for algebra in algebras:
        if algebra.field != field:
            raise FieldMismatchError(field, algebra.field)
        if algebra not in top.layers:
            raise FieldMismatchError(top, algebra)
    return top


def verify_on_curve(curve: Any, point: Any) -> bool:
    """Exact substitution of the point into the curve equation.

    Args:
        curve: HyperellipticModel, SuperellipticModel, PlaneCubic or
            WeierstrassCurve
        point: (x, y), (x, y, z) for a plane cubic, or an ECPoint

    Raises:
        FieldMismatchError: If the coordinates do not share a tower over the
            curve's base field
    """
    coords = _coordinates(point)
    common_algebra(curve.field, coords)
    if isinstance(curve, WeierstrassCurve):
        return curve.contains(point if isinstance(point, ECPoint) else ECPoint(*coords))
    if isinstance(curve, PlaneCubic):
        return curve.contains(*coords)
    return curve.contains(coords[0], coords[1])


def _affine(curve: Any, coords: List[Any]) -> Tuple[Any, Any]:
    if not coords:
        raise ValueError("the point at infinity is K-rational")
    if isinstance(curve, PlaneCubic) and len(coords) == 3:
        z = coords[2]
        if not z:
            raise ValueError(f"{coords} is outside the chart z = 1")
        return coords[0] / z, coords[1] / z
    return coords[0], coords[1]


def in_power_basis(x: EtaleElement, y: EtaleElement, k: int) -> bool:
    """Whether y is a K-linear combination of 1, x, ..., x^(k-1)."""
    algebra = x.algebra
    columns = []
    power = algebra.one()
    for _ in range(k):
        columns.append(algebra.flatten(power))
        power = power * x
    rows = [[column[r] for column in columns] for r in range(algebra.dimension)]
    return solve(rows, algebra.flatten(y), algebra.field) is not None


def newness_certificate(
    curve: Any,
    point: Any,
    target_min_poly: Optional[Poly] = None,
    target_degree: Optional[int] = None,
    rng: Optional[SplitMix64] = None,
) -> NewPointCertificate:
    """Certify that K(P) has the degree of the target extension.

    Args:
        curve: Any curve accepted by verify_on_curve
        point: Point with coordinates in a common tower over the base field
        target_min_poly: Defining polynomial of L; its irreducibility is certified
        target_degree: [L : K] when no defining polynomial is at hand; the
            tower dimension is used when both are omitted
        rng: Generator for the multipliers lambda

    Returns:
        NewPointCertificate; failures are reported in its fields
    """
    rng = rng or SplitMix64(0)
    field: FieldDescriptor = curve.field
    coords = _coordinates(point)
    on_curve = verify_on_curve(curve, point)
    x, y = _affine(curve, coords)
    algebra = common_algebra(field, [x, y])
    if algebra is None:
        x = field.coerce(x)
        chi = Poly(field, [-x, 1])
        best = chi
        degree = target_degree or 1
        residue, special, lambdas = 1, True, ()
    else:
        x, y = algebra.coerce(x), algebra.coerce(y)
        chi = char_poly(x)
        best = squarefree_part(chi)
        x_degree = best.degree
        residue = x_degree
        sampled: List[Any] = []
        if residue < algebra.dimension:
            for _ in range(PRIMITIVE_SAMPLES):
                lam = field.random_element(rng, LAMBDA_BOUND)
                if not lam:
                    continue
                sampled.append(lam)
                candidate = squarefree_part(char_poly(x + lam * y))
                if candidate.degree > residue:
                    residue, best = candidate.degree, candidate
        lambdas = tuple(sampled)
        degree = target_degree or algebra.dimension
        special = in_power_basis(x, y, x_degree)
    if target_min_poly is not None:
        degree = target_min_poly.degree
        irreducibility = certify_irreducible(target_min_poly)
    else:
        irreducibility = certify_irreducible(best)
    certificate = NewPointCertificate(
        x=x,
        y=y,
        chi_x=chi,
        squarefree=is_squarefree(chi),
        irreducibility=irreducibility,
        degree=degree,
        on_curve=on_curve,
        special=special,
        residue_degree=residue,
        lambdas=lambdas,
    )
    logging.debug(
        "newness: residue degree %d of %d, status %s",
        residue,
        degree,
        certificate.status,
    )
    return certificate
