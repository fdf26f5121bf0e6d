"""Construction reports: the curve, its points and how they were found."""

from dataclasses import dataclass, field
from typing import Any, Optional, Tuple

from python.algebra.poly import Poly
from python.algebra.random_source import SplitMix64
from python.analysis.certificates import (
    NewPointCertificate,
    newness_certificate,
    verify_on_curve,
)
from python.analysis.weierstrass import OrderBoundResult
from python.constructors.extension_spec import ExtensionSpec

DERIVED_NOTE = "derived from construction"


@dataclass(frozen=True)
class ConstructedPoint:
    """A point of prescribed residue field on the constructed curve.

    Attributes:
        coords: (x, y), or (x, y, z) on a plane cubic, in K[x]/(extension)
        extension: Defining polynomial of the residue field
        certificate: Newness certificate of the point
    """

    coords: Tuple[Any, ...]
    extension: Poly
    certificate: NewPointCertificate

    @property
    def degree(self) -> int:
        return self.extension.degree


@dataclass(frozen=True)
class RationalPoint:
    """A K-rational point that comes with the construction.

    Attributes:
        coords: Affine or projective coordinates; None for a point at infinity
        label: Human-readable name such as "(0, h(0))" or "infinity"
        note: Provenance of the point
    """

    coords: Optional[Tuple[Any, ...]]
    label: str
    note: str = DERIVED_NOTE


@dataclass(frozen=True)
class ConstructionReport:
    """Everything one construction run produced.

    Attributes:
        method: Registry name of the construction
        curve: HyperellipticModel or PlaneCubic
        m: Product of the characteristic polynomials the points come from
        h: Approximate square root, when the method uses one
        points: The new points
        extra_rational_points: K-rational points carried by the curve
        genus_expected: Genus predicted by the method's degree formula
        degree: d, the total degree of the requested extensions
        seed: Seed of the run
        retries: Rejected samples before acceptance
        spec: The requested extensions, padded as the method used them
        order_bound_result: Order check of the first new point (genus one)
        j_invariant: j-invariant of the curve (genus one)
        rescaling: The witness gamma of a Kummer rescaling
        warnings: Hypotheses that could not be confirmed
    """

    method: str
    curve: Any
    m: Poly
    points: Tuple[ConstructedPoint, ...]
    genus_expected: int
    degree: int
    seed: int
    retries: int
    h: Optional[Poly] = None
    extra_rational_points: Tuple[RationalPoint, ...] = ()
    spec: Optional[ExtensionSpec] = None
    order_bound_result: Optional[OrderBoundResult] = None
    j_invariant: Any = None
    rescaling: Any = None
    warnings: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.curve.genus != self.genus_expected:
            raise ValueError(
                f"genus_expected is {self.genus_expected} but {self.curve} has genus "
                f"{self.curve.genus}"
            )

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def q(self) -> int:
        """q in d = 4q + j."""
        return self.degree // 4

    @property
    def j(self) -> int:
        """j in d = 4q + j."""
        return self.degree % 4

    def verify_points(self) -> bool:
        """Exact check that every listed affine point lies on the curve."""
        listed = [point.coords for point in self.points]
        listed += [point.coords for point in self.extra_rational_points if point.coords]
        return all(verify_on_curve(self.curve, coords) for coords in listed)

    @property
    def all_new(self) -> bool:
        return all(point.certificate.is_new for point in self.points)


def certified_point(
    curve: Any, coords: Tuple[Any, ...], extension: Poly, rng: SplitMix64
) -> ConstructedPoint:
    """Attach a newness certificate against K[x]/(extension) to coords."""
    certificate = newness_certificate(curve, coords, target_min_poly=extension, rng=rng)
    return ConstructedPoint(coords=coords, extension=extension, certificate=certificate)


def infinity_points(curve: Any) -> Tuple[RationalPoint, ...]:
    """The K-rational points at infinity of a double cover, as far as decided."""
    count = curve.rational_points_at_infinity()
    if count == 1:
        return (RationalPoint(None, "infinity"),)
    if count == 2:
        return (RationalPoint(None, "infinity (+)"), RationalPoint(None, "infinity (-)"))
    return ()
