"""Family reports: the emitted curve, its points and the identity checks behind them."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from absl import logging

from python.algebra.irreducibility import IrreducibilityStatus
from python.algebra.poly import Poly
from python.algebra.random_source import SplitMix64
from python.analysis.certificates import (
    NewPointCertificate,
    newness_certificate,
    verify_on_curve,
)
from python.families.exceptions import IdentityFailedError


class ShapeStatus(Enum):
    """Outcome of the checks on a shape that is only supported by computation."""

    NOT_APPLICABLE = "NOT_APPLICABLE"
    CONFIRMED = "CONFIRMED"
    SHAPE_FAILED = "SHAPE_FAILED"


@dataclass(frozen=True)
class IdentityCheck:
    """One named exact equality test.

    Attributes:
        name: What was checked, e.g. "f(alpha) = 0"
        passed: Outcome of the test
        witness: Value that decided the test, rendered as text
        conjectural: True for shape checks whose failure is reported, not fatal
    """

    name: str
    passed: bool
    witness: str = ""
    conjectural: bool = False


@dataclass(frozen=True)
class FamilyPoint:
    """A claimed new point of a family member.

    Attributes:
        label: Short description such as "(alpha, alpha^4)"
        coords: (x, y), or (x, y, z) on a plane cubic
        certificate: Newness certificate of the point
    """

    label: str
    coords: Tuple[Any, ...]
    certificate: NewPointCertificate

    @property
    def degree(self) -> int:
        return self.certificate.residue_degree


@dataclass(frozen=True)
class FamilyReport:
    """Everything one family member produced.

    Attributes:
        family: Registry name of the family
        params: Parameters of the member, e.g. {"ell": 7, "m": 2}
        curve: The emitted curve; None when the family only checks identities
        points: The claimed new points
        rational_points: K-rational points on the curve
        checks: Every identity and shape check performed
        genus: Genus of the curve
        extras: Named by-products such as j-invariants, discriminants or g and h
        companions: Further curves the same data produces
    """

    family: str
    params: Dict[str, Any]
    curve: Any = None
    points: Tuple[FamilyPoint, ...] = ()
    rational_points: Tuple[Tuple[Any, ...], ...] = ()
    checks: Tuple[IdentityCheck, ...] = ()
    genus: Optional[int] = None
    extras: Dict[str, Any] = field(default_factory=dict)
    companions: Tuple["FamilyReport", ...] = ()

    @property
    def failed_checks(self) -> Tuple[str, ...]:
        """Names of the failed checks that are not conjectural."""
        return tuple(c.name for c in self.checks if not c.passed and not c.conjectural)

    @property
    def passed(self) -> bool:
        return not self.failed_checks and all(c.passed for c in self.companions)

    @property
    def shape_status(self) -> ShapeStatus:
        shape = [c for c in self.checks if c.conjectural]
        if not shape:
            return ShapeStatus.NOT_APPLICABLE
        if all(c.passed for c in shape):
            return ShapeStatus.CONFIRMED
        return ShapeStatus.SHAPE_FAILED

    @property
    def all_new(self) -> bool:
        return all(point.certificate.is_new for point in self.points)

    def check(self, name: str) -> IdentityCheck:
        """Look up a check by name.

        Raises:
            KeyError: If no check of that name was performed
        """
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(f"no check named '{name}' in {self.family}")

    def require(self) -> "FamilyReport":
        """Return self, or raise when an unconditional identity failed.

        Raises:
            IdentityFailedError: Naming every failing check
        """
        failed = list(self.failed_checks)
        for companion in self.companions:
            failed.extend(f"{companion.family}: {name}" for name in companion.failed_checks)
        if failed:
            raise IdentityFailedError(self.family, failed)
        return self


def check(name: str, passed: bool, witness: Any = "", conjectural: bool = False) -> IdentityCheck:
    return IdentityCheck(
        name=name, passed=bool(passed), witness=str(witness), conjectural=conjectural
    )


def point_check(curve: Any, label: str, coords: Tuple[Any, ...]) -> IdentityCheck:
    """Exact membership test of coords on curve."""
    return check(f"{label} on curve", verify_on_curve(curve, coords))


def family_point(
    curve: Any,
    label: str,
    coords: Tuple[Any, ...],
    target_min_poly: Optional[Poly] = None,
    target_degree: Optional[int] = None,
    seed: int = 0,
) -> FamilyPoint:
    """Certify a claimed point against its residue field."""
    certificate = newness_certificate(
        curve,
        coords,
        target_min_poly=target_min_poly,
        target_degree=target_degree,
        rng=SplitMix64(seed),
    )
    return FamilyPoint(label=label, coords=coords, certificate=certificate)


def is_integral(poly: Poly) -> bool:
    """Whether every coefficient of a rational polynomial is an integer."""
    return all(Fraction(c).denominator == 1 for c in poly.coeffs)


def emit(report: FamilyReport) -> FamilyReport:
    """Log the outcome of a family member and hand the report back."""
    params = ", ".join(f"{k}={v}" for k, v in report.params.items())
    if report.failed_checks:
        logging.warning(
            "family %s(%s): failed checks %s", report.family, params, list(report.failed_checks)
        )
    if report.shape_status == ShapeStatus.SHAPE_FAILED:
        logging.warning("family %s(%s): shape not confirmed", report.family, params)
    for point in report.points:
        if point.certificate.irreducibility_status == IrreducibilityStatus.LIKELY:
            logging.warning(
                "family %s(%s): irreducibility of %s only LIKELY",
                report.family,
                params,
                point.label,
            )
    logging.info(
        "family %s(%s): genus %s, %d of %d checks passed",
        report.family,
        params,
        report.genus,
        sum(c.passed for c in report.checks),
        len(report.checks),
    )
    return report
