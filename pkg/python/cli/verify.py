"""Independent re-verification of a report document.

Every claim is recomputed from the encoded data alone: smoothness and genus
of the curve, membership of every listed point, the residue degree reached
by the recorded primitive-element multipliers, and irreducibility of the
recorded extension.
"""

from typing import Any, List, Sequence

from python.algebra.etale import char_poly
from python.algebra.fields import FieldDescriptor
from python.algebra.irreducibility import IrreducibilityStatus, certify_irreducible
from python.algebra.poly import squarefree_part
from python.analysis.certificates import common_algebra, verify_on_curve
from python.analysis.weierstrass import WeierstrassCurve
from python.cli.documents import (
    PointDocument,
    RationalPointDocument,
    ReportDocument,
    VerificationCheckDocument,
)
from python.cli.serialization import decode_coords, decode_curve, decode_element, decode_poly
from python.curves.models import HyperellipticModel, PlaneCubic

Check = VerificationCheckDocument


def residue_degree(field: FieldDescriptor, coords: Sequence[Any], lambdas: Sequence[Any]) -> int:
    """Largest degree of K(x + lambda y) over K for lambda = 0 and the given multipliers."""
    x, y = coords[0], coords[1]
    if len(coords) == 3:
        x, y = x / coords[2], y / coords[2]
    algebra = common_algebra(field, [x, y])
    if algebra is None:
        return 1
    x, y = algebra.coerce(x), algebra.coerce(y)
    best = squarefree_part(char_poly(x)).degree
    for lam in lambdas:
        best = max(best, squarefree_part(char_poly(x + lam * y)).degree)
    return best


def _curve_checks(curve: Any, document: ReportDocument) -> List[Check]:
    checks = []
    if isinstance(curve, WeierstrassCurve):
        smooth = bool(curve.discriminant)
        checks.append(Check(name="curve is smooth", passed=smooth, detail="discriminant"))
        genus = 1
    else:
        if isinstance(curve, (HyperellipticModel, PlaneCubic)):
            smoothness = (
                curve.smoothness(seed=document.seed)
                if isinstance(curve, PlaneCubic)
                else curve.smoothness()
            )
            checks.append(
                Check(name="curve is smooth", passed=smoothness.smooth, detail=smoothness.method)
            )
        try:
            genus = curve.genus
        except ValueError as e:
            return checks + [Check(name="genus", passed=False, detail=str(e))]
    if document.genus is not None:
        checks.append(
            Check(
                name="genus",
                passed=genus == document.genus,
                detail=f"recomputed {genus}, claimed {document.genus}",
            )
        )
    return checks


def verify_point(curve: Any, field: FieldDescriptor, point: PointDocument) -> List[Check]:
    """Re-verify one certified point.

    Args:
        curve: The decoded curve
        field: Its base field
        point: The point as written in the report

    Returns:
        One check per claim: membership, residue degree, extension degree and
        irreducibility, and the final newness status
    """
    label = point.label
    claimed = point.certificate
    try:
        coords = decode_coords(field, point.algebra, point.coords)
        lambdas = [decode_element(field, lam) for lam in claimed.lambdas]
    except (TypeError, ValueError, ArithmeticError) as e:
        return [Check(name=f"{label}: decodes", passed=False, detail=str(e))]
    on_curve = verify_on_curve(curve, coords)
    checks = [Check(name=f"{label}: on curve", passed=on_curve and claimed.on_curve)]
    residue = residue_degree(field, coords, lambdas)
    checks.append(
        Check(
            name=f"{label}: residue degree",
            passed=residue == claimed.residue_degree,
            detail=f"recomputed {residue}, claimed {claimed.residue_degree}",
        )
    )
    status = IrreducibilityStatus(claimed.irreducibility)
    if point.extension is not None:
        extension = decode_poly(field, point.extension)
        status = certify_irreducible(extension).status
        checks.append(
            Check(
                name=f"{label}: extension",
                passed=extension.degree == claimed.degree
                and status != IrreducibilityStatus.FAILED,
                detail=f"degree {extension.degree}, irreducibility {status.value}",
            )
        )
    is_new = on_curve and residue == claimed.degree and status != IrreducibilityStatus.FAILED
    checks.append(
        Check(
            name=f"{label}: newness",
            passed=is_new == (claimed.status != "NOT_NEW"),
            detail=claimed.status,
        )
    )
    return checks


def verify_report(document: ReportDocument) -> List[Check]:
    """Recompute every claim of a construct or family document.

    Args:
        document: The parsed report

    Returns:
        Per-check diagnostics; the report verifies iff all of them passed

    Example Usage:
        ```python
        document = ReportDocument.model_validate_json(text)
        failed = [c.name for c in verify_report(document) if not c.passed]
        ```
    """
    field = FieldDescriptor.from_flag(document.field)
    checks = [
        Check(
            name=f"identity {check.name}",
            passed=check.passed or check.conjectural,
            detail=check.witness,
        )
        for check in document.checks
    ]
    if document.curve is not None:
        try:
            curve = decode_curve(document.curve, field)
        except (TypeError, ValueError, ArithmeticError) as e:
            return checks + [Check(name="curve decodes", passed=False, detail=str(e))]
        checks += _curve_checks(curve, document)
        for point in document.points:
            checks += verify_point(curve, field, point)
        for rational in document.rational_points:
            if rational.coords is not None:
                checks.append(_rational_point_check(curve, field, rational))
    for i, companion in enumerate(document.companions, start=1):
        checks += [
            c.model_copy(update={"name": f"companion {i}: {c.name}"})
            for c in verify_report(companion)
        ]
    return checks


def _rational_point_check(
    curve: Any, field: FieldDescriptor, rational: RationalPointDocument
) -> Check:
    name = f"{rational.label}: rational point on curve"
    try:
        coords = decode_coords(field, None, rational.coords or [])
    except (TypeError, ValueError, ArithmeticError) as e:
        return Check(name=name, passed=False, detail=str(e))
    return Check(name=name, passed=verify_on_curve(curve, coords))
