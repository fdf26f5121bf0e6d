"""Conversion of construction and family reports into JSON documents."""

from typing import Any, Dict, Optional, Sequence, Tuple

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.analysis.certificates import common_algebra
from python.cli.documents import (
    CheckDocument,
    ExtensionDocument,
    RationalPointDocument,
    ReportDocument,
)
from python.cli.serialization import encode_coords, encode_curve, encode_point, encode_poly
from python.constructors.report import ConstructionReport
from python.families.report import FamilyReport


def extension_documents(
    texts: Sequence[str], polys: Sequence[Poly]
) -> Tuple[ExtensionDocument, ...]:
    """One document per distinct polynomial, repeats counted as multiplicity."""
    merged: Dict[Poly, ExtensionDocument] = {}
    for text, poly in zip(texts, polys):
        if poly in merged:
            previous = merged[poly]
            merged[poly] = previous.model_copy(update={"multiplicity": previous.multiplicity + 1})
        else:
            merged[poly] = ExtensionDocument(text=text, poly=encode_poly(poly))
    return tuple(merged.values())


def _rational_point(
    field: FieldDescriptor, label: str, coords: Optional[Sequence[Any]], note: str
) -> RationalPointDocument:
    if coords is None:
        return RationalPointDocument(label=label, coords=None, note=note)
    _, encoded = encode_coords(field, coords)
    return RationalPointDocument(label=label, coords=encoded, note=note)


def construction_document(
    report: ConstructionReport,
    extensions: Sequence[ExtensionDocument],
    elapsed_ms: int = 0,
) -> ReportDocument:
    """The document written by the construct command."""
    field = report.curve.field
    points = [
        encode_point(
            field,
            f"P{i} over K[x]/({point.extension})",
            point.coords,
            point.certificate,
            point.extension,
        )
        for i, point in enumerate(report.points, start=1)
    ]
    rational = [
        _rational_point(field, point.label, point.coords, point.note)
        for point in report.extra_rational_points
    ]
    extras = {"m": str(report.m), "degree": str(report.degree)}
    if report.h is not None:
        extras["h"] = str(report.h)
    if report.spec is not None:
        extras["spec"] = str(report.spec)
    if report.j_invariant is not None:
        extras["j"] = str(report.j_invariant)
    if report.order_bound_result is not None:
        extras["order_bound"] = str(report.order_bound_result)
    if report.rescaling is not None:
        extras["rescaling"] = str(report.rescaling)
    return ReportDocument(
        command="construct",
        field=str(field),
        method=report.method,
        seed=report.seed,
        extensions=list(extensions),
        curve=encode_curve(report.curve),
        genus=report.genus,
        points=points,
        rational_points=rational,
        extras=extras,
        retries=report.retries,
        warnings=list(report.warnings),
        elapsed_ms=elapsed_ms,
    )


def _family_extension(
    field: FieldDescriptor, coords: Sequence[Any], degree: int
) -> Optional[Poly]:
    """The modulus of a single-layer algebra of the right degree, if the point has one."""
    algebra = common_algebra(field, coords)
    if algebra is None or not isinstance(algebra.base, FieldDescriptor):
        return None
    return algebra.modulus if algebra.degree == degree else None


def family_document(report: FamilyReport, elapsed_ms: int = 0) -> ReportDocument:
    """The document written by the family command; companions nest recursively."""
    curve = report.curve
    field = curve.field if curve is not None else FieldDescriptor.rationals()
    points = [
        encode_point(
            field,
            point.label,
            point.coords,
            point.certificate,
            _family_extension(field, point.coords, point.certificate.degree),
        )
        for point in report.points
    ]
    rational = [
        _rational_point(field, f"({', '.join(str(c) for c in coords)})", coords, "")
        for coords in report.rational_points
    ]
    checks = [
        CheckDocument(
            name=c.name, passed=c.passed, witness=c.witness, conjectural=c.conjectural
        )
        for c in report.checks
    ]
    warnings = [f"{name} failed" for name in report.failed_checks]
    warnings += [w for point in report.points for w in point.certificate.warnings]
    return ReportDocument(
        command="family",
        field=str(field),
        method=report.family,
        params={k: str(v) for k, v in report.params.items()},
        curve=encode_curve(curve) if curve is not None else None,
        genus=report.genus,
        points=points,
        rational_points=rational,
        checks=checks,
        extras={k: str(v) for k, v in report.extras.items()},
        companions=[family_document(c) for c in report.companions],
        warnings=warnings,
        elapsed_ms=elapsed_ms,
    )
