"""Exact encodings of field elements, polynomials, algebras, curves and points."""

from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from python.algebra.etale import EtaleAlgebra, EtaleElement
from python.algebra.fields import (
    FieldDescriptor,
    FieldKind,
    FiniteFieldElement,
    RationalFunction,
    Ring,
)
from python.algebra.poly import Poly
from python.analysis.certificates import NewPointCertificate, common_algebra
from python.analysis.weierstrass import WeierstrassCurve
from python.cli.documents import (
    AlgebraDocument,
    CertificateDocument,
    CubicTermDocument,
    CurveDocument,
    PointDocument,
)
from python.curves.forms import TernaryForm
from python.curves.models import HyperellipticModel, PlaneCubic, SuperellipticModel


def encode_element(value: Any) -> Any:
    """Encode an element of a base field or of an etale tower.

    Raises:
        TypeError: If value is not an exact algebraic value
    """
    if isinstance(value, EtaleElement):
        return [encode_element(c) for c in value.coords]
    if isinstance(value, FiniteFieldElement):
        return list(value.coeffs)
    if isinstance(value, RationalFunction):
        return [list(value.num), list(value.den)]
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return str(Fraction(value))
    raise TypeError(f"cannot encode {type(value).__name__} {value!r}")


def _int_list(data: Any) -> List[int]:
    if not isinstance(data, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in data
    ):
        raise ValueError(f"expected a list of integers, got {data!r}")
    return data


def decode_element(ring: Ring, data: Any) -> Any:
    """Inverse of encode_element for a known ring.

    Raises:
        ValueError: If data does not encode an element of ring
    """
    if isinstance(ring, EtaleAlgebra):
        if not isinstance(data, list) or len(data) != ring.degree:
            raise ValueError(f"expected {ring.degree} coordinates over {ring.base}, got {data!r}")
        return ring.element([decode_element(ring.base, c) for c in data])
    if not isinstance(ring, FieldDescriptor):
        raise ValueError(f"cannot decode elements of {ring}")
    if ring.kind == FieldKind.RATIONALS:
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            raise ValueError(f"expected a rational such as \"-3/4\", got {data!r}")
        try:
            return ring.coerce(Fraction(data))
        except ZeroDivisionError as e:
            raise ValueError(f"zero denominator in {data!r}") from e
    if ring.kind == FieldKind.RATIONAL_FUNCTION:
        if not isinstance(data, list) or len(data) != 2:
            raise ValueError(f"expected [numerator, denominator], got {data!r}")
        den = _int_list(data[1])
        if not any(c % ring.p for c in den):
            raise ValueError(f"zero denominator in {data!r}")
        return ring.from_polys(tuple(_int_list(data[0])), tuple(den))
    if isinstance(data, int) and not isinstance(data, bool):
        return ring.coerce(data)
    return ring.coerce(_int_list(data))


def encode_poly(poly: Poly) -> List[Any]:
    return [encode_element(c) for c in poly.coeffs]


def decode_poly(ring: Ring, data: Sequence[Any]) -> Poly:
    return Poly(ring, [decode_element(ring, c) for c in data])


def encode_algebra(algebra: EtaleAlgebra) -> AlgebraDocument:
    base = algebra.base
    return AlgebraDocument(
        base=encode_algebra(base) if isinstance(base, EtaleAlgebra) else None,
        modulus=encode_poly(algebra.modulus),
        var=algebra.var,
    )


def decode_algebra(document: AlgebraDocument, field: FieldDescriptor) -> EtaleAlgebra:
    """Rebuild a tower layer by layer from the bottom field up."""
    base: Ring = field if document.base is None else decode_algebra(document.base, field)
    return EtaleAlgebra(decode_poly(base, document.modulus), var=document.var)


def encode_curve(curve: Any) -> CurveDocument:
    """Encode any curve model the constructions and families emit.

    Raises:
        TypeError: For an unknown model
    """
    if isinstance(curve, HyperellipticModel):
        return CurveDocument(
            kind="hyperelliptic",
            equation=curve.to_str(),
            Q=encode_poly(curve.Q),
            R=encode_poly(curve.R),
        )
    if isinstance(curve, SuperellipticModel):
        return CurveDocument(
            kind="superelliptic",
            equation=str(curve),
            exponent=curve.exponent,
            f=encode_poly(curve.f),
        )
    if isinstance(curve, PlaneCubic):
        terms = [
            CubicTermDocument(monomial=mon, coefficient=encode_element(c))
            for mon, c in sorted(curve.form.terms.items())
        ]
        return CurveDocument(kind="plane_cubic", equation=curve.to_str(), terms=terms)
    if isinstance(curve, WeierstrassCurve):
        invariants = (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6)
        return CurveDocument(
            kind="weierstrass",
            equation=str(curve),
            a_invariants=[encode_element(c) for c in invariants],
        )
    raise TypeError(f"cannot encode curve {type(curve).__name__}")


def decode_curve(document: CurveDocument, field: FieldDescriptor) -> Any:
    """Rebuild the curve model described by document over field.

    Raises:
        ValueError: If the document is incomplete or describes an invalid model
    """
    if document.kind == "hyperelliptic":
        return HyperellipticModel(decode_poly(field, document.Q), decode_poly(field, document.R))
    if document.kind == "superelliptic":
        if document.exponent is None:
            raise ValueError("superelliptic curve without exponent")
        return SuperellipticModel(document.exponent, decode_poly(field, document.f))
    if document.kind == "plane_cubic":
        terms = {t.monomial: decode_element(field, t.coefficient) for t in document.terms}
        return PlaneCubic(TernaryForm(field, terms))
    if len(document.a_invariants) != 5:
        raise ValueError(f"expected 5 a-invariants, got {len(document.a_invariants)}")
    return WeierstrassCurve(field, *(decode_element(field, c) for c in document.a_invariants))


def encode_coords(
    field: FieldDescriptor, coords: Sequence[Any]
) -> Tuple[Optional[AlgebraDocument], List[Any]]:
    """Move coordinates into their common algebra and encode them there."""
    algebra = common_algebra(field, coords)
    if algebra is None:
        return None, [encode_element(field.coerce(c)) for c in coords]
    return encode_algebra(algebra), [encode_element(algebra.coerce(c)) for c in coords]


def decode_coords(
    field: FieldDescriptor, algebra: Optional[AlgebraDocument], coords: Sequence[Any]
) -> Tuple[Any, ...]:
    ring: Ring = field if algebra is None else decode_algebra(algebra, field)
    return tuple(decode_element(ring, c) for c in coords)


def encode_certificate(certificate: NewPointCertificate) -> CertificateDocument:
    return CertificateDocument(
        status=certificate.status,
        residue_degree=certificate.residue_degree,
        degree=certificate.degree,
        on_curve=certificate.on_curve,
        special=certificate.special,
        squarefree=certificate.squarefree,
        irreducibility=certificate.irreducibility_status.value,
        irreducibility_method=certificate.irreducibility.method,
        lambdas=[encode_element(lam) for lam in certificate.lambdas],
        warnings=list(certificate.warnings),
    )


def encode_point(
    field: FieldDescriptor,
    label: str,
    coords: Sequence[Any],
    certificate: NewPointCertificate,
    extension: Optional[Poly] = None,
) -> PointDocument:
    """Encode a certified point; the extension is recorded when given."""
    algebra, encoded = encode_coords(field, coords)
    return PointDocument(
        label=label,
        algebra=algebra,
        coords=encoded,
        extension=encode_poly(extension) if extension is not None else None,
        certificate=encode_certificate(certificate),
    )
