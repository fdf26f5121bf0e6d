"""Artin-Schreier type families: new points over K[x]/(x^ell - a x - b).

With alpha^ell = a alpha + b, powers of alpha give points on small curves.
For ell = 12, 13, 6g+4 and 6g+5 the point has x-coordinate alpha^k,
k = 5 or 3, whose polynomial f is displayed in ``power_polynomial``; that f(x^k)
is a multiple of x^ell - a x - b is a polynomial identity in a and b, checked
at several integer pairs.
"""

from enum import Enum
from functools import partial
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from python.algebra.etale import EtaleAlgebra, EtaleElement
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly, is_separable
from python.analysis.invariants import binary_discriminant, ternary_cubic_discriminant
from python.curves.models import HyperellipticModel, PlaneCubic, SuperellipticModel
from python.families.exceptions import FamilyParameterError
from python.families.polynomials import Q
from python.families.report import (
    FamilyReport,
    IdentityCheck,
    check,
    emit,
    family_point,
    point_check,
)

FAMILY = "artin_schreier"
DEFAULT_PAIRS: Tuple[Tuple[int, int], ...] = ((1, 1), (2, 3), (-1, 5), (3, -2), (7, 11))


class ArtinSchreierVariant(Enum):
    CUBE = "cube"
    FOURTH = "fourth"
    FOURTH_INVERSE = "fourth-inv"
    TWELVE = "12"
    THIRTEEN = "13"
    SIX_G_PLUS_FOUR = "6g+4"
    SIX_G_PLUS_FIVE = "6g+5"


V = ArtinSchreierVariant

_APPLIES: Dict[ArtinSchreierVariant, Callable[[int], bool]] = {
    V.CUBE: lambda ell: ell >= 2 and (ell + 1) % 3 == 0,
    V.FOURTH: lambda ell: ell >= 3 and (ell + 1) % 4 == 0,
    V.FOURTH_INVERSE: lambda ell: ell >= 6 and (ell - 2) % 4 == 0,
    V.TWELVE: lambda ell: ell == 12,
    V.THIRTEEN: lambda ell: ell == 13,
    V.SIX_G_PLUS_FOUR: lambda ell: ell >= 10 and ell % 6 == 4,
    V.SIX_G_PLUS_FIVE: lambda ell: ell >= 5 and ell % 6 == 5,
}


def variant_applies(variant: ArtinSchreierVariant, ell: int) -> bool:
    """Whether the variant's divisibility condition on ell holds."""
    return _APPLIES[variant](ell)

# Exponent k of the x-coordinate alpha^k.
POWER_VARIANTS: Dict[ArtinSchreierVariant, int] = {
    V.TWELVE: 5,
    V.THIRTEEN: 5,
    V.SIX_G_PLUS_FOUR: 3,
    V.SIX_G_PLUS_FIVE: 3,
}


def trinomial(ell: int, a: Any, b: Any, field: FieldDescriptor = Q) -> Poly:
    """x^ell - a x - b."""
    return Poly.monomial(field, ell) - Poly(field, [b, a])


def power_polynomial(
    variant: ArtinSchreierVariant, ell: int, a: Any, b: Any, field: FieldDescriptor = Q
) -> Poly:
    """The polynomial f of alpha^k for the power variants.

    Raises:
        ValueError: For a variant without a power polynomial
    """
    mono = partial(Poly.monomial, field)
    if variant == V.TWELVE:
        f = mono(12) - mono(5, 5 * a * b**2) - mono(3, 5 * a**3 * b) - mono(1, a**5)
        return f - b**5
    if variant == V.THIRTEEN:
        f = mono(13) - mono(8, 5 * a * b) + mono(3, 5 * a**2 * b**2) - mono(1, a**5)
        return f - b**5
    if variant == V.SIX_G_PLUS_FOUR:
        g = (ell - 4) // 6
        f = mono(ell) - mono(4 * g + 3, 3 * a) + mono(2 * g + 2, 3 * a**2) - mono(1, a**3)
        return f - b**3
    if variant == V.SIX_G_PLUS_FIVE:
        g = (ell - 5) // 6
        return mono(ell) - mono(2 * g + 2, 3 * a * b) - mono(1, a**3) - b**3
    raise ValueError(f"variant {variant.value} has no power polynomial")


def substitution_divisible(variant: ArtinSchreierVariant, ell: int, a: int, b: int) -> bool:
    """Whether x^ell - a x - b divides f(x^k) over Q."""
    f = power_polynomial(variant, ell, Fraction(a), Fraction(b))
    return not f.substitute_power(POWER_VARIANTS[variant]) % trinomial(ell, a, b)


def twelve_cubic(a: Any, b: Any, field: FieldDescriptor = Q) -> PlaneCubic:
    """y^3 - 5b^2 x y - 5b x^3 - a^4 x - b^5 = 0."""
    return PlaneCubic.from_affine(
        field,
        {(0, 3): 1, (1, 1): -5 * b * b, (3, 0): -5 * b, (1, 0): -(a**4), (0, 0): -(b**5)},
    )


def thirteen_curve(a: Any, b: Any, field: FieldDescriptor = Q) -> HyperellipticModel:
    """y^2 - 5ab x^2 y = -5a^2 b^2 x^4 + a^5 x^2 + b^5 x."""
    Qpoly = Poly.monomial(field, 2, -5 * a * b)
    R = Poly(field, [0, b**5, a**5, 0, -5 * a * a * b * b])
    return HyperellipticModel(Qpoly, R)


def jacobian_discriminant(variant: ArtinSchreierVariant, a: Any, b: Any) -> Any:
    """Discriminant of the genus-one curve of the ell = 12 or 13 member.

    ell = 12 uses the degree-12 invariant of the plane cubic, ell = 13 the
    discriminant of the quartic obtained by completing the square.
    """
    if variant == V.TWELVE:
        return ternary_cubic_discriminant(twelve_cubic(Q.coerce(a), Q.coerce(b)))
    if variant == V.THIRTEEN:
        return binary_discriminant(thirteen_curve(Q.coerce(a), Q.coerce(b)).completed_square())
    raise ValueError(f"variant {variant.value} has no Jacobian discriminant formula")


def closed_form_discriminant(variant: ArtinSchreierVariant, a: Any, b: Any) -> Any:
    """The closed forms the computed discriminants are compared with."""
    a, b = Q.coerce(a), Q.coerce(b)
    if variant == V.TWELVE:
        return -25 * b**2 * (432 * a**24 + 93535 * a**12 * b**11 + 200 * b**22)
    if variant == V.THIRTEEN:
        return -5 * a**4 * b**12 * (16 * a**13 + 135 * b**12)
    raise ValueError(f"variant {variant.value} has no closed-form discriminant")


def discriminant_proportionality(
    variant: ArtinSchreierVariant, pairs: Sequence[Tuple[int, int]] = DEFAULT_PAIRS
) -> IdentityCheck:
    """One constant c with computed = c * closed form at every pair."""
    ratios: List[Any] = []
    for a, b in pairs:
        closed = closed_form_discriminant(variant, a, b)
        computed = jacobian_discriminant(variant, a, b)
        if not closed:
            if computed:
                return check("discriminant proportional to closed form", False, (a, b))
            continue
        ratios.append(computed / closed)
    constant = len(set(ratios)) == 1 and bool(ratios[0])
    return check("discriminant proportional to closed form", constant, ratios)


def _curve_and_point(
    variant: ArtinSchreierVariant, ell: int, a: Any, b: Any, alpha: EtaleElement
) -> Tuple[Any, str, Tuple[Any, ...], Tuple[Tuple[Any, ...], ...], int]:
    """Curve, point label, coordinates, rational points and expected genus."""
    field: FieldDescriptor = alpha.algebra.field
    quadratic = Poly(field, [0, b, a])
    if variant == V.CUBE:
        k = (ell + 1) // 3
        curve = SuperellipticModel(3, quadratic)
        return curve, f"(alpha, alpha^{k})", (alpha, alpha**k), ((0, 0),), 1
    if variant == V.FOURTH:
        k = (ell + 1) // 4
        curve = SuperellipticModel(4, quadratic)
        return curve, f"(alpha, alpha^{k})", (alpha, alpha**k), ((0, 0),), 1
    if variant == V.FOURTH_INVERSE:
        k = (ell - 2) // 4
        curve = SuperellipticModel(4, Poly(field, [0, a, b]))
        return curve, f"(1/alpha, alpha^{k})", (alpha.inverse(), alpha**k), ((0, 0),), 1
    if variant == V.TWELVE:
        curve = twelve_cubic(a, b, field)
        coords = (alpha**5 * a, alpha**20, 1)
        return curve, "(a alpha^5, alpha^20)", coords, (), 1
    if variant == V.THIRTEEN:
        curve = thirteen_curve(a, b, field)
        return curve, "(alpha^5, alpha^35)", (alpha**5, alpha**35), ((0, 0),), 1
    if variant == V.SIX_G_PLUS_FOUR:
        g = (ell - 4) // 6
        curve = HyperellipticModel(
            Poly.monomial(field, g + 1, -3 * a),
            Poly.monomial(field, 2 * g + 2, -3 * a * a) + Poly(field, [b**3, a**3]),
        )
        k = 3 * (3 * g + 2)
        return curve, f"(alpha^3, alpha^{k})", (alpha**3, alpha**k), (), g
    g = (ell - 5) // 6
    rhs = Poly.monomial(field, 2 * g + 3, 3 * a * b) + Poly(field, [0, b**3, a**3])
    curve = HyperellipticModel.from_rhs(rhs)
    k = 3 * (3 * g + 3)
    return curve, f"(alpha^3, alpha^{k})", (alpha**3, alpha**k), ((0, 0),), g + 1


def family_artin_schreier(
    ell: int,
    a: Any,
    b: Any,
    variant: Any,
    field: FieldDescriptor = Q,
    pairs: Optional[Sequence[Tuple[int, int]]] = None,
) -> FamilyReport:
    """The variant's curve through its point over K[x]/(x^ell - a x - b).

    Args:
        ell: Degree of the extension
        a: Coefficient of x
        b: Constant term
        variant: ArtinSchreierVariant or its name, e.g. "cube" or "6g+5"
        field: Base field, of characteristic other than 2 and 3
        pairs: Integer pairs for the identity checks over Q; (a, b) is added

    Example Usage:
        ```python
        report = family_artin_schreier(11, 1, 1, "cube")
        str(report.curve)  # y^3 = x^2 + x
        report.passed  # True
        ```

    Raises:
        FamilyParameterError: If a hypothesis fails or the variant does not
            apply to ell
    """
    try:
        variant = ArtinSchreierVariant(variant)
    except ValueError as error:
        available = [v.value for v in ArtinSchreierVariant]
        raise FamilyParameterError(
            FAMILY, f"unknown variant '{variant}', available variants: {available}"
        ) from error
    if field.characteristic in (2, 3):
        raise FamilyParameterError(FAMILY, f"characteristic {field.characteristic} excluded")
    if not variant_applies(variant, ell):
        raise FamilyParameterError(FAMILY, f"variant {variant.value} does not apply to ell={ell}")
    a, b = field.coerce(a), field.coerce(b)
    if not a or not b:
        raise FamilyParameterError(FAMILY, f"a b must be nonzero, got a={a}, b={b}")
    modulus = trinomial(ell, a, b, field)
    if not is_separable(modulus):
        raise FamilyParameterError(FAMILY, f"{modulus} is not squarefree")
    algebra = EtaleAlgebra(modulus, var="alpha")
    alpha = algebra.gen()
    curve, label, coords, rational, genus = _curve_and_point(variant, ell, a, b, alpha)
    checks = [point_check(curve, label, coords)]
    checks.extend(point_check(curve, str(point), point) for point in rational)
    checks.append(check(f"genus = {genus}", curve.genus == genus, curve.genus))
    extras: Dict[str, Any] = {}
    if variant in POWER_VARIANTS:
        f = power_polynomial(variant, ell, a, b, field)
        k = POWER_VARIANTS[variant]
        extras["f"] = f
        checks.append(check(f"f(alpha^{k}) = 0", not f(alpha**k)))
        if field == Q:
            grid = list(pairs or DEFAULT_PAIRS)
            if (a, b) not in grid and a.denominator == 1 and b.denominator == 1:
                grid.append((int(a), int(b)))
            failing = [pair for pair in grid if not substitution_divisible(variant, ell, *pair)]
            checks.append(
                check(f"x^{ell} - a x - b divides f(x^{k})", not failing, failing or grid)
            )
            if variant in (V.TWELVE, V.THIRTEEN):
                checks.append(discriminant_proportionality(variant, grid))
    return emit(
        FamilyReport(
            family=FAMILY,
            params={"ell": ell, "a": a, "b": b, "variant": variant.value},
            curve=curve,
            points=(family_point(curve, label, coords, target_min_poly=modulus),),
            rational_points=rational,
            checks=tuple(checks),
            genus=curve.genus,
            extras=extras,
        )
    )
