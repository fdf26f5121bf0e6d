"""The subcommands of the newpoints tool.

Each command takes a ``CommandSettings`` and returns the document to write
together with its exit code. Exceptions are left to the caller, which maps
them to exit codes.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from absl import logging
from pydantic import BaseModel

from python.algebra.etale import EtaleAlgebra
from python.algebra.fields import FieldDescriptor
from python.analysis.composition import compose_new_point
from python.analysis.invariants import j_invariant
from python.analysis.weierstrass import ECPoint, WeierstrassCurve
from python.cli.documents import (
    CensusDocument,
    CompositionDocument,
    JInvariantDocument,
    ParityDocument,
    ReportDocument,
    VerificationDocument,
    WitnessDocument,
)
from python.cli.exceptions import InputError
from python.cli.poly_parser import parse_curve, parse_poly, parse_scalar
from python.cli.report_builder import (
    construction_document,
    extension_documents,
    family_document,
)
from python.cli.serialization import encode_curve, encode_element, encode_point, encode_poly
from python.cli.verify import verify_report
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.options import ConstructionOptions
from python.constructors.registry import ConstructorRegistry
from python.curves.models import HyperellipticModel
from python.families.registry import FamilyRegistry
from python.finite_lab.census import new_point_census
from python.finite_lab.counting import lift_curve
from python.finite_lab.options import CountingOptions
from python.finite_lab.parity import neumann_setzer_parity
from python.finite_lab.search import NewPoint, find_new_point, search_curve_with_new_point
from python.finite_lab.weil import weil_feasibility

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONSTRUCTION_FAILED = 2
EXIT_INPUT_ERROR = 3

Q = FieldDescriptor.rationals()


@dataclass(frozen=True)
class CommandSettings:
    """Everything a command reads from the command line.

    Attributes:
        args: Positional arguments after the command name
        field: Base field flag, Q, Fp:p, Fq:p:n[:modulus] or Fpt:p
        ext: Extension polynomials; repeats raise the multiplicity
        method: Construction method; auto for a single extension, else general
        seed: Seed of every random choice
        genus: Requested genus (construct, census search, charp)
        elementary_n: n of the elementary construction
        kummer_k: k of the Kummer construction
        ell, m, a, b, variant, alpha_method, m_exp: Family parameters
        p, n, d: F_{p^n} and the extension degree of a census; p is also
            the family and parity prime
        curve: Curve equation such as "y^2 + y = x^3 + x + 1"
        search: Whether census searches for a curve instead of reading one
        strategy: exhaustive or random
        max_workers: Threads of the finite-field kernels
        poly: The cubic or quartic of the jinv command
        x1, y1, x2, y2: Coordinates of the compose points as polynomials in
            the class of x modulo the first and second extension
    """

    args: Tuple[str, ...] = ()
    field: str = "Q"
    ext: Tuple[str, ...] = ()
    method: Optional[str] = None
    seed: int = 0
    genus: Optional[int] = None
    elementary_n: Optional[int] = None
    kummer_k: Optional[int] = None
    ell: Optional[int] = None
    m: Optional[str] = None
    a: Optional[str] = None
    b: Optional[str] = None
    variant: Optional[str] = None
    alpha_method: Optional[str] = None
    m_exp: Optional[int] = None
    p: Optional[int] = None
    n: int = 1
    d: Optional[int] = None
    curve: Optional[str] = None
    search: bool = False
    strategy: str = "exhaustive"
    max_workers: int = 4
    poly: Optional[str] = None
    x1: Optional[str] = None
    y1: Optional[str] = None
    x2: Optional[str] = None
    y2: Optional[str] = None


CommandResult = Tuple[BaseModel, int]


def _require(value: Any, flag: str) -> Any:
    if value is None:
        raise InputError(f"--{flag}", "this flag is required")
    return value


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _exit_code(document: ReportDocument) -> int:
    """Re-verify a freshly serialized report from its JSON text alone."""
    reparsed = ReportDocument.model_validate_json(document.model_dump_json())
    failed = [c for c in verify_report(reparsed) if not c.passed]
    for check in failed:
        logging.error("re-verification failed: %s %s", check.name, check.detail)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def cmd_construct(settings: CommandSettings) -> CommandResult:
    """Build a curve with new points over the requested extensions.

    Raises:
        InputError: If no extension is given or one does not parse
        ConstructionError: If the construction fails
    """
    field = FieldDescriptor.from_flag(settings.field)
    if not settings.ext:
        raise InputError("--ext", "at least one extension is required")
    polys = [parse_poly(text, field) for text in settings.ext]
    spec = ExtensionSpec.of(polys)
    single = len(spec.entries) == 1 and spec.entries[0][1] == 1
    method = settings.method or ("auto" if single else "general")
    params = {
        name: value
        for name, value in (
            ("genus", settings.genus),
            ("n", settings.elementary_n),
            ("k", settings.kummer_k),
        )
        if value is not None
    }
    start = time.perf_counter()
    report = ConstructorRegistry.run_method(
        method, spec, ConstructionOptions(seed=settings.seed), **params
    )
    document = construction_document(
        report, extension_documents(settings.ext, polys), _elapsed_ms(start)
    )
    return document, _exit_code(document)


def cmd_verify(settings: CommandSettings) -> CommandResult:
    """Re-verify a report file.

    Raises:
        InputError: Without a path
        OSError: If the file cannot be read
        ValueError: If it is not a report document
    """
    if len(settings.args) != 1:
        raise InputError(" ".join(settings.args), "verify takes exactly one path")
    path = settings.args[0]
    document = ReportDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
    checks = verify_report(document)
    passed = all(c.passed for c in checks)
    for check in checks:
        if not check.passed:
            logging.error("check failed: %s %s", check.name, check.detail)
    result = VerificationDocument(path=path, passed=passed, checks=checks)
    return result, EXIT_OK if passed else EXIT_VERIFICATION_FAILED


def _number(text: Optional[str]) -> Any:
    """A rational family parameter, as an int when integral."""
    if text is None:
        return None
    value = Fraction(parse_scalar(text, Q))
    return value.numerator if value.denominator == 1 else value


def family_params(name: str, settings: CommandSettings) -> Dict[str, Any]:
    """Keyword parameters for a family, taken from the flags it accepts."""
    available = {
        "ell": settings.ell,
        "m": _number(settings.m),
        "a": _number(settings.a),
        "b": _number(settings.b),
        "variant": settings.variant,
        "method": settings.alpha_method,
        "m_exp": settings.m_exp,
        "d": settings.d,
        "g": settings.genus,
        "p": settings.p,
        "field": FieldDescriptor.from_flag(settings.field),
    }
    return {
        parameter: available[parameter]
        for parameter in FamilyRegistry.get_family_parameters(name)
        if available.get(parameter) is not None
    }


def cmd_family(settings: CommandSettings) -> CommandResult:
    """Generate and verify one member of a named family.

    Raises:
        InputError: Without a family name
        FamilyParameterError: If the parameters violate the family's hypotheses
    """
    if len(settings.args) != 1:
        available = ", ".join(FamilyRegistry.get_available_families())
        raise InputError(" ".join(settings.args), f"expected one family name from {available}")
    name = settings.args[0]
    params = family_params(name, settings)
    start = time.perf_counter()
    report = FamilyRegistry.run_family(name, **params)
    document = family_document(report, _elapsed_ms(start))
    return document, _exit_code(document)


def _census_field(settings: CommandSettings) -> FieldDescriptor:
    if settings.p is None:
        return FieldDescriptor.from_flag(settings.field)
    if settings.n == 1:
        return FieldDescriptor.prime(settings.p)
    return FieldDescriptor.finite(settings.p, settings.n)


def _witness(curve: HyperellipticModel, d: int, point: Optional[NewPoint]) -> WitnessDocument:
    target = lift_curve(curve, d).field
    if point is None or point.at_infinity:
        return WitnessDocument(field=str(target), x=None, y=None, degree=d)
    return WitnessDocument(
        field=str(target), x=list(point.x.coeffs), y=list(point.y.coeffs), degree=point.degree
    )


def cmd_census(settings: CommandSettings) -> CommandResult:
    """Count the points of a curve new over F_{q^d}, or search for a curve with one.

    Raises:
        InputError: If a required flag is missing or the curve does not parse
        NotApplicableError: If the field is not finite
        FieldTooLargeError: If F_{q^d} is too large to enumerate
        SearchExhaustedError: If a search finds no curve
    """
    d = _require(settings.d, "d")
    field = _census_field(settings)
    if not field.is_finite:
        raise InputError(str(field), "census needs a finite field")
    options = CountingOptions(max_workers=settings.max_workers)
    start = time.perf_counter()
    examined = None
    if settings.search:
        genus = _require(settings.genus, "genus")
        result = search_curve_with_new_point(
            field.order, genus, d, settings.strategy, settings.seed, options
        )
        curve, census, point = result.curve, result.census, result.point
        examined = result.examined
    else:
        curve = parse_curve(_require(settings.curve, "curve"), field)
        if settings.genus is not None and settings.genus != curve.genus:
            raise InputError(settings.curve, f"genus is {curve.genus}, not {settings.genus}")
        census = new_point_census(curve, d, options)
        point = find_new_point(curve, d, settings.seed) if census.new_point_count else None
    document = CensusDocument(
        field=str(curve.field),
        curve=encode_curve(curve),
        genus=census.genus,
        d=d,
        counts=census.counts,
        new_point_count=census.new_point_count,
        closed_point_count=census.closed_point_count,
        weil_consistent=census.weil_consistent,
        weil_verdict=weil_feasibility(census.q, census.genus, d).value,
        examined=examined,
        witness=_witness(curve, d, point) if census.new_point_count else None,
        elapsed_ms=_elapsed_ms(start),
    )
    return document, EXIT_OK


def cmd_jinv(settings: CommandSettings) -> CommandResult:
    """I, J, discriminant and j-invariant of y^2 = ell for a cubic or quartic ell."""
    field = FieldDescriptor.from_flag(settings.field)
    ell = parse_poly(_require(settings.poly, "poly"), field)
    data = j_invariant(ell)
    document = JInvariantDocument(
        field=str(field),
        poly=encode_poly(ell),
        I=encode_element(data.I),
        J=encode_element(data.J),
        disc=encode_element(data.disc),
        j=encode_element(data.j),
    )
    return document, EXIT_OK


def weierstrass_from_model(model: HyperellipticModel) -> WeierstrassCurve:
    """Read y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6 off a parsed equation.

    Raises:
        ValueError: If the model is not in long Weierstrass form
    """
    Qx, R = model.Q, model.R
    if Qx.degree > 1 or R.degree != 3 or not R.is_monic():
        raise ValueError(f"{model} is not a Weierstrass equation")
    return WeierstrassCurve(
        model.field, Qx.coeff(1), R.coeff(2), Qx.coeff(0), R.coeff(1), R.coeff(0)
    )


def cmd_compose(settings: CommandSettings) -> CommandResult:
    """Add a point over K[x]/(m1) and one over K[x]/(m2) in the composite tower.

    Raises:
        InputError: Unless exactly two extensions and four coordinates are given
        ZeroDivisorError: If the two extensions are not linearly disjoint
    """
    field = FieldDescriptor.from_flag(settings.field)
    if len(settings.ext) != 2:
        raise InputError(" ".join(settings.ext), "compose takes exactly two --ext flags")
    E = weierstrass_from_model(parse_curve(_require(settings.curve, "curve"), field))
    m1, m2 = (parse_poly(text, field) for text in settings.ext)
    points: List[ECPoint] = []
    for modulus, names in ((m1, ("x1", "y1")), (m2, ("x2", "y2"))):
        algebra = EtaleAlgebra(modulus)
        x, y = (
            algebra.from_poly(parse_poly(_require(getattr(settings, name), name), field))
            for name in names
        )
        if not E.contains(ECPoint(x, y)):
            raise InputError(f"({x}, {y})", f"not a point of {E}")
        points.append(ECPoint(x, y))
    result = compose_new_point(E, (points[0], m1), (points[1], m2))
    total = result.point
    document = CompositionDocument(
        field=str(field),
        curve=encode_curve(E),
        extensions=list(extension_documents(settings.ext, [m1, m2])),
        point=encode_point(field, "P + Q", (total.x, total.y), result.certificate),
        exponent_gcd=result.exponent_gcd,
        torsion_free=result.torsion_free,
    )
    return document, EXIT_OK


def cmd_parity(settings: CommandSettings) -> CommandResult:
    """Root numbers over Q and over the degree-ell field for the curve of conductor p."""
    report = neumann_setzer_parity(_require(settings.ell, "ell"), _require(settings.p, "p"))
    document = ParityDocument(
        ell=report.ell,
        p=report.p,
        f=report.f,
        s=report.s,
        omega_q=report.omega_q,
        omega_l=report.omega_l,
        u_form=report.u_form,
        predicts_new_point=report.predicts_new_point,
    )
    logging.info(
        "parity l=%d p=%d: s=%d, new point predicted: %s",
        report.ell,
        report.p,
        report.s,
        report.predicts_new_point,
    )
    return document, EXIT_OK


COMMANDS: Dict[str, Callable[[CommandSettings], CommandResult]] = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "family": cmd_family,
    "census": cmd_census,
    "jinv": cmd_jinv,
    "compose": cmd_compose,
    "parity": cmd_parity,
}
