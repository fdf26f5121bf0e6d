"""JSON documents written and read by the command-line tool.

Every number is exact: rationals are strings such as ``"-15/64"``, finite
field elements are little-endian integer lists, elements of F_p(t) are
``[numerator, denominator]`` pairs of such lists, and elements of an etale
algebra are lists of coordinates over the layer below. Polynomials are
little-endian lists of encoded coefficients.
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "1.0"

CurveKind = Literal["hyperelliptic", "superelliptic", "plane_cubic", "weierstrass"]


class AlgebraDocument(BaseModel):
    """One layer base[var]/(modulus) of an extension tower."""

    model_config = ConfigDict(frozen=True)

    base: Optional["AlgebraDocument"] = Field(
        default=None, description="The layer below; None when the base is the field itself"
    )
    modulus: List[Any] = Field(description="Modulus coefficients over the layer below")
    var: str = Field(default="a", description="Display name of the generator")


class CubicTermDocument(BaseModel):
    """One term c x^i y^j z^k of a plane cubic."""

    model_config = ConfigDict(frozen=True)

    monomial: Tuple[int, int, int] = Field(description="Exponents (i, j, k)")
    coefficient: Any = Field(description="Encoded coefficient c")


class CurveDocument(BaseModel):
    """A curve over the report's base field."""

    model_config = ConfigDict(frozen=True)

    kind: CurveKind = Field(description="Which model the fields below describe")
    equation: str = Field(description="Human-readable equation")
    Q: List[Any] = Field(default_factory=list, description="Q in y^2 + Q(x) y = R(x)")
    R: List[Any] = Field(default_factory=list, description="R in y^2 + Q(x) y = R(x)")
    exponent: Optional[int] = Field(default=None, description="n in y^n = f(x)")
    f: List[Any] = Field(default_factory=list, description="f in y^n = f(x)")
    terms: List[CubicTermDocument] = Field(
        default_factory=list, description="Terms of a plane cubic form"
    )
    a_invariants: List[Any] = Field(
        default_factory=list, description="a1, a2, a3, a4, a6 of a Weierstrass equation"
    )


class CertificateDocument(BaseModel):
    """The claims of a newness certificate."""

    model_config = ConfigDict(frozen=True)

    status: str = Field(description="NEW, NEW_WITH_WARNINGS or NOT_NEW")
    residue_degree: int = Field(description="Degree of K(P) over K")
    degree: int = Field(description="Target degree [L : K]")
    on_curve: bool = Field(description="Whether P satisfies the curve equation")
    special: bool = Field(description="Whether y(P) lies in K[x(P)]")
    squarefree: bool = Field(description="Whether the characteristic polynomial of x is")
    irreducibility: str = Field(description="PROVED, LIKELY or FAILED")
    irreducibility_method: str = Field(description="Argument that decided irreducibility")
    lambdas: List[Any] = Field(
        default_factory=list, description="Multipliers for the primitive element x + lambda y"
    )
    warnings: List[str] = Field(default_factory=list, description="Unconfirmed hypotheses")


class PointDocument(BaseModel):
    """A new point with its certificate."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Short description of the point")
    algebra: Optional[AlgebraDocument] = Field(
        default=None, description="Algebra holding the coordinates; None if K-rational"
    )
    coords: List[Any] = Field(description="(x, y), or (x, y, z) on a plane cubic")
    extension: Optional[List[Any]] = Field(
        default=None, description="Defining polynomial of the residue field, when known"
    )
    certificate: CertificateDocument = Field(description="Newness certificate")


class RationalPointDocument(BaseModel):
    """A K-rational point carried by the curve."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(description="Short description of the point")
    coords: Optional[List[Any]] = Field(description="Coordinates; None at infinity")
    note: str = Field(default="", description="Provenance of the point")


class ExtensionDocument(BaseModel):
    """One requested extension K[x]/(poly) with its multiplicity."""

    model_config = ConfigDict(frozen=True)

    text: str = Field(description="The polynomial as written")
    poly: List[Any] = Field(description="Little-endian coefficients")
    multiplicity: int = Field(default=1, description="How many points to place over it")


class CheckDocument(BaseModel):
    """One named identity check of a family member."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="What was checked")
    passed: bool = Field(description="Outcome")
    witness: str = Field(default="", description="Value that decided the check")
    conjectural: bool = Field(default=False, description="Whether failure is reported only")


class ReportDocument(BaseModel):
    """Output of the construct and family commands.

    Example Usage:
        ```python
        document = ReportDocument.model_validate_json(path.read_text())
        document.points[0].certificate.status  # "NEW"
        ```
    """

    model_config = ConfigDict(frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION, description="Document format version")
    command: Literal["construct", "family"] = Field(description="Command that wrote it")
    field: str = Field(description="Base field flag, e.g. Q or Fp:7")
    method: str = Field(description="Construction method or family name")
    params: Dict[str, str] = Field(default_factory=dict, description="Method parameters")
    seed: int = Field(default=0, description="Seed of the run")
    extensions: List[ExtensionDocument] = Field(
        default_factory=list, description="Requested extensions"
    )
    curve: Optional[CurveDocument] = Field(default=None, description="The emitted curve")
    genus: Optional[int] = Field(default=None, description="Genus of the curve")
    points: List[PointDocument] = Field(default_factory=list, description="The new points")
    rational_points: List[RationalPointDocument] = Field(
        default_factory=list, description="K-rational points"
    )
    checks: List[CheckDocument] = Field(default_factory=list, description="Identity checks")
    extras: Dict[str, str] = Field(default_factory=dict, description="Named by-products")
    companions: List["ReportDocument"] = Field(
        default_factory=list, description="Further curves the same data produces"
    )
    retries: int = Field(default=0, description="Rejected samples before acceptance")
    warnings: List[str] = Field(default_factory=list, description="Unconfirmed hypotheses")
    elapsed_ms: int = Field(default=0, description="Wall time of the command")


class WitnessDocument(BaseModel):
    """An explicit new point over F_{q^d} found by the census search."""

    model_config = ConfigDict(frozen=True)

    field: str = Field(description="The field F_{q^d} holding the coordinates")
    x: Optional[List[int]] = Field(description="x-coordinate; None at infinity")
    y: Optional[List[int]] = Field(description="y-coordinate; None at infinity")
    degree: int = Field(description="Degree of the field generated by the point")


class CensusDocument(BaseModel):
    """Output of the census command."""

    model_config = ConfigDict(frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION, description="Document format version")
    field: str = Field(description="Base field F_q")
    curve: CurveDocument = Field(description="The counted curve")
    genus: int = Field(description="Genus of the curve")
    d: int = Field(description="Degree of the extension F_{q^d}")
    counts: Dict[int, int] = Field(description="N_e for every e dividing d")
    new_point_count: int = Field(description="Points over F_{q^d} in no proper subfield")
    closed_point_count: int = Field(description="Closed points of degree d")
    weil_consistent: bool = Field(description="Whether every N_e obeys the Weil bounds")
    weil_verdict: str = Field(description="guaranteed or unknown for every curve of this genus")
    examined: Optional[int] = Field(default=None, description="Candidates tried by a search")
    witness: Optional[WitnessDocument] = Field(default=None, description="An explicit new point")
    elapsed_ms: int = Field(default=0, description="Wall time of the command")


class ParityDocument(BaseModel):
    """Output of the parity command."""

    model_config = ConfigDict(frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION, description="Document format version")
    ell: int = Field(description="Odd prime ell")
    p: int = Field(description="Prime p of bad reduction")
    f: int = Field(description="Order of p modulo ell")
    s: int = Field(description="Number of primes above p in the splitting field")
    omega_q: int = Field(description="Root number over Q")
    omega_l: int = Field(description="Root number over the degree-ell field")
    u_form: Optional[int] = Field(description="u with p = u^2 + 64, when it exists")
    predicts_new_point: bool = Field(description="Whether the root numbers differ")


class JInvariantDocument(BaseModel):
    """Output of the jinv command."""

    model_config = ConfigDict(frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION, description="Document format version")
    field: str = Field(description="Base field")
    poly: List[Any] = Field(description="The cubic or quartic ell of y^2 = ell")
    I: Any = Field(description="Degree-2 invariant")
    J: Any = Field(description="Degree-3 invariant")
    disc: Any = Field(description="Discriminant of ell as a binary form")
    j: Any = Field(description="256 I^3 / disc")


class CompositionDocument(BaseModel):
    """Output of the compose command."""

    model_config = ConfigDict(frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION, description="Document format version")
    field: str = Field(description="Base field")
    curve: CurveDocument = Field(description="The elliptic curve")
    extensions: List[ExtensionDocument] = Field(description="m1 and m2")
    point: PointDocument = Field(description="P + Q in the composite tower")
    exponent_gcd: int = Field(description="gcd of the Galois exponents")
    torsion_free: Optional[bool] = Field(description="Whether E(K) lacks that torsion")


class VerificationCheckDocument(BaseModel):
    """One re-verified claim."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="What was checked")
    passed: bool = Field(description="Outcome")
    detail: str = Field(default="", description="Recomputed value or failure reason")


class VerificationDocument(BaseModel):
    """Output of the verify command."""

    model_config = ConfigDict(frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION, description="Document format version")
    path: str = Field(description="The verified file")
    passed: bool = Field(description="Whether every check passed")
    checks: List[VerificationCheckDocument] = Field(description="Per-check diagnostics")
