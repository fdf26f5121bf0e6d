"""Curve models: double covers of the line, superelliptic covers and plane cubics.

Each model carries its exact defining data over a ``FieldDescriptor`` and
can test points whose coordinates live in any etale algebra or tower over
that field.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from python.algebra.exceptions import FieldMismatchError, UnsupportedCharacteristicError
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import (
    Poly,
    gcd,
    is_separable,
    resultant,
    squarefree_decomposition,
)
from python.algebra.random_source import SplitMix64
from python.curves.forms import Monomial, TernaryForm

SMOOTHNESS_CHARTS = 5


@dataclass(frozen=True)
class SmoothnessCertificate:
    """Outcome of a smoothness check.

    Attributes:
        smooth: Whether the check certified smoothness
        method: Name of the criterion used
        witness: Offending factor or point when not smooth, chart data otherwise
    """

    smooth: bool
    method: str
    witness: str = ""


def _char2_root_count(field: FieldDescriptor, b: Any, c: Any) -> Optional[int]:
    """Number of roots of v^2 + b v + c in a field of characteristic 2; None when undecided."""
    if not b:
        return 1 if field.pth_root(c) is not None else 0
    if not c:
        return 2
    if field.is_finite:
        return 0 if field.absolute_trace(c / (b * b)) else 2
    return None


@dataclass(frozen=True)
class HyperellipticModel:
    """The affine model y^2 + Q(x) y = R(x) of a double cover of the line.

    In odd characteristic the canonical form has Q = 0. The genus is that of
    the smooth projective model, so genus-1 models are included.

    Attributes:
        Q: Coefficient of y
        R: Right-hand side

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        curve = HyperellipticModel.from_rhs(Poly(K, [1, 1, 0, 1]))  # y^2 = x^3 + x + 1
        curve.genus  # 1
        curve.contains(0, 1)  # True
        ```
    """

    Q: Poly
    R: Poly

    def __post_init__(self) -> None:
        if self.Q.ring != self.R.ring:
            raise FieldMismatchError(self.Q.ring, self.R.ring)
        if not isinstance(self.R.ring, FieldDescriptor):
            raise ValueError(f"curves are defined over base fields, got {self.R.ring}")
        if self.R.ring.characteristic == 2 and not self.Q:
            raise ValueError("Q must be nonzero in characteristic 2")
        if not self.R and not self.Q:
            raise ValueError("R must be nonzero when Q is zero")

    @classmethod
    def from_rhs(cls, R: Poly) -> "HyperellipticModel":
        return cls(Poly(R.ring), R)

    @property
    def field(self) -> FieldDescriptor:
        return self.R.ring

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def completed_square(self) -> Poly:
        """F = R + Q^2/4, so that (y + Q/2)^2 = F.

        Raises:
            UnsupportedCharacteristicError: In characteristic 2
        """
        if self.characteristic == 2:
            raise UnsupportedCharacteristicError(2, "completing the square")
        return self.R + self.Q * self.Q * Fraction(1, 4)

    @property
    def degree(self) -> int:
        """Degree of the branch polynomial, counting a branch point at infinity."""
        if self.characteristic != 2:
            return self.completed_square().degree
        return max(2 * self.Q.degree, self.R.degree)

    @property
    def genus(self) -> int:
        return max((self.degree + 1) // 2 - 1, 0)

    def evaluate(self, x: Any, y: Any) -> Any:
        """y^2 + Q(x) y - R(x)."""
        return y * y + self.Q(x) * y - self.R(x)

    def contains(self, x: Any, y: Any) -> bool:
        return not self.evaluate(x, y)

    def smoothness(self) -> SmoothnessCertificate:
        """Certify smoothness of the projective model.

        Odd characteristic: F = R + Q^2/4 must be separable of degree >= 1.
        Characteristic 2: gcd(Q, Q'^2 R + R'^2) = 1 on the affine part, and
        at infinity, with g the genus, not both Q_{g+1} = 0 and
        Q_g^2 R_{2g+2} + R_{2g+1}^2 = 0.
        """
        if self.characteristic != 2:
            F = self.completed_square()
            if F.degree < 1:
                return SmoothnessCertificate(False, "separable branch polynomial", str(F))
            if not is_separable(F):
                return SmoothnessCertificate(
                    False, "separable branch polynomial", str(gcd(F, F.derivative()))
                )
            return SmoothnessCertificate(True, "separable branch polynomial")
        Q, R = self.Q, self.R
        dQ, dR = Q.derivative(), R.derivative()
        common = gcd(Q, dQ * dQ * R + dR * dR)
        if common.degree > 0:
            return SmoothnessCertificate(False, "char 2 partials", str(common))
        g = self.genus
        at_infinity = Q.coeff(g) * Q.coeff(g) * R.coeff(2 * g + 2) + R.coeff(2 * g + 1) ** 2
        if not Q.coeff(g + 1) and not at_infinity:
            return SmoothnessCertificate(False, "char 2 partials", "point at infinity")
        return SmoothnessCertificate(True, "char 2 partials")

    def rational_points_at_infinity(self) -> Optional[int]:
        """Number of K-rational points at infinity on the smooth model.

        Returns None in characteristic 2 over F_2(t) when an Artin-Schreier
        equation decides the answer.
        """
        D = self.degree
        if D % 2:
            return 1
        if self.characteristic != 2:
            return 2 if self.field.is_square(self.completed_square().lc) else 0
        g = D // 2 - 1
        return _char2_root_count(self.field, self.Q.coeff(g + 1), self.R.coeff(2 * g + 2))

    def map_field(self, target: FieldDescriptor, fn: Any = None) -> "HyperellipticModel":
        """The same model with coefficients moved into target."""
        return HyperellipticModel(self.Q.map_coeffs(target, fn), self.R.map_coeffs(target, fn))

    def to_str(self) -> str:
        if not self.Q:
            return f"y^2 = {self.R}"
        q = str(self.Q)
        if self.Q.degree > 0 or q.startswith("-"):
            q = f"({q})"
        return f"y^2 + {q}*y = {self.R}"

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class SuperellipticModel:
    """The affine model y^n = f(x).

    Attributes:
        exponent: n >= 2
        f: Nonconstant right-hand side
    """

    exponent: int
    f: Poly

    def __post_init__(self) -> None:
        if self.exponent < 2:
            raise ValueError(f"exponent must be at least 2, got {self.exponent}")
        if self.f.degree < 1:
            raise ValueError(f"f must be nonconstant, got {self.f}")

    @property
    def field(self) -> FieldDescriptor:
        return self.f.ring

    @property
    def genus(self) -> int:
        """Genus by Riemann-Hurwitz for the cyclic cover x: X -> P^1.

        Raises:
            ValueError: If the cover is not geometrically irreducible
        """
        n = self.exponent
        multiplicities: List[Tuple[int, int]] = [
            (part.degree, e) for part, e in squarefree_decomposition(self.f)
        ]
        multiplicities.append((1, self.f.degree))
        g_all = n
        for _, e in multiplicities:
            g_all = math.gcd(g_all, e)
        if g_all != 1:
            raise ValueError(f"y^{n} = {self.f} is reducible over the algebraic closure")
        branch = sum(count * (n - math.gcd(n, e)) for count, e in multiplicities)
        return 1 - n + branch // 2

    def contains(self, x: Any, y: Any) -> bool:
        return y**self.exponent == self.f(x)

    def __str__(self) -> str:
        return f"y^{self.exponent} = {self.f}"


CUBIC_NINE_MONOMIALS: Tuple[Monomial, ...] = (
    (0, 3, 0),
    (1, 2, 0),
    (2, 1, 0),
    (0, 2, 1),
    (1, 1, 1),
    (2, 0, 1),
    (0, 1, 2),
    (1, 0, 2),
)


@dataclass(frozen=True)
class PlaneCubic:
    """A projective plane cubic C(x, y, z) = 0 over a base field.

    Attributes:
        form: The defining cubic form
    """

    form: TernaryForm

    def __post_init__(self) -> None:
        if self.form.degree != 3:
            raise ValueError(f"form must be a cubic, got degree {self.form.degree}")

    @classmethod
    def from_affine(cls, base: FieldDescriptor, terms: Dict[Tuple[int, int], Any]) -> "PlaneCubic":
        """Homogenize sum c_(i,j) x^i y^j with i + j <= 3."""
        out: Dict[Monomial, Any] = {}
        for (i, j), c in terms.items():
            if i + j > 3:
                raise ValueError(f"monomial x^{i} y^{j} exceeds degree 3")
            out[(i, j, 3 - i - j)] = c
        return cls(TernaryForm(base, out))

    @classmethod
    def from_degree_nine(cls, m: Poly) -> "PlaneCubic":
        """The cubic z^3 + a7 x z^2 + ... + a0 y^3 built from m = x^9 + a7 x^7 + ... + a0.

        The point (b^-2 : b^-3 : 1) lies on it for every root b of m.

        Raises:
            ValueError: If m is not monic of degree 9 with vanishing x^8 term
        """
        if m.degree != 9 or not m.is_monic():
            raise ValueError(f"m must be monic of degree 9, got {m}")
        if m.coeff(8):
            raise ValueError(f"m must have no x^8 term, got {m.coeff(8)}")
        terms: Dict[Monomial, Any] = {(0, 0, 3): 1}
        for i, mon in enumerate(CUBIC_NINE_MONOMIALS):
            terms[mon] = m.coeff(i)
        return cls(TernaryForm(m.ring, terms))

    @property
    def field(self) -> FieldDescriptor:
        return self.form.field

    @property
    def genus(self) -> int:
        return 1

    def evaluate(self, x: Any, y: Any, z: Any = 1) -> Any:
        return self.form.evaluate((x, y, z))

    def contains(self, x: Any, y: Any, z: Any = 1) -> bool:
        return not self.evaluate(x, y, z)

    def gradient(self) -> Tuple[TernaryForm, TernaryForm, TernaryForm]:
        return (self.form.partial(0), self.form.partial(1), self.form.partial(2))

    def is_smooth_at(self, point: Sequence[Any]) -> bool:
        return any(bool(g.evaluate(point)) for g in self.gradient())

    def smoothness(self, seed: int = 0) -> SmoothnessCertificate:
        """Certify that C, C_x, C_y, C_z have no common projective zero.

        Each attempt applies a linear change of coordinates (the identity
        first, then seeded random ones) and checks the chart z = 1 by
        gcd(Res_y(C, C_x), Res_y(C, C_y)) = 1, the points (x : 1 : 0) by a
        gcd of binary forms, and (1 : 0 : 0) directly. A singular cubic
        fails every attempt.
        """
        rng = SplitMix64(seed)
        witness = ""
        for attempt in range(SMOOTHNESS_CHARTS):
            form = self.form if attempt == 0 else _random_chart(self.form, rng)
            ok, witness = _certify_chart(form)
            if ok:
                return SmoothnessCertificate(True, "iterated resultants", f"chart {attempt}")
        return SmoothnessCertificate(False, "iterated resultants", witness)

    def to_str(self) -> str:
        return f"{self.form.to_str()} = 0"

    def __str__(self) -> str:
        return self.to_str()


def _random_chart(form: TernaryForm, rng: SplitMix64) -> TernaryForm:
    base = form.field
    while True:
        rows = [[base.coerce(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        for i in range(3):
            rows[i][i] = rows[i][i] + 1
        det = (
            rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
        )
        if det:
            return form.substitute([TernaryForm.linear(base, row) for row in rows])


def _certify_chart(form: TernaryForm) -> Tuple[bool, str]:
    cx, cy, cz = form.partial(0), form.partial(1), form.partial(2)
    f = form.to_bivariate()
    affine = gcd(resultant(f, cx.to_bivariate()), resultant(f, cy.to_bivariate()))
    if affine.degree != 0:
        return False, f"affine resultant gcd {affine}"
    line = form.binary_restriction(2)
    for g in (cx, cy, cz):
        line = gcd(line, g.binary_restriction(2))
    if line.degree != 0:
        return False, f"line at infinity factor {line}"
    corner = (1, 0, 0)
    if not form.evaluate(corner) and not any(bool(g.evaluate(corner)) for g in (cx, cy, cz)):
        return False, "singular at (1 : 0 : 0)"
    return True, ""
