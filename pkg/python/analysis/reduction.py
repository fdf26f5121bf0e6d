"""Birational reductions of genus one models to Weierstrass form.

``QuarticReduction`` handles y^2 = ell with ell of degree 3 or 4 and a
rational point; ``CubicReduction`` projects a plane cubic from a smooth
rational point onto a double cover y^2 = D(t) and then reduces that. Both
expose the target curve and an ``image`` map that accepts coordinates in
the base field or in any etale tower over it.
"""

from typing import Any, List, Optional, Sequence, Tuple

from python.algebra.exceptions import UnsupportedCharacteristicError
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.analysis.exceptions import NoRationalPointError
from python.analysis.weierstrass import INFINITY, ECPoint, WeierstrassCurve
from python.curves.forms import TernaryForm
from python.curves.models import PlaneCubic


class QuarticReduction:
    """The map from y^2 = ell to a long Weierstrass curve.

    A cubic ell = c3 x^3 + c2 x^2 + c1 x + c0 needs no point: (x, y) goes to
    (c3 x, c3 y) on Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2. A quartic needs an
    affine rational point, or a square leading coefficient for a point at
    infinity. After moving the point to u = 0 the quartic reads
    v^2 = a u^4 + b u^3 + c u^2 + d u + q^2 and, for q != 0,

        X = (2q(v + q) + d u) / u^2
        Y = (4q^2 (v + q) + 2q(d u + c u^2) - d^2 u^2 / (2q)) / u^3

    lands on the curve with a1 = d/q, a2 = c - d^2/(4q^2), a3 = 2qb,
    a4 = -4q^2 a, a6 = a2 a4, the base point going to O. A point with
    y = 0 is a root of ell and is sent to infinity instead, which leaves a
    cubic.

    Attributes:
        ell: The cubic or quartic
        point: The base point, None for a cubic or the point at infinity
        mode: "cubic", "affine", "root" or "infinity"
        curve: The Weierstrass model

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        reduction = QuarticReduction(Poly(K, [1, 0, 0, 0, 1]), (0, 1))
        str(reduction.curve)  # y^2 = x^3 + (-4)*x
        reduction.image(0, -1)  # ECPoint(x=0, y=0)
        ```
    """

    def __init__(self, ell: Poly, point: Optional[Tuple[Any, Any]] = None):
        """Initialize the reduction.

        Args:
            ell: Polynomial of degree 3 or 4 over a field of characteristic not 2
            point: Rational point (x0, y0) on y^2 = ell; None selects the point
                at infinity, which needs a square leading coefficient when ell
                is a quartic

        Raises:
            UnsupportedCharacteristicError: In characteristic 2
            NoRationalPointError: If a quartic comes without a usable point
            ValueError: If the degree is wrong or the point is not on the curve
        """
        field: FieldDescriptor = ell.ring
        if field.characteristic == 2:
            raise UnsupportedCharacteristicError(2, "reduction of y^2 = ell")
        if ell.degree not in (3, 4):
            raise ValueError(f"expected a cubic or quartic, got degree {ell.degree}")
        self.ell = ell
        self.field = field
        self.point = None
        self._x0: Any = None
        if ell.degree == 3:
            self.mode = "cubic"
            self._setup_cubic(ell)
            return
        if point is None:
            q = field.sqrt(ell.lc)
            if q is None:
                raise NoRationalPointError(f"y^2 = {ell}")
            self.mode = "infinity"
            self._setup_quartic(Poly(field, list(reversed(ell.coeffs))), q)
            return
        x0, y0 = field.coerce(point[0]), field.coerce(point[1])
        if y0 * y0 != ell(x0):
            raise ValueError(f"({x0}, {y0}) is not on y^2 = {ell}")
        self.point = (x0, y0)
        self._x0 = x0
        shifted = ell.compose(Poly(field, [x0, 1]))
        if y0:
            self.mode = "affine"
            self._setup_quartic(shifted, y0)
        else:
            self.mode = "root"
            self._setup_cubic(Poly(field, list(reversed(shifted.coeffs))))

    def _setup_cubic(self, cubic: Poly) -> None:
        c0, c1, c2, c3 = (cubic.coeff(i) for i in range(4))
        self._scale = c3
        self.curve = WeierstrassCurve(self.field, 0, c2, 0, c1 * c3, c0 * c3 * c3)

    def _setup_quartic(self, quartic: Poly, q: Any) -> None:
        d, c, b, a = (quartic.coeff(i) for i in range(1, 5))
        self._q, self._c, self._d = q, c, d
        a1 = d / q
        a2 = c - d * d / (4 * q * q)
        a3 = 2 * q * b
        a4 = -4 * q * q * a
        self.curve = WeierstrassCurve(self.field, a1, a2, a3, a4, a2 * a4)

    def image(self, x: Any, y: Any) -> ECPoint:
        """Image of (x, y) on y^2 = ell; x None stands for the base point.

        Raises:
            ValueError: For an affine point outside the chart of the map
            ZeroDivisorError: From tower arithmetic on non-field coordinates
        """
        if x is None:
            if self.mode in ("cubic", "infinity"):
                return INFINITY
            raise ValueError("points at infinity of a quartic lie outside the affine chart")
        if self.mode == "cubic":
            return ECPoint(self._scale * x, self._scale * y)
        if self.mode == "infinity":
            if not x:
                raise ValueError("x = 0 lies outside the chart at infinity")
            u = 1 / x
            return self._quartic_image(u, y * u * u)
        w = x - self._x0
        if self.mode == "affine":
            return self._quartic_image(w, y)
        if not w:
            return INFINITY
        u = 1 / w
        return ECPoint(self._scale * u, self._scale * y * u * u)

    def _quartic_image(self, u: Any, v: Any) -> ECPoint:
        q, c, d = self._q, self._c, self._d
        if not u:
            if v == q:
                return INFINITY
            E = self.curve
            return ECPoint(-E.a2, E.a1 * E.a2 - E.a3)
        X = (2 * q * (v + q) + d * u) / (u * u)
        Y = (4 * q * q * (v + q) + 2 * q * (d * u + c * u * u) - d * d * u * u / (2 * q)) / (
            u * u * u
        )
        return ECPoint(X, Y)


class CubicReduction:
    """Projection of a plane cubic from a rational point, then QuarticReduction.

    The point P is moved to (0 : 0 : 1) and the affine equation split by
    degree as f1 + f2 + f3 in X, Y. A line Y = tX meets the cubic again where
    f1(1,t) + f2(1,t) s + f3(1,t) s^2 = 0, so w = 2 f3(1,t) s + f2(1,t)
    satisfies w^2 = D(t) = f2(1,t)^2 - 4 f1(1,t) f3(1,t). The tangent
    direction t0 with f1(1, t0) = 0 gives the rational point (t0, f2(1, t0)).

    Attributes:
        cubic: The plane cubic
        point: P in projective coordinates
        discriminant_poly: D(t)
        quartic: The QuarticReduction of w^2 = D(t)
        curve: The Weierstrass model
    """

    def __init__(self, cubic: PlaneCubic, point: Sequence[Any]):
        """Initialize the reduction.

        Args:
            cubic: Smooth plane cubic over a field of characteristic not 2
            point: Rational point (x, y) or (x : y : z) on the cubic

        Raises:
            UnsupportedCharacteristicError: In characteristic 2
            ValueError: If the point is off the cubic or the cubic is singular
        """
        field = cubic.field
        if field.characteristic == 2:
            raise UnsupportedCharacteristicError(2, "reduction of a plane cubic")
        coords = list(point) if len(point) == 3 else [point[0], point[1], 1]
        P = [field.coerce(c) for c in coords]
        if not cubic.contains(*P):
            raise ValueError(f"{P} is not on {cubic}")
        if not cubic.is_smooth_at(P):
            raise ValueError(f"{cubic} is singular at {P}")
        certificate = cubic.smoothness()
        if not certificate.smooth:
            raise ValueError(f"{cubic} is singular: {certificate.witness}")
        self.cubic = cubic
        self.point = P
        self.field = field
        self._k = next(r for r in range(3) if P[r])
        i, j = (r for r in range(3) if r != self._k)
        parts = self._split(i, j)
        if not parts[0].coeff(1):
            i, j = j, i
            parts = self._split(i, j)
        self._i, self._j = i, j
        g1, g2, g3 = parts
        self._g2, self._g3 = g2, g3
        self.discriminant_poly = g2 * g2 - g1 * g3 * 4
        if self.discriminant_poly.degree < 3:
            raise ValueError(f"projection from {P} degenerates: D = {self.discriminant_poly}")
        t0 = -g1.coeff(0) / g1.coeff(1)
        self.quartic = QuarticReduction(self.discriminant_poly, (t0, g2(t0)))
        self.curve = self.quartic.curve

    def _split(self, i: int, j: int) -> List[Poly]:
        """f(1, t) split by total degree in the moved coordinates."""
        field = self.field
        images = [
            TernaryForm.linear(field, [int(r == i), int(r == j), self.point[r]])
            for r in range(3)
        ]
        moved = self.cubic.form.substitute(images)
        parts: List[List[Any]] = [[field.zero()] * 4 for _ in range(4)]
        for (a, b, _), c in moved.terms.items():
            parts[a + b][b] = c
        return [Poly(field, parts[k]) for k in (1, 2, 3)]

    def image(self, point: Sequence[Any]) -> ECPoint:
        """Image of a point (x, y) or (x : y : z) other than the base point.

        Raises:
            ValueError: If the point lies on a line the projection cannot see
        """
        coords = list(point) if len(point) == 3 else [point[0], point[1], 1]
        P, i, j, k = self.point, self._i, self._j, self._k
        Z = coords[k] / P[k]
        X = coords[i] - Z * P[i]
        Y = coords[j] - Z * P[j]
        if not Z:
            raise ValueError(f"{point} lies on the line at infinity of the projection")
        s = X / Z
        if not s:
            raise ValueError(f"{point} lies on the vertical line through the base point")
        t = (Y / Z) / s
        w = 2 * self._g3(t) * s + self._g2(t)
        return self.quartic.image(t, w)


def quartic_to_weierstrass(
    ell: Poly, point: Optional[Tuple[Any, Any]] = None
) -> QuarticReduction:
    """Reduce y^2 = ell to Weierstrass form; see QuarticReduction."""
    return QuarticReduction(ell, point)


def cubic_to_weierstrass(cubic: PlaneCubic, point: Sequence[Any]) -> CubicReduction:
    """Reduce a smooth plane cubic with a rational point; see CubicReduction."""
    return CubicReduction(cubic, point)
