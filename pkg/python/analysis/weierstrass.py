"""Long Weierstrass curves and their group law over etale towers.

Points carry coordinates in the base field or in any ``EtaleAlgebra`` over
it. Inversions go through the tower arithmetic, so adding points over a
tower of extensions that are not linearly disjoint surfaces as a
``ZeroDivisorError`` carrying the factor that was found.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional

from absl import logging

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.algebra.roots import roots_in_field

MAX_DIVISION_INDEX = 12


@dataclass(frozen=True)
class ECPoint:
    """An affine point (x, y), or the point at infinity when both are None."""

    x: Any = None
    y: Any = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = ECPoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a base field.

    Attributes:
        field: Base field
        a1, a2, a3, a4, a6: Long-form coefficients

    Example Usage:
        ```python
        E = WeierstrassCurve.short(FieldDescriptor.rationals(), 1, 0)  # y^2 = x^3 + x
        P = ECPoint(0, 0)
        order_bound_check(E, P, 10).order  # 2
        ```
    """

    field: FieldDescriptor
    a1: Any
    a2: Any
    a3: Any
    a4: Any
    a6: Any

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, self.field.coerce(getattr(self, name)))
        if not self.discriminant:
            raise ValueError(f"singular Weierstrass equation: {self}")

    @classmethod
    def short(cls, field: FieldDescriptor, a: Any, b: Any) -> "WeierstrassCurve":
        """y^2 = x^3 + a x + b."""
        return cls(field, 0, 0, 0, a, b)

    @cached_property
    def b2(self) -> Any:
        return self.a1 * self.a1 + 4 * self.a2

    @cached_property
    def b4(self) -> Any:
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self) -> Any:
        return self.a3 * self.a3 + 4 * self.a6

    @cached_property
    def b8(self) -> Any:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @cached_property
    def c4(self) -> Any:
        return self.b2 * self.b2 - 24 * self.b4

    @cached_property
    def c6(self) -> Any:
        b2, b4, b6 = self.b2, self.b4, self.b6
        return -(b2**3) + 36 * b2 * b4 - 216 * b6

    @cached_property
    def discriminant(self) -> Any:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @cached_property
    def j_invariant(self) -> Any:
        return self.c4**3 / self.discriminant

    def short_form(self) -> "WeierstrassCurve":
        """The isomorphic model y^2 = x^3 - 27 c4 x - 54 c6 (char not 2 or 3)."""
        return WeierstrassCurve.short(self.field, -27 * self.c4, -54 * self.c6)

    def rhs(self, x: Any) -> Any:
        return x * x * x + self.a2 * x * x + self.a4 * x + self.a6

    def contains(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        return not (y * y + self.a1 * x * y + self.a3 * y - self.rhs(x))

    def __str__(self) -> str:
        left = "y^2" + _terms(((self.a1, "*x*y"), (self.a3, "*y")))
        right = "x^3" + _terms(((self.a2, "*x^2"), (self.a4, "*x"), (self.a6, "")))
        return f"{left} = {right}"


def _terms(pairs: Any) -> str:
    return "".join(f" + ({c}){suffix}" for c, suffix in pairs if c)


def negate(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    if P.is_infinity:
        return P
    return ECPoint(P.x, -P.y - E.a1 * P.x - E.a3)


def ec_add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-and-tangent sum on the long Weierstrass model.

    Raises:
        ZeroDivisorError: If a needed inversion meets a zero divisor of the tower
    """
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if not (y1 + y2 + E.a1 * x2 + E.a3):
            return INFINITY
        if y1 != y2:
            # Off a field, x1 == x2 does not force y2 = y1 or y2 = -y1 - a1 x - a3;
            # both differences are zero divisors and inverting one exposes it.
            (y1 - y2).inverse()
            raise ArithmeticError(f"points share x = {x1} but are neither equal nor opposite")
        denominator = 2 * y1 + E.a1 * x1 + E.a3
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / denominator
        nu = (-x1 * x1 * x1 + E.a4 * x1 + 2 * E.a6 - E.a3 * y1) / denominator
    else:
        dx = x2 - x1
        lam = (y2 - y1) / dx
        nu = (y1 * x2 - y2 * x1) / dx
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return ECPoint(x3, y3)


def multiply(E: WeierstrassCurve, P: ECPoint, k: int) -> ECPoint:
    """[k]P by double-and-add; negative k uses -P."""
    if k < 0:
        return multiply(E, negate(E, P), -k)
    result = INFINITY
    addend = P
    while k:
        if k & 1:
            result = ec_add(E, result, addend)
        addend = ec_add(E, addend, addend)
        k >>= 1
    return result


@dataclass(frozen=True)
class OrderBoundResult:
    """Outcome of bounded order search.

    Attributes:
        bound: N, the largest multiple tried
        order: The exact order when it is at most N, else None
    """

    bound: int
    order: Optional[int] = None

    @property
    def exceeds_bound(self) -> bool:
        return self.order is None

    def __str__(self) -> str:
        if self.order is None:
            return f"order exceeds {self.bound}"
        return f"order {self.order}"


def order_bound_check(E: WeierstrassCurve, P: ECPoint, N: int) -> OrderBoundResult:
    """Find the order of P if it is at most N.

    Uses [k]P = O iff psi_k(P) = 0, with psi_k evaluated by the division
    recursion. Only ring multiplications are needed, so points over a tower
    never trigger an inversion. Over an algebra that is not a field the
    order found is the least k killing P in every factor.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if P.is_infinity:
        return OrderBoundResult(bound=N, order=1)
    psi2 = 2 * P.y + E.a1 * P.x + E.a3
    values = division_values(E, P.x, P.x**0, N)
    for k in range(1, N + 1):
        psi = values[k] if k % 2 else psi2 * values[k]
        if not psi:
            return OrderBoundResult(bound=N, order=k)
    return OrderBoundResult(bound=N)


def two_torsion_polynomial(E: WeierstrassCurve) -> Poly:
    """4x^3 + b2 x^2 + 2 b4 x + b6, the square of psi_2 as a polynomial in x."""
    return Poly(E.field, [E.b6, 2 * E.b4, E.b2, 4])


def division_values(E: WeierstrassCurve, x: Any, one: Any, n_max: int) -> List[Any]:
    """f_0, ..., f_{n_max} evaluated at x, where x lies in any ring containing K."""
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    F = ((4 * x + b2) * x + 2 * b4) * x + b6
    F2 = F * F
    f = [
        one - one,
        one,
        one,
        (((3 * x + b2) * x + 3 * b4) * x + 3 * b6) * x + b8,
        (((((2 * x + b2) * x + 5 * b4) * x + 10 * b6) * x + 10 * b8) * x + b2 * b8 - b4 * b6)
        * x
        + b4 * b8
        - b6 * b6,
    ]
    for n in range(5, n_max + 1):
        m = n // 2
        if n % 2:
            if m % 2 == 0:
                f.append(f[m + 2] * f[m] ** 3 * F2 - f[m - 1] * f[m + 1] ** 3)
            else:
                f.append(f[m + 2] * f[m] ** 3 - F2 * f[m - 1] * f[m + 1] ** 3)
        else:
            f.append(f[m] * (f[m + 2] * f[m - 1] ** 2 - f[m - 2] * f[m + 1] ** 2))
    return f[: n_max + 1]


def division_polynomials(E: WeierstrassCurve, k_max: int = MAX_DIVISION_INDEX) -> Dict[int, Poly]:
    """Reduced division polynomials f_k in K[x] for 0 <= k <= k_max.

    f_k = psi_k for odd k and f_k = psi_k / psi_2 for even k, so every f_k
    is a polynomial in x alone. The x-coordinates of the nonzero points of
    order dividing k are the roots of f_k, together with the roots of
    two_torsion_polynomial when k is even.
    """
    if k_max > MAX_DIVISION_INDEX:
        raise ValueError(f"division polynomials are tabulated up to {MAX_DIVISION_INDEX}")
    K = E.field
    return dict(enumerate(division_values(E, Poly.x(K), Poly(K, [1]), k_max)))


def rational_torsion_points(E: WeierstrassCurve, k: int) -> Optional[List[ECPoint]]:
    """Nonzero K-rational points P with [k]P = O.

    Returns:
        The points, or None when roots cannot be found over this field or k
        exceeds the tabulated division polynomials
    """
    if k > MAX_DIVISION_INDEX:
        logging.warning("torsion of order %d is beyond the division polynomial table", k)
        return None
    poly = division_polynomials(E, k)[k]
    if k % 2 == 0:
        poly = poly * two_torsion_polynomial(E)
    candidates = roots_in_field(poly)
    if candidates is None:
        return None
    points: List[ECPoint] = []
    for x0 in candidates:
        for y0 in _y_values(E, x0):
            P = ECPoint(x0, y0)
            if multiply(E, P, k).is_infinity:
                points.append(P)
    return points


def _y_values(E: WeierstrassCurve, x0: Any) -> List[Any]:
    """K-rational y with (x0, y) on E."""
    K = E.field
    b = E.a1 * x0 + E.a3
    c = -E.rhs(x0)
    y = Poly.x(K)
    roots = roots_in_field(y * y + y * b + c)
    return list(roots or [])


def torsion_free_up_to(E: WeierstrassCurve, e: int) -> Optional[bool]:
    """Whether E(K) has no nontrivial point of order dividing e; None if unchecked."""
    for k in range(2, e + 1):
        if e % k:
            continue
        found = rational_torsion_points(E, k)
        if found is None:
            return None
        if found:
            return False
    return True

