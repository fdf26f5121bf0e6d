"""Approximate square roots of monic polynomials.

For monic m of even degree 2k over a field with 2 invertible there is a
unique monic h of degree k with deg(h^2 - m) < k. Writing ell = h^2 - m gives
m = h^2 - ell, so every root b of m yields the point (b, h(b)) on y^2 = ell.
The odd variant applies this to x*m, which also puts (0, h(0)) on the curve.
"""

from dataclasses import dataclass
from enum import Enum

from python.algebra.exceptions import UnsupportedCharacteristicError
from python.algebra.poly import Poly


class DecompositionMode(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Decomposition:
    """Result of an approximate square root.

    Attributes:
        m: The monic input polynomial
        h: Monic approximate square root of m (EVEN) or of x*m (ODD)
        ell: Remainder with m = h^2 - ell (EVEN) or x*m = h^2 - ell (ODD)
        n: floor((deg m - 1) / 2), the remainder degree a generic m attains
        mode: Which identity holds
    """

    m: Poly
    h: Poly
    ell: Poly
    n: int
    mode: DecompositionMode

    def __post_init__(self) -> None:
        if not self.h.is_monic():
            raise ValueError(f"h must be monic, got {self.h}")
        if self.ell.degree >= self.h.degree:
            raise ValueError(
                f"ell must have degree below deg h = {self.h.degree}, got {self.ell.degree}"
            )

    @property
    def target(self) -> Poly:
        """The polynomial h^2 - ell, that is m or x*m."""
        if self.mode == DecompositionMode.ODD:
            return self.m * Poly.x(self.m.ring)
        return self.m


def _check_input(m: Poly, operation: str) -> None:
    if m.ring.characteristic == 2:
        raise UnsupportedCharacteristicError(2, operation)
    if not m.is_monic():
        raise ValueError(f"{operation} needs a monic polynomial, got {m}")


def _sqrt_coefficients(target: Poly) -> Poly:
    """Top half of the square root, computed coefficient by coefficient."""
    k = target.degree // 2
    ring = target.ring
    h = [ring.zero()] * (k + 1)
    h[k] = ring.one()
    for i in range(1, k + 1):
        acc = target.coeff(2 * k - i)
        for j in range(1, i):
            acc = acc - h[k - j] * h[k - i + j]
        h[k - i] = acc / 2
    return Poly(ring, h)


def approx_sqrt(m: Poly) -> Decomposition:
    """Decompose a monic m of even degree as m = h^2 - ell.

    Raises:
        UnsupportedCharacteristicError: In characteristic 2
        ValueError: If m is not monic of even degree
    """
    _check_input(m, "approx_sqrt")
    if m.degree % 2:
        raise ValueError(f"approx_sqrt needs even degree, got {m.degree}")
    h = _sqrt_coefficients(m)
    return Decomposition(
        m=m, h=h, ell=h * h - m, n=(m.degree - 1) // 2, mode=DecompositionMode.EVEN
    )


def odd_decompose(m: Poly) -> Decomposition:
    """Decompose a monic m of odd degree as x*m = h^2 - ell.

    Raises:
        UnsupportedCharacteristicError: In characteristic 2
        ValueError: If m is not monic of odd degree
    """
    _check_input(m, "odd_decompose")
    if m.degree % 2 == 0:
        raise ValueError(f"odd_decompose needs odd degree, got {m.degree}")
    target = m * Poly.x(m.ring)
    h = _sqrt_coefficients(target)
    return Decomposition(
        m=m, h=h, ell=h * h - target, n=(m.degree - 1) // 2, mode=DecompositionMode.ODD
    )


def decompose(m: Poly) -> Decomposition:
    """approx_sqrt for even degree, odd_decompose for odd degree."""
    return approx_sqrt(m) if m.degree % 2 == 0 else odd_decompose(m)
