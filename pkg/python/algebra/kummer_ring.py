"""The ring F_p(u)[theta]/(theta^d - z) used by the characteristic-p family.

z = u^2 when d is odd and z = u when d is even.
"""

from typing import Any

from python.algebra.etale import EtaleAlgebra, EtaleElement
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly


class KummerRing:
    """Quotient F_p(u)[theta]/(theta^d - z).

    Attributes:
        p: Characteristic
        d: Degree of theta over F_p(u), coprime to p
        field: The rational function field F_p(u)
        algebra: The quotient ring itself
    """

    def __init__(self, p: int, d: int):
        """Initialize the ring.

        Raises:
            ValueError: If d < 1 or p divides d
        """
        if d < 1:
            raise ValueError(f"d must be positive, got {d}")
        if d % p == 0:
            raise ValueError(f"d must be coprime to p={p}, got {d}")
        self.p = p
        self.d = d
        self.field = FieldDescriptor.rational_function(p)
        self.u = self.field.generator()
        self.z = self.u * self.u if d % 2 else self.u
        modulus = Poly(self.field, [-self.z] + [0] * (d - 1) + [1])
        self.algebra = EtaleAlgebra(modulus, var="theta")

    @property
    def theta(self) -> EtaleElement:
        return self.algebra.gen()

    def reduce(self, expr: Any) -> EtaleElement:
        """Normal form of a polynomial in theta, or of any coercible value."""
        if isinstance(expr, Poly):
            return self.algebra.from_poly(expr.map_coeffs(self.field))
        return self.algebra.coerce(expr)


def kummer_ring_reduce(expr: Any, p: int, d: int) -> EtaleElement:
    """Reduce expr in F_p(u)[theta]/(theta^d - z) to a polynomial of degree < d."""
    return KummerRing(p, d).reduce(expr)
