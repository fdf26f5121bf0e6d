"""Quotient rings B[x]/(m(x)) and towers of them.

An ``EtaleAlgebra`` is built over a base ring B, which is either a
``FieldDescriptor`` or another ``EtaleAlgebra``; stacking them gives the
extension towers used for composita. Nothing here assumes the modulus is
irreducible: inversion reports zero divisors through ``ZeroDivisorError`` so
that a reducible modulus, or a tower of extensions that are not linearly
disjoint, is detected when it matters rather than rejected up front.
"""

from functools import cached_property
from typing import Any, List, Optional, Sequence, Tuple

from python.algebra.exceptions import FieldMismatchError, NotEtaleError, ZeroDivisorError
from python.algebra.fields import FieldDescriptor, Ring
from python.algebra.linalg import char_poly_coeffs
from python.algebra.poly import Poly, is_separable, squarefree_part, xgcd


class EtaleAlgebra:
    """The ring base[var]/(modulus) for a monic modulus over ``base``.

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        A = EtaleAlgebra(Poly(K, [-2, 0, 0, 1]), var="a")  # Q[a]/(a^3 - 2)
        alpha = A.gen()
        char_poly(alpha * alpha)  # x^3 - 4
        ```
    """

    def __init__(self, modulus: Poly, var: str = "a"):
        """Initialize the quotient ring.

        Args:
            modulus: Monic polynomial of degree at least 1 over the base ring
            var: Display name of the class of x

        Raises:
            ValueError: If modulus is not monic of positive degree
        """
        if modulus.degree < 1 or not modulus.is_monic():
            raise ValueError(f"modulus must be monic of positive degree, got {modulus}")
        self.modulus = modulus
        self.base: Ring = modulus.ring
        self.var = var
        self.degree = modulus.degree

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EtaleAlgebra)
            and self.base == other.base
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"{self.base}[{self.var}]/({self.modulus.to_str(self.var)})"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @cached_property
    def field(self) -> FieldDescriptor:
        """The field at the bottom of the tower."""
        base = self.base
        while isinstance(base, EtaleAlgebra):
            base = base.base
        return base

    @cached_property
    def layers(self) -> Tuple["EtaleAlgebra", ...]:
        """The algebras of the tower from the bottom layer up to self."""
        if isinstance(self.base, EtaleAlgebra):
            return self.base.layers + (self,)
        return (self,)

    @cached_property
    def dimension(self) -> int:
        """Dimension over the bottom field."""
        if isinstance(self.base, EtaleAlgebra):
            return self.degree * self.base.dimension
        return self.degree

    @cached_property
    def is_etale(self) -> bool:
        """Whether every layer modulus is separable over its base."""
        return all(is_separable(layer.modulus) for layer in self.layers)

    def zero(self) -> "EtaleElement":
        return EtaleElement(self, (self.base.zero(),) * self.degree)

    def one(self) -> "EtaleElement":
        return self.coerce(1)

    def gen(self) -> "EtaleElement":
        """The class of x."""
        if self.degree == 1:
            return EtaleElement(self, (-self.modulus.coeffs[0],))
        coords = [self.base.zero()] * self.degree
        coords[1] = self.base.one()
        return EtaleElement(self, tuple(coords))

    def coerce(self, value: Any) -> "EtaleElement":
        """Embed value as a constant, unless it already lives in this algebra.

        Raises:
            FieldMismatchError: If value lies in an unrelated ring
        """
        if isinstance(value, EtaleElement) and value.algebra == self:
            return value
        if isinstance(value, Poly):
            raise FieldMismatchError(self, value.ring)
        c = self.base.coerce(value)
        return EtaleElement(self, (c,) + (self.base.zero(),) * (self.degree - 1))

    def element(self, coords: Sequence[Any]) -> "EtaleElement":
        """Element with the given power-basis coordinates, padded with zeros."""
        if len(coords) > self.degree:
            return self.from_poly(Poly(self.base, coords))
        values = [self.base.coerce(c) for c in coords]
        values += [self.base.zero()] * (self.degree - len(values))
        return EtaleElement(self, tuple(values))

    def from_poly(self, poly: Poly) -> "EtaleElement":
        """The class of a polynomial over the base ring."""
        if poly.ring != self.base:
            raise FieldMismatchError(self.base, poly.ring)
        return self.element((poly % self.modulus).coeffs)

    def basis(self) -> List["EtaleElement"]:
        """Basis over the bottom field matching the order of ``flatten``."""
        if isinstance(self.base, EtaleAlgebra):
            lower = [self.coerce(b) for b in self.base.basis()]
        else:
            lower = [self.one()]
        out = []
        power = self.one()
        x = self.gen() if self.degree > 1 else self.one()
        for _ in range(self.degree):
            out.extend(power * b for b in lower)
            power = power * x
        return out

    def flatten(self, z: "EtaleElement") -> List[Any]:
        """Coordinates of z over the bottom field."""
        if isinstance(self.base, EtaleAlgebra):
            base = self.base
            return [v for c in z.coords for v in base.flatten(c)]
        return list(z.coords)

    def unflatten(self, vector: Sequence[Any]) -> "EtaleElement":
        if isinstance(self.base, EtaleAlgebra):
            step = self.base.dimension
            return EtaleElement(
                self,
                tuple(
                    self.base.unflatten(vector[i * step : (i + 1) * step])
                    for i in range(self.degree)
                ),
            )
        return self.element(vector)

    def multiplication_matrix(self, z: "EtaleElement") -> List[List[Any]]:
        """Matrix of multiplication by z over the bottom field (columns = images)."""
        columns = [self.flatten(z * b) for b in self.basis()]
        n = len(columns)
        return [[columns[j][i] for j in range(n)] for i in range(n)]


class EtaleElement:
    """Element a_0 + a_1 x + ... + a_{d-1} x^{d-1} of an ``EtaleAlgebra``."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: EtaleAlgebra, coords: Tuple[Any, ...]):
        self.algebra = algebra
        self.coords = coords

    def _lift(self, other: Any) -> Optional["EtaleElement"]:
        try:
            return self.algebra.coerce(other)
        except (TypeError, ZeroDivisionError):
            return None

    def as_poly(self) -> Poly:
        return Poly(self.algebra.base, self.coords)

    def __add__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return EtaleElement(self.algebra, tuple(u + v for u, v in zip(self.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self) -> "EtaleElement":
        return EtaleElement(self.algebra, tuple(-u for u in self.coords))

    def __sub__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return EtaleElement(self.algebra, tuple(u - v for u, v in zip(self.coords, b.coords)))

    def __rsub__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        algebra = self.algebra
        d = algebra.degree
        zero = algebra.base.zero()
        prod = [zero] * (2 * d - 1)
        for i, u in enumerate(self.coords):
            if not u:
                continue
            for j, v in enumerate(b.coords):
                if v:
                    prod[i + j] = prod[i + j] + u * v
        m = algebra.modulus.coeffs
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if not c:
                continue
            for i in range(d):
                prod[k - d + i] = prod[k - d + i] - c * m[i]
        return EtaleElement(algebra, tuple(prod[:d]))

    __rmul__ = __mul__

    def inverse(self) -> "EtaleElement":
        return ext_invert(self)

    def __truediv__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self * ext_invert(b)

    def __rtruediv__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b * ext_invert(self)

    def __pow__(self, exponent: int) -> "EtaleElement":
        base = self if exponent >= 0 else ext_invert(self)
        result = self.algebra.one()
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        b = self._lift(other)
        return b is not None and b.coords == self.coords

    def __hash__(self) -> int:
        if all(not c for c in self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coords)

    def __repr__(self) -> str:
        return self.as_poly().to_str(self.algebra.var)


def tower(field: FieldDescriptor, moduli: Sequence[Any], names: Sequence[str] = ()) -> EtaleAlgebra:
    """Build an iterated extension, one layer per modulus.

    Args:
        field: Bottom field
        moduli: Each a Poly over the previous layer or a list of coefficients
            that coerce into it
        names: Optional display names of the layer generators

    Returns:
        The top algebra of the tower
    """
    ring: Any = field
    for i, m in enumerate(moduli):
        poly = m if isinstance(m, Poly) else Poly(ring, m)
        if poly.ring != ring:
            raise FieldMismatchError(ring, poly.ring)
        var = names[i] if i < len(names) else f"a{i}"
        ring = EtaleAlgebra(poly, var=var)
    return ring


def ext_invert(beta: EtaleElement) -> EtaleElement:
    """Inverse of beta by the extended Euclidean algorithm.

    Raises:
        ZeroDivisionError: If beta is zero
        ZeroDivisorError: If beta shares a factor with the modulus; the
            exception carries that monic factor
    """
    if not beta:
        raise ZeroDivisionError("inverse of zero in a quotient ring")
    algebra = beta.algebra
    g, s, _ = xgcd(beta.as_poly(), algebra.modulus)
    if g.degree > 0:
        raise ZeroDivisorError(g)
    return algebra.from_poly(s)


def char_poly(beta: Any, algebra: Optional[EtaleAlgebra] = None) -> Poly:
    """Characteristic polynomial of multiplication by beta over the bottom field.

    Scalars need the ambient algebra to fix the dimension.
    """
    if not isinstance(beta, EtaleElement):
        if algebra is None:
            raise ValueError("char_poly of a scalar needs an ambient algebra")
        beta = algebra.coerce(beta)
    algebra = beta.algebra
    field = algebra.field
    coeffs = char_poly_coeffs(algebra.multiplication_matrix(beta), field)
    return Poly(field, coeffs)


def min_poly(beta: Any) -> Poly:
    """Minimal polynomial of beta over the bottom field.

    Raises:
        NotEtaleError: If some layer modulus of the ambient algebra is inseparable
    """
    if not isinstance(beta, EtaleElement):
        field_poly_ring = getattr(beta, "field", None)
        ring = field_poly_ring if field_poly_ring is not None else FieldDescriptor.rationals()
        return Poly(ring, [-ring.coerce(beta), 1])
    algebra = beta.algebra
    if not algebra.is_etale:
        bad = next(layer for layer in algebra.layers if not is_separable(layer.modulus))
        raise NotEtaleError(bad.modulus)
    return squarefree_part(char_poly(beta))


def trace(beta: EtaleElement) -> Any:
    """Trace over the bottom field of multiplication by beta."""
    matrix = beta.algebra.multiplication_matrix(beta)
    total = beta.algebra.field.zero()
    for i, row in enumerate(matrix):
        total = total + row[i]
    return total


def norm(beta: EtaleElement) -> Any:
    """Determinant of multiplication by beta over the bottom field."""
    chi = char_poly(beta)
    c0 = chi.coeff(0)
    return c0 if chi.degree % 2 == 0 else -c0


def tower_element_degree(z: Any) -> int:
    """Degree over the bottom field of the subfield generated by z.

    Raises:
        NotEtaleError: If the ambient tower is not etale
        ZeroDivisorError: Propagated from tower arithmetic
    """
    if not isinstance(z, EtaleElement):
        return 1
    return min_poly(z).degree
