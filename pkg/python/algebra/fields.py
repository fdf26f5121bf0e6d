"""Exact coefficient fields: rationals, prime and finite fields, and F_p(t).

Rationals are carried as ``fractions.Fraction``. Finite-field and
rational-function elements are small immutable classes with operator
overloading so that polynomial and quotient-ring code can be written once
for every field.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterator, Optional, Protocol, Tuple

import sympy

from python.algebra import gf_poly
from python.algebra.exceptions import FieldMismatchError
from python.algebra.gf_poly import GFPoly
from python.algebra.random_source import SplitMix64


class Ring(Protocol):
    """Coefficient ring interface shared by fields, quotient rings and K[x]."""

    def zero(self) -> Any: ...

    def one(self) -> Any: ...

    def coerce(self, value: Any) -> Any: ...

    @property
    def characteristic(self) -> int: ...


class FieldKind(Enum):
    """Kinds of base field supported by the library."""

    RATIONALS = "Q"
    PRIME = "Fp"
    FINITE = "Fq"
    RATIONAL_FUNCTION = "Fpt"

    @classmethod
    def from_flag(cls, flag: str) -> "FieldKind":
        """Parse a field kind from its command-line spelling.

        Args:
            flag: One of "Q", "Fp", "Fq", "Fpt" (case insensitive)

        Returns:
            FieldKind enum value

        Raises:
            ValueError: If the spelling is not recognized

        Examples:
            >>> FieldKind.from_flag("fpt")
            FieldKind.RATIONAL_FUNCTION
        """
        mapping = {kind.value.lower(): kind for kind in cls}
        normalized = flag.strip().lower()
        if normalized not in mapping:
            raise ValueError(f"Unknown field kind: '{flag}'")
        return mapping[normalized]


@dataclass(frozen=True)
class FieldDescriptor:
    """Immutable description of a base field K.

    Attributes:
        kind: Which family of fields K belongs to
        p: Characteristic for the finite and function-field kinds, 0 for Q
        n: Degree of F_q over F_p (1 unless kind is FINITE)
        modulus: Monic irreducible defining F_q over F_p, little-endian; filled
            with the least irreducible of degree n when omitted
    """

    kind: FieldKind
    p: int = 0
    n: int = 1
    modulus: GFPoly = ()

    def __post_init__(self) -> None:
        if self.kind == FieldKind.RATIONALS:
            if self.p != 0:
                raise ValueError(f"p must be 0 for the rationals, got {self.p}")
            return
        if not sympy.isprime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.kind != FieldKind.FINITE and self.n != 1:
            raise ValueError(f"n must be 1 for {self.kind.value}, got {self.n}")
        modulus = self.modulus
        if not modulus:
            modulus = (
                gf_poly.first_irreducible(self.p, self.n)
                if self.kind == FieldKind.FINITE
                else gf_poly.X
            )
        modulus = gf_poly.reduce(modulus, self.p)
        object.__setattr__(self, "modulus", modulus)
        if gf_poly.degree(modulus) != self.n or modulus[-1] != 1:
            raise ValueError(
                f"modulus must be monic of degree {self.n}, got {list(modulus)}"
            )
        if not gf_poly.is_irreducible(modulus, self.p):
            raise ValueError(f"modulus must be irreducible, got {list(modulus)}")

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldDescriptor":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def finite(cls, p: int, n: int, modulus: GFPoly = ()) -> "FieldDescriptor":
        return cls(FieldKind.FINITE, p, n, tuple(modulus))

    @classmethod
    def rational_function(cls, p: int) -> "FieldDescriptor":
        return cls(FieldKind.RATIONAL_FUNCTION, p)

    @classmethod
    def from_flag(cls, text: str) -> "FieldDescriptor":
        """Parse ``Q``, ``Fp:p``, ``Fq:p:n[:c0,c1,...]`` or ``Fpt:p``.

        The optional modulus for ``Fq`` lists its coefficients little-endian,
        leading 1 included.

        Raises:
            ValueError: If the text is malformed or names an invalid field
        """
        parts = text.strip().split(":")
        kind = FieldKind.from_flag(parts[0])
        try:
            if kind == FieldKind.RATIONALS and len(parts) == 1:
                return cls.rationals()
            if kind == FieldKind.PRIME and len(parts) == 2:
                return cls.prime(int(parts[1]))
            if kind == FieldKind.RATIONAL_FUNCTION and len(parts) == 2:
                return cls.rational_function(int(parts[1]))
            if kind == FieldKind.FINITE and len(parts) in (3, 4):
                modulus: GFPoly = ()
                if len(parts) == 4:
                    modulus = tuple(int(c) for c in parts[3].split(","))
                return cls.finite(int(parts[1]), int(parts[2]), modulus)
        except ValueError as e:
            raise ValueError(f"Invalid field '{text}': {e}") from e
        raise ValueError(f"Invalid field '{text}'")

    def __str__(self) -> str:
        if self.kind == FieldKind.RATIONALS:
            return "Q"
        if self.kind == FieldKind.FINITE:
            return f"Fq:{self.p}:{self.n}:{','.join(str(c) for c in self.modulus)}"
        return f"{self.kind.value}:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.kind in (FieldKind.PRIME, FieldKind.FINITE)

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for an infinite field."""
        return self.p**self.n if self.is_finite else None

    def zero(self) -> Any:
        return self.coerce(0)

    def one(self) -> Any:
        return self.coerce(1)

    def generator(self) -> Any:
        """The class of x for F_q, the variable t for F_p(t)."""
        if self.kind == FieldKind.RATIONAL_FUNCTION:
            return RationalFunction(self, gf_poly.X, gf_poly.ONE)
        if self.is_finite:
            return FiniteFieldElement(self, gf_poly.mod(gf_poly.X, self.modulus, self.p))
        raise ValueError("the rationals have no distinguished generator")

    def coerce(self, value: Any) -> Any:
        """Map an integer, rational or element of this field into the field.

        Raises:
            FieldMismatchError: If value belongs to a different field
        """
        if self.kind == FieldKind.RATIONALS:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise FieldMismatchError(self, type(value).__name__)
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in characteristic {self.p}")
            c = (value.numerator * pow(value.denominator, -1, self.p)) % self.p
            if self.kind == FieldKind.RATIONAL_FUNCTION:
                return RationalFunction(self, gf_poly.reduce((c,), self.p), gf_poly.ONE)
            return FiniteFieldElement(self, gf_poly.reduce((c,), self.p))
        if isinstance(value, FiniteFieldElement):
            if value.field == self:
                return value
            if value.field.n == 1 and value.field.p == self.p:
                return self.coerce(value.as_int())
        if isinstance(value, RationalFunction) and value.field == self:
            return value
        if isinstance(value, (tuple, list)) and self.is_finite:
            return FiniteFieldElement(
                self, gf_poly.mod(gf_poly.reduce(value, self.p), self.modulus, self.p)
            )
        raise FieldMismatchError(self, getattr(value, "field", type(value).__name__))

    def from_polys(self, num: GFPoly, den: GFPoly = gf_poly.ONE) -> "RationalFunction":
        """Build num(t)/den(t) in F_p(t)."""
        if self.kind != FieldKind.RATIONAL_FUNCTION:
            raise ValueError(f"{self} is not a rational function field")
        return RationalFunction(self, gf_poly.reduce(num, self.p), gf_poly.reduce(den, self.p))

    def elements(self) -> Iterator[Any]:
        """Enumerate a finite field, zero first, in coefficient-code order."""
        if not self.is_finite:
            raise ValueError(f"cannot enumerate the infinite field {self}")
        for code in range(self.p**self.n):
            coeffs = []
            for _ in range(self.n):
                code, digit = divmod(code, self.p)
                coeffs.append(digit)
            yield FiniteFieldElement(self, gf_poly.reduce(coeffs, self.p))

    def random_element(self, rng: SplitMix64, bound: int) -> Any:
        """Sample from a box of radius bound.

        Over Q the box is the integers in [-bound, bound]; over F_p(t) it is
        the polynomials of degree below bound. Finite fields are sampled
        uniformly.
        """
        if self.kind == FieldKind.RATIONALS:
            return Fraction(rng.randint(-bound, bound))
        if self.kind == FieldKind.RATIONAL_FUNCTION:
            coeffs = [rng.randbelow(self.p) for _ in range(max(1, bound))]
            return self.from_polys(tuple(coeffs))
        return self.coerce([rng.randbelow(self.p) for _ in range(self.n)])

    def is_square(self, a: Any) -> bool:
        return self.sqrt(a) is not None

    def sqrt(self, a: Any) -> Optional[Any]:
        """A square root of a in this field, or None when a is not a square."""
        a = self.coerce(a)
        if not a:
            return a
        if self.kind == FieldKind.RATIONALS:
            num, exact_num = sympy.integer_nthroot(abs(a.numerator), 2)
            den, exact_den = sympy.integer_nthroot(a.denominator, 2)
            if a < 0 or not (exact_num and exact_den):
                return None
            return Fraction(int(num), int(den))
        if self.kind == FieldKind.RATIONAL_FUNCTION:
            if self.p == 2:
                return self.pth_root(a)
            root = gf_poly.sqrt(gf_poly.mul(a.num, a.den, self.p), self.p)
            if root is None:
                return None
            return self.from_polys(root, a.den)
        return _finite_field_sqrt(self, a)

    def pth_root(self, a: Any) -> Optional[Any]:
        """The p-th root of a, or None if a is not a p-th power."""
        a = self.coerce(a)
        if self.kind == FieldKind.RATIONALS:
            raise ValueError("p-th roots are undefined in characteristic 0")
        if self.is_finite:
            return a ** (self.p ** (self.n - 1))
        parts = []
        for poly in (a.num, a.den):
            if any(c and i % self.p for i, c in enumerate(poly)):
                return None
            parts.append(tuple(poly[:: self.p]))
        return self.from_polys(parts[0], parts[1])

    def absolute_trace(self, a: Any) -> int:
        """Trace of a finite-field element down to F_p, as an integer."""
        if not self.is_finite:
            raise ValueError(f"absolute trace is undefined over {self}")
        a = self.coerce(a)
        total = self.zero()
        power = a
        for _ in range(self.n):
            total = total + power
            power = power**self.p
        return total.as_int()


def _finite_field_sqrt(field: FieldDescriptor, a: "FiniteFieldElement") -> Optional[Any]:
    q = field.p**field.n
    if field.p == 2:
        return a ** (q // 2)
    if a ** ((q - 1) // 2) != 1:
        return None
    s, t = 0, q - 1
    while t % 2 == 0:
        s, t = s + 1, t // 2
    z = next(e for e in field.elements() if e and e ** ((q - 1) // 2) != 1)
    c = z**t
    x = a ** ((t + 1) // 2)
    b = a**t
    r = s
    while b != 1:
        i, power = 0, b
        while power != 1:
            power, i = power * power, i + 1
        w = c ** (2 ** (r - i - 1))
        x, c = x * w, w * w
        b, r = b * c, i
    return x


class FiniteFieldElement:
    """Element of F_q = F_p[x]/(modulus), stored as a reduced integer tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs: GFPoly):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other: Any) -> Optional["FiniteFieldElement"]:
        try:
            return self.field.coerce(other)
        except (TypeError, ZeroDivisionError):
            return None

    def as_int(self) -> int:
        """The integer representative of a prime-field element."""
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} does not lie in the prime field")
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return FiniteFieldElement(self.field, gf_poly.add(self.coeffs, b.coeffs, self.field.p))

    __radd__ = __add__

    def __neg__(self) -> "FiniteFieldElement":
        return FiniteFieldElement(self.field, gf_poly.neg(self.coeffs, self.field.p))

    def __sub__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        p = self.field.p
        product = gf_poly.mul(self.coeffs, b.coeffs, p)
        return FiniteFieldElement(self.field, gf_poly.mod(product, self.field.modulus, p))

    __rmul__ = __mul__

    def inverse(self) -> "FiniteFieldElement":
        if not self.coeffs:
            raise ZeroDivisionError("division by zero in a finite field")
        p = self.field.p
        return FiniteFieldElement(
            self.field, gf_poly.invert(self.coeffs, self.field.modulus, p)
        )

    def __truediv__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b * self.inverse()

    def __pow__(self, exponent: int) -> "FiniteFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        p = self.field.p
        return FiniteFieldElement(
            self.field, gf_poly.powmod(self.coeffs, exponent, self.field.modulus, p)
        )

    def __eq__(self, other: object) -> bool:
        b = self._lift(other)
        return b is not None and b.coeffs == self.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.as_int())
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if self.field.n == 1:
            return str(self.as_int())
        return _format_gf(self.coeffs, "a")


class RationalFunction:
    """Element num(t)/den(t) of F_p(t), reduced with a monic denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: FieldDescriptor, num: GFPoly, den: GFPoly):
        p = field.p
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = gf_poly.gcd(num, den, p) if num else den
        num = gf_poly.divmod_poly(num, g, p)[0]
        den = gf_poly.divmod_poly(den, g, p)[0]
        inv_lc = pow(den[-1], -1, p)
        self.field = field
        self.num = gf_poly.scale(num, inv_lc, p)
        self.den = gf_poly.scale(den, inv_lc, p)

    def _lift(self, other: Any) -> Optional["RationalFunction"]:
        try:
            return self.field.coerce(other)
        except (TypeError, ZeroDivisionError):
            return None

    def __add__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        p = self.field.p
        num = gf_poly.add(
            gf_poly.mul(self.num, b.den, p), gf_poly.mul(b.num, self.den, p), p
        )
        return RationalFunction(self.field, num, gf_poly.mul(self.den, b.den, p))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.field, gf_poly.neg(self.num, self.field.p), self.den)

    def __sub__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        p = self.field.p
        return RationalFunction(
            self.field, gf_poly.mul(self.num, b.num, p), gf_poly.mul(self.den, b.den, p)
        )

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("division by zero in F_p(t)")
        return RationalFunction(self.field, self.den, self.num)

    def __truediv__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        base = self if exponent >= 0 else self.inverse()
        p = self.field.p
        num, den = gf_poly.ONE, gf_poly.ONE
        e = abs(exponent)
        bn, bd = base.num, base.den
        while e:
            if e & 1:
                num, den = gf_poly.mul(num, bn, p), gf_poly.mul(den, bd, p)
            bn, bd = gf_poly.mul(bn, bn, p), gf_poly.mul(bd, bd, p)
            e >>= 1
        return RationalFunction(self.field, num, den)

    def __eq__(self, other: object) -> bool:
        b = self._lift(other)
        return b is not None and (b.num, b.den) == (self.num, self.den)

    def __hash__(self) -> int:
        if self.den == gf_poly.ONE and len(self.num) <= 1:
            return hash(self.num[0] if self.num else 0)
        return hash((self.field, self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __repr__(self) -> str:
        if self.den == gf_poly.ONE:
            return _format_gf(self.num, "t")
        return f"({_format_gf(self.num, 't')})/({_format_gf(self.den, 't')})"


def _format_gf(coeffs: Tuple[int, ...], var: str) -> str:
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            power = var if i == 1 else f"{var}^{i}"
            terms.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(terms)
