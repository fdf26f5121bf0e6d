"""Dense univariate polynomials over an exact coefficient ring.

A ``Poly`` stores little-endian coefficients, normalized so that the last
stored coefficient is nonzero. The zero polynomial has no coefficients and
reports degree -1, which stands in for minus infinity in degree comparisons.
Coefficient rings are ``FieldDescriptor`` instances, quotient rings from
``python.algebra.etale`` or ``PolynomialRing`` for bivariate work.
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from python.algebra.exceptions import UnsupportedCharacteristicError
from python.algebra.fields import Ring
from python.algebra.linalg import bareiss_determinant


class Poly:
    """Immutable polynomial with coefficients in ``ring``.

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        m = Poly(K, [-2, 0, 0, 1])  # x^3 - 2
        m(Fraction(3))  # 25
        ```
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable[Any] = ()):
        values = [ring.coerce(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.ring = ring
        self.coeffs: Tuple[Any, ...] = tuple(values)

    @classmethod
    def x(cls, ring: Ring) -> "Poly":
        return cls(ring, [0, 1])

    @classmethod
    def constant(cls, ring: Ring, value: Any) -> "Poly":
        return cls(ring, [value])

    @classmethod
    def monomial(cls, ring: Ring, k: int, coefficient: Any = 1) -> "Poly":
        return cls(ring, [0] * k + [coefficient])

    @classmethod
    def from_roots(cls, ring: Ring, roots: Iterable[Any]) -> "Poly":
        result = cls(ring, [1])
        for r in roots:
            result = result * cls(ring, [-ring.coerce(r), 1])
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        """Leading coefficient; zero for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else self.ring.zero()

    def coeff(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _lift(self, other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        try:
            return Poly(self.ring, [other])
        except (TypeError, ZeroDivisionError):
            return None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        b = self._lift(other)
        return b is not None and b.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Any) -> Any:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        n = max(len(self.coeffs), len(b.coeffs))
        return Poly(self.ring, [self.coeff(i) + b.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, [-c for c in self.coeffs])

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
        if not self.coeffs or not b.coeffs:
            return Poly(self.ring)
        out = [self.ring.zero()] * (len(self.coeffs) + len(b.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if not u:
                continue
            for j, v in enumerate(b.coeffs):
                if v:
                    out[i + j] = out[i + j] + u * v
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        result = Poly(self.ring, [1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: Any) -> Tuple["Poly", "Poly"]:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        if not b.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        inv_lc = self.ring.one() / b.lc
        rem = list(self.coeffs)
        db = b.degree
        if len(rem) - 1 < db:
            return Poly(self.ring), self
        quot = [self.ring.zero()] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv_lc
            quot[k - db] = f
            for i, v in enumerate(b.coeffs):
                rem[k - db + i] = rem[k - db + i] - f * v
        return Poly(self.ring, quot), Poly(self.ring, rem[:db])

    def __floordiv__(self, other: Any) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division.

        Raises:
            ValueError: If other does not divide self
        """
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def __call__(self, value: Any) -> Any:
        """Evaluate by Horner's rule at any value the coefficients act on."""
        acc: Any = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (self.ring.one() / self.lc)

    def scale(self, c: Any) -> "Poly":
        return Poly(self.ring, [c * v for v in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly(self.ring, [i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "Poly") -> "Poly":
        """Return self(inner(x))."""
        acc = Poly(self.ring)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def substitute_power(self, k: int) -> "Poly":
        """Return self(x^k)."""
        out = [self.ring.zero()] * (k * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(self.ring, out)

    def pow_mod(self, exponent: int, modulus: "Poly") -> "Poly":
        result = Poly(self.ring, [1]) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def map_coeffs(self, ring: Ring, fn: Any = None) -> "Poly":
        """Move to another ring, optionally transforming each coefficient."""
        if fn is None:
            return Poly(ring, self.coeffs)
        return Poly(ring, [fn(c) for c in self.coeffs])

    def order_at_zero(self) -> int:
        """Largest k with x^k dividing self; -1 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            text = str(c)
            if i and isinstance(c, Poly):
                text = f"({text})"
            elif i and any(ch in text[1:] for ch in "+-/"):
                text = f"({text})"
            if i == 0:
                terms.append(text)
                continue
            power = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(power)
            elif c == -1 and not isinstance(c, Poly):
                terms.append(f"-{power}")
            else:
                terms.append(f"{text}*{power}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return self.to_str(getattr(self.ring, "inner_var", "x"))


@dataclass(frozen=True)
class PolynomialRing:
    """The ring base[var], usable as a coefficient ring for bivariate work."""

    base: Any
    var: str = "x"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def inner_var(self) -> str:
        return "y" if self.var == "x" else "x"

    def zero(self) -> Poly:
        return Poly(self.base)

    def one(self) -> Poly:
        return Poly(self.base, [1])

    def gen(self) -> Poly:
        return Poly.x(self.base)

    def coerce(self, value: Any) -> Poly:
        if isinstance(value, Poly) and value.ring == self.base:
            return value
        return Poly(self.base, [value])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; zero only when both inputs are zero."""
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    one, zero = Poly(a.ring, [1]), Poly(a.ring)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, zero, zero
    inv = a.ring.one() / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(gcd(a, b)).monic()


def resultant(a: Poly, b: Poly) -> Any:
    """Resultant of two polynomials.

    Over a field the Euclidean remainder sequence is used. Over a polynomial
    ring the Sylvester determinant is evaluated by fraction-free elimination.
    """
    if isinstance(a.ring, PolynomialRing):
        return _sylvester_resultant(a, b)
    if not a or not b:
        return a.ring.zero()
    res: Any = a.ring.one()
    while b.degree > 0:
        da, db = a.degree, b.degree
        r = a % b
        if not r:
            return a.ring.zero()
        if (da * db) % 2:
            res = -res
        res = res * b.lc ** (da - r.degree)
        a, b = b, r
    return res * b.lc**a.degree


def sylvester_matrix(a: Poly, b: Poly) -> List[List[Any]]:
    """Sylvester matrix with rows of a's then b's coefficients, highest first."""
    m, n = a.degree, b.degree
    size = m + n
    zero = a.ring.zero()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(a.coeffs)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(b.coeffs)):
            row[i + k] = c
        rows.append(row)
    return rows


def _sylvester_resultant(a: Poly, b: Poly) -> Any:
    if not a or not b:
        return a.ring.zero()
    if a.degree == 0 and b.degree == 0:
        return a.ring.one()
    return bareiss_determinant(sylvester_matrix(a, b), lambda u, v: u.exact_div(v))


def discriminant(f: Poly) -> Any:
    """Discriminant with the sign convention (-1)^(n(n-1)/2) Res(f, f') / lc."""
    n = f.degree
    if n < 1:
        raise ValueError(f"discriminant needs positive degree, got {n}")
    df = f.derivative()
    if not df:
        res = f.ring.zero()
    else:
        res = resultant(f, df) * f.lc ** (n - 1 - df.degree)
    if (n * (n - 1) // 2) % 2:
        res = -res
    return res / f.lc


def pth_root(f: Poly) -> Optional[Poly]:
    """g with g^p = f when every exponent of f is divisible by p, else None."""
    p = f.ring.characteristic
    root_fn = getattr(f.ring, "pth_root", None)
    if p == 0 or root_fn is None:
        return None
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p:
            if c:
                return None
            continue
        r = root_fn(c)
        if r is None:
            return None
        out.append(r)
    return Poly(f.ring, out)


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f.

    In characteristic p, when f = g(x^p) and f is not a p-th power (as for
    (x^p - t)^2 over F_p(t)), the result is rad(g)(x^p). That is exact unless
    f mixes inseparable factors with p-th powers of separable ones.
    """
    if f.degree <= 0:
        return Poly(f.ring, [1])
    f = f.monic()
    df = f.derivative()
    if not df:
        root = pth_root(f)
        if root is not None:
            return squarefree_part(root)
        p = f.ring.characteristic
        return squarefree_part(Poly(f.ring, f.coeffs[::p])).substitute_power(p)
    g = gcd(f, df)
    if g.degree == 0:
        return f
    w = f.exact_div(g)
    return lcm(w, squarefree_part(g))


def is_squarefree(f: Poly) -> bool:
    return squarefree_part(f).degree == f.degree


def is_separable(f: Poly) -> bool:
    """True iff gcd(f, f') is constant; a vanishing derivative forces False."""
    if not f:
        raise ValueError("separability is undefined for the zero polynomial")
    df = f.derivative()
    if f.degree >= 1 and not df:
        return False
    return gcd(f, df).degree == 0


def interpolate(ring: Ring, points: Sequence[Tuple[Any, Any]]) -> Poly:
    """Newton interpolation through (x_i, y_i) with distinct x_i."""
    xs = [ring.coerce(x) for x, _ in points]
    table = [ring.coerce(y) for _, y in points]
    n = len(xs)
    coeffs = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coeffs.append(table[0])
    result = Poly(ring)
    for k in range(n - 1, -1, -1):
        result = result * Poly(ring, [-xs[k], 1]) + coeffs[k]
    return result


def squarefree_decomposition(f: Poly) -> List[Tuple[Poly, int]]:
    """Yun's algorithm: pairs (a_i, i) with f = lc(f) * prod a_i^i.

    The a_i are monic, squarefree and pairwise coprime; only nonconstant
    ones are returned.

    Raises:
        UnsupportedCharacteristicError: If 0 < char <= deg f
    """
    p = f.ring.characteristic
    if f.degree <= 0:
        return []
    if p and p <= f.degree:
        raise UnsupportedCharacteristicError(p, "squarefree decomposition")
    f = f.monic()
    df = f.derivative()
    a = gcd(f, df)
    b = f.exact_div(a)
    d = df.exact_div(a) - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        part = gcd(b, d)
        b = b.exact_div(part)
        d = d.exact_div(part) - b.derivative()
        if part.degree > 0:
            out.append((part, i))
        i += 1
    return out
