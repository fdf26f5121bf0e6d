"""Homogeneous polynomials in x, y, z over a base field."""

from typing import Any, Dict, Iterable, List, Sequence, Tuple

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly, PolynomialRing

Monomial = Tuple[int, int, int]


def monomials(degree: int) -> List[Monomial]:
    """Exponent triples of the given degree, x-major descending."""
    return [
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    ]


class TernaryForm:
    """A form sum c_(i,j,k) x^i y^j z^k with field coefficients.

    Zero coefficients are dropped, so two forms are equal iff their term
    dictionaries are.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldDescriptor, terms: Dict[Monomial, Any]):
        self.field = field
        self.terms: Dict[Monomial, Any] = {}
        for mon, c in terms.items():
            value = field.coerce(c)
            if value:
                self.terms[mon] = value

    @classmethod
    def variable(cls, field: FieldDescriptor, index: int) -> "TernaryForm":
        mon = [0, 0, 0]
        mon[index] = 1
        return cls(field, {(mon[0], mon[1], mon[2]): 1})

    @classmethod
    def linear(cls, field: FieldDescriptor, coeffs: Sequence[Any]) -> "TernaryForm":
        return cls(field, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return sum(next(iter(self.terms)))

    def coefficient(self, mon: Monomial) -> Any:
        return self.terms.get(mon, self.field.zero())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TernaryForm) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms)))

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        out = dict(self.terms)
        for mon, c in other.terms.items():
            out[mon] = out.get(mon, self.field.zero()) + c
        return TernaryForm(self.field, out)

    def __neg__(self) -> "TernaryForm":
        return TernaryForm(self.field, {mon: -c for mon, c in self.terms.items()})

    def __sub__(self, other: "TernaryForm") -> "TernaryForm":
        return self + (-other)

    def __mul__(self, other: Any) -> "TernaryForm":
        if not isinstance(other, TernaryForm):
            return TernaryForm(self.field, {mon: c * other for mon, c in self.terms.items()})
        out: Dict[Monomial, Any] = {}
        for (a, b, c), u in self.terms.items():
            for (d, e, f), v in other.terms.items():
                mon = (a + d, b + e, c + f)
                out[mon] = out.get(mon, self.field.zero()) + u * v
        return TernaryForm(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TernaryForm":
        result = TernaryForm(self.field, {(0, 0, 0): 1})
        for _ in range(exponent):
            result = result * self
        return result

    def partial(self, index: int) -> "TernaryForm":
        """Formal derivative with respect to x (0), y (1) or z (2)."""
        out: Dict[Monomial, Any] = {}
        for mon, c in self.terms.items():
            if mon[index] == 0:
                continue
            lowered = list(mon)
            lowered[index] -= 1
            out[(lowered[0], lowered[1], lowered[2])] = c * mon[index]
        return TernaryForm(self.field, out)

    def evaluate(self, point: Sequence[Any]) -> Any:
        """Value at (x, y, z); coordinates may live in any extension ring."""
        acc: Any = self.field.zero()
        for (i, j, k), c in self.terms.items():
            acc = acc + c * (point[0] ** i) * (point[1] ** j) * (point[2] ** k)
        return acc

    def substitute(self, images: Sequence["TernaryForm"]) -> "TernaryForm":
        """Replace x, y, z by the given linear forms."""
        out = TernaryForm(self.field, {})
        for (i, j, k), c in self.terms.items():
            out = out + (images[0] ** i) * (images[1] ** j) * (images[2] ** k) * c
        return out

    def dehomogenize(self, index: int) -> "TernaryForm":
        """Set one variable to 1; the result is no longer homogeneous."""
        out: Dict[Monomial, Any] = {}
        for mon, c in self.terms.items():
            lowered = list(mon)
            lowered[index] = 0
            key = (lowered[0], lowered[1], lowered[2])
            out[key] = out.get(key, self.field.zero()) + c
        return TernaryForm(self.field, out)

    def to_bivariate(self) -> Poly:
        """The z = 1 part as a polynomial in y over K[x]."""
        ring = PolynomialRing(self.field)
        by_y: Dict[int, Dict[int, Any]] = {}
        for (i, j, _), c in self.terms.items():
            row = by_y.setdefault(j, {})
            row[i] = row.get(i, self.field.zero()) + c
        top = max(by_y, default=-1)
        coeffs = []
        for j in range(top + 1):
            row = by_y.get(j, {})
            width = max(row, default=-1) + 1
            coeffs.append(Poly(self.field, [row.get(i, 0) for i in range(width)]))
        return Poly(ring, coeffs)

    def binary_restriction(self, index: int) -> Poly:
        """Restriction to the line where variable ``index`` vanishes, in the
        remaining two variables with the later one set to 1."""
        keep = [v for v in range(3) if v != index]
        coeffs: Dict[int, Any] = {}
        for mon, c in self.terms.items():
            if mon[index]:
                continue
            e = mon[keep[0]]
            coeffs[e] = coeffs.get(e, self.field.zero()) + c
        width = max(coeffs, default=-1) + 1
        return Poly(self.field, [coeffs.get(e, 0) for e in range(width)])

    def coefficient_vector(self, degree: int) -> List[Any]:
        return [self.coefficient(mon) for mon in monomials(degree)]

    def to_str(self, names: Iterable[str] = ("x", "y", "z")) -> str:
        if not self.terms:
            return "0"
        var = list(names)
        parts = []
        for mon in sorted(self.terms, reverse=True):
            c = self.terms[mon]
            factors = [
                v if e == 1 else f"{v}^{e}" for v, e in zip(var, mon) if e
            ]
            body = "*".join(factors)
            text = str(c)
            if body and any(ch in text[1:] for ch in "+-/"):
                text = f"({text})"
            if not body:
                parts.append(text)
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{text}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return self.to_str()
