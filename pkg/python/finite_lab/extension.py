"""Extensions F_{q^e} of a finite field and the embeddings F_q -> F_{q^e}.

F_{q^e} is built over the prime field with the least irreducible modulus of
degree n*e. The image of the generator of F_q is a root of the modulus of
F_q, found by equal-degree splitting.
"""

from dataclasses import dataclass
from typing import Any, Optional

import sympy

from python.algebra.exceptions import FieldMismatchError
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.algebra.random_source import SplitMix64
from python.algebra.roots import finite_field_roots


def _require_finite(field: FieldDescriptor) -> None:
    if not field.is_finite:
        raise ValueError(f"expected a finite field, got {field}")


def base_field(q: int) -> FieldDescriptor:
    """F_q for a prime power q.

    Raises:
        ValueError: If q is not a prime power
    """
    factors = sympy.factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise ValueError(f"q must be a prime power, got {q}")
    ((p, n),) = factors.items()
    return FieldDescriptor.prime(p) if n == 1 else FieldDescriptor.finite(p, n)


def extension_field(field: FieldDescriptor, e: int) -> FieldDescriptor:
    """F_{q^e} for q the order of field; field itself when e = 1."""
    _require_finite(field)
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    if e == 1:
        return field
    return FieldDescriptor.finite(field.p, field.n * e)


def find_root(poly: Poly, field: FieldDescriptor, rng: Optional[SplitMix64] = None) -> Any:
    """A root of poly in the finite field, or None when it has none there.

    The coefficients of poly must lie in field or in its prime field.

    Args:
        poly: Nonzero polynomial
        field: Finite field in which to look for a root
        rng: Generator for the splitting step

    Raises:
        FieldMismatchError: If a coefficient cannot be moved into field
    """
    _require_finite(field)
    if poly.ring != field:
        poly = poly.map_coeffs(field)
    if not poly:
        raise ValueError("every element is a root of the zero polynomial")
    if poly.degree < 1:
        return None
    roots = finite_field_roots(poly, rng or SplitMix64(0))
    return roots[0] if roots else None


@dataclass(frozen=True)
class FieldEmbedding:
    """A field homomorphism F_q -> F_{q^e} fixed by the image of the generator.

    Attributes:
        source: F_q
        target: F_{q^e}
        generator_image: Image of the class of x in F_q

    Example Usage:
        ```python
        F4 = FieldDescriptor.finite(2, 2)
        embed = FieldEmbedding.between(F4, extension_field(F4, 2))
        embed(F4.generator())
        ```
    """

    source: FieldDescriptor
    target: FieldDescriptor
    generator_image: Any

    @classmethod
    def between(
        cls, source: FieldDescriptor, target: FieldDescriptor, seed: int = 0
    ) -> "FieldEmbedding":
        """The embedding sending x to the first root of the modulus of source.

        Raises:
            FieldMismatchError: If the characteristics differ or n does not divide
        """
        _require_finite(source)
        _require_finite(target)
        if source.p != target.p or target.n % source.n:
            raise FieldMismatchError(source, target)
        if source.n == 1:
            return cls(source, target, target.zero())
        if source == target:
            return cls(source, target, target.generator())
        modulus = Poly(FieldDescriptor.prime(source.p), source.modulus)
        root = find_root(modulus, target, SplitMix64(seed))
        if root is None:
            raise ArithmeticError(f"modulus of {source} has no root in {target}")
        return cls(source, target, root)

    def __call__(self, value: Any) -> Any:
        element = self.source.coerce(value)
        if self.source.n == 1:
            return self.target.coerce(element.as_int())
        image = self.target.zero()
        for c in reversed(element.coeffs):
            image = image * self.generator_image + c
        return image


def element_degree(z: Any, q: int, d: int) -> int:
    """Degree over F_q of an element of F_{q^d}: the least k | d with z^(q^k) = z."""
    for k in sympy.divisors(d):
        if z ** (q**k) == z:
            return k
    raise ArithmeticError(f"{z} does not lie in F_{q}^{d}")
