"""Irreducibility certificates with an honest three-level status.

Over Q a polynomial is PROVED irreducible by Eisenstein's criterion after a
small shift, or by intersecting the factor-degree patterns of its
reductions modulo primes of good reduction. It is FAILED when a factor is
exhibited and LIKELY otherwise. Over finite fields the Rabin test is exact.
Over F_p(t) linearity in t and good specializations t = c give proofs.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Set

import sympy
from absl import logging

from python.algebra import gf_poly
from python.algebra.fields import FieldDescriptor, FieldKind
from python.algebra.gf_poly import GFPoly
from python.algebra.poly import Poly, gcd, squarefree_part

PATTERN_PRIMES = 10
EISENSTEIN_SHIFTS = (0, 1, -1, 2, -2)


class IrreducibilityStatus(Enum):
    PROVED = "PROVED"
    LIKELY = "LIKELY"
    FAILED = "FAILED"

    @classmethod
    def combine(cls, statuses: Sequence["IrreducibilityStatus"]) -> "IrreducibilityStatus":
        """FAILED dominates, then PROVED, then LIKELY."""
        if cls.FAILED in statuses:
            return cls.FAILED
        if cls.PROVED in statuses:
            return cls.PROVED
        return cls.LIKELY


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Outcome of an irreducibility check.

    Attributes:
        status: PROVED, LIKELY or FAILED
        method: Name of the argument that decided the status
        witness: Prime, shift or specialization used by the argument
        factor: A proper factor when status is FAILED
    """

    status: IrreducibilityStatus
    method: str
    witness: Optional[str] = None
    factor: Optional[Poly] = None


def certify_irreducible(f: Poly) -> IrreducibilityCertificate:
    """Certify irreducibility of f over its coefficient field.

    Args:
        f: Nonzero polynomial over a FieldDescriptor

    Returns:
        IrreducibilityCertificate; constants are reported FAILED
    """
    field = f.ring
    if not isinstance(field, FieldDescriptor):
        raise TypeError(f"irreducibility is certified over base fields only, got {field}")
    if f.degree < 1:
        return IrreducibilityCertificate(IrreducibilityStatus.FAILED, "constant")
    if f.degree == 1:
        return IrreducibilityCertificate(IrreducibilityStatus.PROVED, "linear")
    radical = squarefree_part(f)
    if radical.degree < f.degree:
        factor = radical if radical.degree > 0 else gcd(f, f.derivative())
        return IrreducibilityCertificate(
            IrreducibilityStatus.FAILED, "repeated factor", factor=factor
        )
    if field.kind == FieldKind.RATIONALS:
        return _certify_rational(f)
    if field.is_finite:
        return _certify_finite(f)
    return _certify_function_field(f)


def _integer_coeffs(f: Poly) -> List[int]:
    denominators = [Fraction(c).denominator for c in f.coeffs]
    scale = math.lcm(*denominators)
    values = [int(Fraction(c) * scale) for c in f.coeffs]
    content = math.gcd(*values)
    return [v // content for v in values]


def _shift(coeffs: Sequence[int], s: int) -> List[int]:
    """Coefficients of f(x + s) by repeated synthetic division."""
    out = list(coeffs)
    n = len(out) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            out[j] += s * out[j + 1]
    return out


def _eisenstein_prime(coeffs: Sequence[int]) -> Optional[int]:
    g = math.gcd(*coeffs[:-1])
    if g in (0, 1):
        return None
    for p in sympy.primefactors(g, limit=10**6):
        if coeffs[-1] % p and coeffs[0] % (p * p):
            return p
    return None


def subset_sums(degrees: Sequence[int]) -> Set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _pattern_intersection(patterns: Sequence[Sequence[int]], n: int) -> Set[int]:
    possible = set(range(n + 1))
    for degrees in patterns:
        possible &= subset_sums(degrees)
    return possible


def _certify_rational(f: Poly) -> IrreducibilityCertificate:
    coeffs = _integer_coeffs(f)
    n = len(coeffs) - 1
    x = sympy.Symbol("x")
    roots = sympy.Poly(list(reversed(coeffs)), x).ground_roots()
    if roots:
        root = Fraction(str(next(iter(roots))))
        return IrreducibilityCertificate(
            IrreducibilityStatus.FAILED,
            "rational root",
            witness=str(root),
            factor=Poly(f.ring, [-root, 1]),
        )
    if n <= 3:
        return IrreducibilityCertificate(IrreducibilityStatus.PROVED, "no rational root")
    for s in EISENSTEIN_SHIFTS:
        p = _eisenstein_prime(_shift(coeffs, s))
        if p is not None:
            return IrreducibilityCertificate(
                IrreducibilityStatus.PROVED, "eisenstein", witness=f"p={p}, shift={s}"
            )
    patterns = []
    used = []
    for p in sympy.primerange(2, 10**6):
        if len(patterns) == PATTERN_PRIMES:
            break
        if coeffs[-1] % p == 0:
            continue
        reduced = gf_poly.reduce(coeffs, p)
        if gf_poly.degree(gf_poly.gcd(reduced, gf_poly.derivative(reduced, p), p)) > 0:
            continue
        patterns.append(gf_poly.factor_degrees(reduced, p))
        used.append(p)
        if _pattern_intersection(patterns, n) == {0, n}:
            return IrreducibilityCertificate(
                IrreducibilityStatus.PROVED,
                "degree patterns",
                witness=f"primes={used}",
            )
    logging.warning("Irreducibility of degree-%d polynomial not proved; status LIKELY", n)
    return IrreducibilityCertificate(
        IrreducibilityStatus.LIKELY, "degree patterns", witness=f"primes={used}"
    )


def _frobenius_power(f: Poly, q: int, k: int) -> Poly:
    """x^(q^k) mod f."""
    power = Poly.x(f.ring) % f
    for _ in range(k):
        power = power.pow_mod(q, f)
    return power


def _certify_finite(f: Poly) -> IrreducibilityCertificate:
    field = f.ring
    q = field.order
    n = f.degree
    x = Poly.x(field)
    monic = f.monic()
    for k in range(1, n // 2 + 1):
        g = gcd(monic, _frobenius_power(monic, q, k) - x)
        if g.degree > 0:
            return IrreducibilityCertificate(
                IrreducibilityStatus.FAILED, "distinct degree", witness=f"k={k}", factor=g
            )
    return IrreducibilityCertificate(IrreducibilityStatus.PROVED, "rabin")


def _clear_denominators(f: Poly) -> List[GFPoly]:
    p = f.ring.p
    common: GFPoly = gf_poly.ONE
    for c in f.coeffs:
        g = gf_poly.gcd(common, c.den, p)
        common = gf_poly.divmod_poly(gf_poly.mul(common, c.den, p), g, p)[0]
    out = []
    for c in f.coeffs:
        cofactor = gf_poly.divmod_poly(common, c.den, p)[0]
        out.append(gf_poly.mul(c.num, cofactor, p))
    return out


def _certify_function_field(f: Poly) -> IrreducibilityCertificate:
    p = f.ring.p
    coeffs = _clear_denominators(f)
    if all(gf_poly.degree(c) <= 1 for c in coeffs):
        a = gf_poly.reduce([c[0] if len(c) > 0 else 0 for c in coeffs], p)
        b = gf_poly.reduce([c[1] if len(c) > 1 else 0 for c in coeffs], p)
        if b and gf_poly.gcd(a, b, p) == gf_poly.ONE:
            return IrreducibilityCertificate(IrreducibilityStatus.PROVED, "linear in t")
    n = len(coeffs) - 1
    patterns = []
    for c in range(p):
        special = gf_poly.reduce([gf_poly.evaluate(v, c, p) for v in coeffs], p)
        if gf_poly.degree(special) != n:
            continue
        if gf_poly.degree(gf_poly.gcd(special, gf_poly.derivative(special, p), p)) > 0:
            continue
        patterns.append(gf_poly.factor_degrees(special, p))
        if _pattern_intersection(patterns, n) == {0, n}:
            return IrreducibilityCertificate(
                IrreducibilityStatus.PROVED, "specialization", witness=f"t={c}"
            )
    logging.warning("Irreducibility over F_%d(t) not proved; status LIKELY", p)
    return IrreducibilityCertificate(IrreducibilityStatus.LIKELY, "specialization")


def is_irreducible(f: Poly) -> bool:
    return certify_irreducible(f).status == IrreducibilityStatus.PROVED
