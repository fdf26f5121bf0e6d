"""Arithmetic with polynomials over GF(p) on plain integer tuples.

The polynomial a_0 + a_1 x + ... + a_n x^n is the tuple (a_0, ..., a_n) of
integers in {0, ..., p-1} with a_n nonzero; the zero polynomial is ().
These kernels back the finite-field and rational-function element types and
the mod-p reductions used by irreducibility certificates, where building
generic polynomial objects would be wasteful.
"""

from typing import Iterable, List, Optional, Tuple

import sympy

GFPoly = Tuple[int, ...]

ZERO: GFPoly = ()
ONE: GFPoly = (1,)
X: GFPoly = (0, 1)


def reduce(coeffs: Iterable[int], p: int) -> GFPoly:
    """Reduce integer coefficients modulo p and strip trailing zeros."""
    values = [c % p for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def degree(a: GFPoly) -> int:
    """Degree of a, with -1 for the zero polynomial."""
    return len(a) - 1


def add(a: GFPoly, b: GFPoly, p: int) -> GFPoly:
    if len(a) < len(b):
        a, b = b, a
    return reduce([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)], p)


def neg(a: GFPoly, p: int) -> GFPoly:
    return tuple((-c) % p for c in a)


def sub(a: GFPoly, b: GFPoly, p: int) -> GFPoly:
    return add(a, neg(b, p), p)


def scale(a: GFPoly, c: int, p: int) -> GFPoly:
    return reduce([c * v for v in a], p)


def mul(a: GFPoly, b: GFPoly, p: int) -> GFPoly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return reduce(out, p)


def divmod_poly(a: GFPoly, b: GFPoly, p: int) -> Tuple[GFPoly, GFPoly]:
    """Divide a by b with remainder.

    Raises:
        ZeroDivisionError: If b is the zero polynomial
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial over GF(p)")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return ZERO, a
    inv_lc = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % p
        if c:
            f = (c * inv_lc) % p
            quot[k - db] = f
            for i, v in enumerate(b):
                rem[k - db + i] -= f * v
    return reduce(quot, p), reduce(rem[:db], p)


def mod(a: GFPoly, b: GFPoly, p: int) -> GFPoly:
    return divmod_poly(a, b, p)[1]


def monic(a: GFPoly, p: int) -> GFPoly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: GFPoly, b: GFPoly, p: int) -> GFPoly:
    """Monic greatest common divisor."""
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def xgcd(a: GFPoly, b: GFPoly, p: int) -> Tuple[GFPoly, GFPoly, GFPoly]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_poly(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return ZERO, ZERO, ZERO
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def invert(a: GFPoly, modulus: GFPoly, p: int) -> GFPoly:
    """Inverse of a modulo an irreducible modulus.

    Raises:
        ZeroDivisionError: If a is not invertible modulo the modulus
    """
    g, s, _ = xgcd(mod(a, modulus, p), modulus, p)
    if g != ONE:
        raise ZeroDivisionError("element is not invertible modulo the field modulus")
    return s


def powmod(a: GFPoly, exponent: int, modulus: GFPoly, p: int) -> GFPoly:
    """Compute a**exponent modulo modulus by square-and-multiply."""
    result = ONE if degree(modulus) > 0 else ZERO
    base = mod(a, modulus, p)
    while exponent > 0:
        if exponent & 1:
            result = mod(mul(result, base, p), modulus, p)
        base = mod(mul(base, base, p), modulus, p)
        exponent >>= 1
    return result


def derivative(a: GFPoly, p: int) -> GFPoly:
    return reduce([i * c for i, c in enumerate(a)][1:], p)


def evaluate(a: GFPoly, x: int, p: int) -> int:
    y = 0
    for c in reversed(a):
        y = (y * x + c) % p
    return y


def is_irreducible(a: GFPoly, p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p)."""
    n = degree(a)
    if n < 1:
        return False
    if n == 1:
        return True
    f = monic(a, p)
    frobenius = X
    powers: List[GFPoly] = [X]
    for _ in range(n):
        frobenius = powmod(frobenius, p, f, p)
        powers.append(frobenius)
    if sub(powers[n], X, p) != ZERO:
        return False
    for r in sympy.primefactors(n):
        if gcd(f, sub(powers[n // r], X, p), p) != ONE:
            return False
    return True


def first_irreducible(p: int, n: int) -> GFPoly:
    """Least monic irreducible polynomial of degree n over GF(p).

    Candidates x^n + c(x) are ordered by the integer sum c_i p^i of their lower
    coefficients, so the constant term is least significant.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    for code in range(p**n):
        lower = []
        for _ in range(n):
            code, digit = divmod(code, p)
            lower.append(digit)
        candidate = tuple(lower) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


def distinct_degree_factorization(a: GFPoly, p: int) -> List[Tuple[int, GFPoly]]:
    """Split a squarefree polynomial into products of equal-degree factors.

    Returns:
        Pairs (k, g_k) where g_k is the product of all monic irreducible
        factors of degree k; only nonconstant g_k are listed.
    """
    f = monic(a, p)
    result: List[Tuple[int, GFPoly]] = []
    frobenius = X
    k = 0
    while degree(f) >= 2 * (k + 1):
        k += 1
        frobenius = powmod(frobenius, p, f, p)
        g = gcd(f, sub(frobenius, X, p), p)
        if degree(g) > 0:
            result.append((k, g))
            f = divmod_poly(f, g, p)[0]
            frobenius = mod(frobenius, f, p)
    if degree(f) > 0:
        result.append((degree(f), f))
    return result


def factor_degrees(a: GFPoly, p: int) -> List[int]:
    """Degrees of the irreducible factors of a squarefree polynomial."""
    degrees: List[int] = []
    for k, g in distinct_degree_factorization(a, p):
        degrees.extend([k] * (degree(g) // k))
    return sorted(degrees)


def sqrt(a: GFPoly, p: int) -> Optional[GFPoly]:
    """Square root of a polynomial over GF(p), p odd, or None.

    The monic part must have an exact approximate square root and the leading
    coefficient must be a quadratic residue.
    """
    if p == 2:
        raise ValueError("square roots of polynomials need odd characteristic")
    if not a:
        return ZERO
    n = degree(a)
    if n % 2:
        return None
    root_lc = sympy.sqrt_mod(a[-1], p)
    if root_lc is None:
        return None
    m = monic(a, p)
    k = n // 2
    h = [0] * (k + 1)
    h[k] = 1
    inv_two = pow(2, -1, p)
    for i in range(1, k + 1):
        acc = m[2 * k - i]
        for j in range(1, i):
            acc -= h[k - j] * h[k - i + j]
        h[k - i] = (acc * inv_two) % p
    root = reduce(h, p)
    if mul(root, root, p) != m:
        return None
    return scale(root, root_lc, p)


def is_square(a: GFPoly, p: int) -> bool:
    return sqrt(a, p) is not None
