"""Dense exact linear algebra on lists of ring elements.

Matrices are lists of rows. Polynomials produced here are little-endian
coefficient lists so that this module stays below ``python.algebra.poly``.
"""

from typing import Any, Callable, List, Optional, Sequence

from python.algebra.fields import Ring

Matrix = List[List[Any]]


def _copy(matrix: Sequence[Sequence[Any]]) -> Matrix:
    return [list(row) for row in matrix]


def _poly_sub_scaled(p: List[Any], q: List[Any], c: Any, zero: Any) -> List[Any]:
    """Return p - c*q on little-endian coefficient lists."""
    out = list(p) + [zero] * max(0, len(q) - len(p))
    for i, v in enumerate(q):
        out[i] = out[i] - c * v
    return out


def hessenberg_form(matrix: Sequence[Sequence[Any]]) -> Matrix:
    """Reduce a square matrix to upper Hessenberg form by similarity."""
    h = _copy(matrix)
    n = len(h)
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if h[i][j]), None)
        if pivot is None:
            continue
        r = j + 1
        if pivot != r:
            h[pivot], h[r] = h[r], h[pivot]
            for row in h:
                row[pivot], row[r] = row[r], row[pivot]
        for i in range(j + 2, n):
            if not h[i][j]:
                continue
            u = h[i][j] / h[r][j]
            h[i] = [a - u * b for a, b in zip(h[i], h[r])]
            for row in h:
                row[r] = row[r] + u * row[i]
    return h


def char_poly_coeffs(matrix: Sequence[Sequence[Any]], ring: Ring) -> List[Any]:
    """Characteristic polynomial det(X*I - M), little-endian and monic.

    The matrix is reduced to Hessenberg form and the polynomial assembled by
    the standard leading-minor recurrence, using O(n^3) field operations.
    """
    h = hessenberg_form(matrix)
    n = len(h)
    zero, one = ring.zero(), ring.one()
    polys: List[List[Any]] = [[one]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        shifted = [zero] + list(prev)
        current = _poly_sub_scaled(shifted, prev, h[m - 1][m - 1], zero)
        t = one
        for i in range(m - 1, 0, -1):
            t = t * h[i][i - 1]
            if not t:
                break
            current = _poly_sub_scaled(current, polys[i - 1], h[i - 1][m - 1] * t, zero)
        polys.append(current)
    return polys[n]


def solve(matrix: Sequence[Sequence[Any]], rhs: Sequence[Any], ring: Ring) -> Optional[List[Any]]:
    """One solution of M x = rhs over a field, or None if inconsistent.

    Free variables are set to zero.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = ring.one() / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [ring.zero()] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


def determinant(matrix: Sequence[Sequence[Any]], ring: Ring) -> Any:
    """Determinant over a field by Gaussian elimination."""
    m = _copy(matrix)
    n = len(m)
    det = ring.one()
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return ring.zero()
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        inv = ring.one() / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def bareiss_determinant(
    matrix: Sequence[Sequence[Any]], exact_div: Callable[[Any, Any], Any]
) -> Any:
    """Fraction-free determinant over an integral domain.

    Args:
        matrix: Square matrix with entries in the domain
        exact_div: Exact division in the domain, e.g. polynomial exact_div

    Returns:
        The determinant, an element of the domain
    """
    m = _copy(matrix)
    n = len(m)
    sign = 1
    prev: Any = None
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return m[k][k] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = value if prev is None else exact_div(value, prev)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det
