"""Whether the Weil bounds alone force a new point over F_{q^d}.

A point that is not new over F_{q^d} lies in some F_{q^(d/l)} with l a prime
dividing d. A new point is therefore guaranteed on every genus-g curve when

    q^d + 1 - 2g sqrt(q^d) > sum_l (q^(d/l) + 1 + 2g sqrt(q^(d/l))).

Every square root involved is an integer multiple of 1 or of sqrt(q), so the
inequality is decided exactly as the sign of u + v sqrt(q).
"""

from enum import Enum
from typing import Tuple

import sympy

from python.finite_lab.extension import base_field


class WeilVerdict(Enum):
    """Outcome of the Weil-bound test."""

    GUARANTEED = "guaranteed"
    UNKNOWN = "unknown"


def _sqrt_power(q: int, k: int) -> Tuple[int, int]:
    """sqrt(q^k) as (u, v) meaning u + v sqrt(q)."""
    if k % 2:
        return 0, q ** (k // 2)
    return q ** (k // 2), 0


def sign_of(u: int, v: int, q: int) -> int:
    """Sign of u + v sqrt(q), decided by squaring."""
    if u >= 0 and v >= 0:
        return 1 if u or v else 0
    if u <= 0 and v <= 0:
        return -1
    difference = u * u - v * v * q
    if difference == 0:
        return 0
    positive_side = u if difference > 0 else v
    return 1 if positive_side > 0 else -1


def weil_margin(q: int, genus: int, d: int) -> Tuple[int, int]:
    """Lower bound on N_d minus the upper bound on old points, as u + v sqrt(q)."""
    top_u, top_v = _sqrt_power(q, d)
    u = q**d + 1 - 2 * genus * top_u
    v = -2 * genus * top_v
    for ell in sympy.primefactors(d):
        k = d // ell
        sub_u, sub_v = _sqrt_power(q, k)
        u -= q**k + 1 + 2 * genus * sub_u
        v -= 2 * genus * sub_v
    return u, v


def weil_feasibility(q: int, genus: int, d: int) -> WeilVerdict:
    """GUARANTEED when every genus-g curve over F_q has a new point over F_{q^d}.

    Args:
        q: Prime power
        genus: g >= 1
        d: Degree of the extension, d >= 1

    Example Usage:
        ```python
        weil_feasibility(2, 1, 4)  # WeilVerdict.UNKNOWN, 9 < 9 fails
        weil_feasibility(2, 1, 5)  # WeilVerdict.GUARANTEED
        ```
    """
    base_field(q)
    if genus < 1:
        raise ValueError(f"genus must be positive, got {genus}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if sign_of(*weil_margin(q, genus, d), q) > 0:
        return WeilVerdict.GUARANTEED
    return WeilVerdict.UNKNOWN
