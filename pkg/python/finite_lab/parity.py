"""Root-number parity for an elliptic curve of prime conductor p over Q(m^(1/l)).

Let E be an elliptic curve of prime conductor p with split multiplicative
reduction at p, and let L = Q(m^(1/l)). Over Q the root number is +1. Over L
it is (-1)^((l+1)/2) (-1)^s. Here (l+1)/2 counts the archimedean places and
s counts the primes of L above p. When l does not divide p - 1, x^l - m
factors mod p like x^l - 1, so s = 1 + (l - 1)/f with f the order of p mod l.
A root number of -1 over L, under the parity conjecture, forces a new point
over L.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

import sympy
from absl import logging

from python.algebra import gf_poly
from python.finite_lab.exceptions import NotApplicableError

CONDUCTOR_OFFSET = 64


@dataclass(frozen=True)
class ParityReport:
    """Root numbers of E/Q and E/L for one pair (l, p).

    Attributes:
        ell: Odd prime degree of L
        p: Conductor of the curve
        f: Multiplicative order of p modulo l
        s: Number of primes of L above p
        omega_q: Root number over Q, always +1
        omega_l: Root number over L
        u_form: u >= 0 with p = u^2 + 64, when it exists
    """

    ell: int
    p: int
    f: int
    s: int
    omega_q: int
    omega_l: int
    u_form: Optional[int] = None

    @property
    def predicts_new_point(self) -> bool:
        return self.omega_l != self.omega_q


def _require_prime(name: str, value: int) -> None:
    if not sympy.isprime(value):
        raise ValueError(f"{name} must be prime, got {value}")


def u_form(p: int) -> Optional[int]:
    """u >= 0 with p = u^2 + 64, or None."""
    if p < CONDUCTOR_OFFSET:
        return None
    u, exact = sympy.integer_nthroot(p - CONDUCTOR_OFFSET, 2)
    return int(u) if exact else None


def neumann_setzer_parity(ell: int, p: int) -> ParityReport:
    """Evaluate the parity prediction for the pair (l, p).

    Args:
        ell: Odd prime
        p: Prime different from ell with gcd(ell, p - 1) = 1

    Raises:
        NotApplicableError: If l divides p - 1
        ValueError: If ell or p is not a suitable prime

    Example Usage:
        ```python
        report = neumann_setzer_parity(13, 73)
        report.s, report.omega_l, report.u_form  # 4, -1, 3
        ```
    """
    _require_prime("ell", ell)
    _require_prime("p", p)
    if ell == 2:
        raise ValueError("ell must be odd")
    if p == ell:
        raise ValueError(f"p must differ from ell, got {p}")
    if math.gcd(ell, p - 1) != 1:
        raise NotApplicableError(
            f"{ell} divides {p} - 1, so x^{ell} - m need not split like x^{ell} - 1"
        )
    f = int(sympy.n_order(p, ell))
    s = 1 + (ell - 1) // f
    omega_l = (-1) ** ((ell + 1) // 2) * (-1) ** s
    u = u_form(p)
    if u is None:
        logging.warning("%d is not of the form u^2 + 64; no such curve is promised", p)
    return ParityReport(ell, p, f, s, 1, omega_l, u)


def factor_count(ell: int, p: int, m: int = 1) -> int:
    """Number of irreducible factors of x^l - m over F_p, by distinct-degree factorization."""
    if m % p == 0:
        raise ValueError(f"m must be prime to {p}, got {m}")
    return len(gf_poly.factor_degrees(gf_poly.reduce([-m] + [0] * (ell - 1) + [1], p), p))


def parity_scan(ell: int, u_max: int) -> List[ParityReport]:
    """Reports for the primes p = u^2 + 64, u <= u_max, with l not dividing p - 1."""
    reports = []
    for u in range(u_max + 1):
        p = u * u + CONDUCTOR_OFFSET
        if p != ell and sympy.isprime(p) and math.gcd(ell, p - 1) == 1:
            reports.append(neumann_setzer_parity(ell, p))
    return reports
