"""Curves y^2 = ell(x^k) with a new point over K(theta), theta^k = beta_0.

Let m_0 be the minimal polynomial of beta_0, t = x for odd e = deg m_0 and
t = 1 otherwise, and write t m_0 = h^2 - ell. Then (theta, h(theta^k)) lies
on y^2 = ell(x^k) and the x-coordinate has minimal polynomial m_0(x^k).
When ell has the wrong degree or a repeated or zero root, beta_0 is
replaced by gamma^k beta_0 for some gamma in K(beta_0); the point moves to
gamma theta and the field K(theta) stays the same.
"""

import math
from typing import Optional, Tuple

from absl import logging

from python.algebra.etale import EtaleAlgebra, EtaleElement, char_poly
from python.algebra.poly import Poly, is_separable
from python.algebra.random_source import SplitMix64
from python.algebra.sqrt_decomp import Decomposition, approx_sqrt
from python.constructors.exceptions import InseparableInputError, PreconditionError
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.genus_one import check_genus_one
from python.constructors.options import ConstructionOptions
from python.constructors.report import (
    ConstructionReport,
    RationalPoint,
    certified_point,
    infinity_points,
)
from python.constructors.sampling import (
    SampleRejected,
    check_sampling_field,
    random_element,
    run_trials,
)
from python.curves.models import HyperellipticModel

METHOD = "kummer"
MIN_DEGREE = 9
DEGENERATE_WARNING = (
    "deg ell = 1: the curve is y^2 = a x^k + b, and all such curves are isomorphic "
    "over the algebraic closure"
)


def kummer_base(L: Poly, k: Optional[int] = None) -> Tuple[Poly, int]:
    """Write L = m_0(x^k).

    Args:
        L: Monic polynomial
        k: The exponent; defaults to the gcd of the exponents of L's
            nonconstant terms

    Raises:
        ValueError: If L is not a polynomial in x^k
    """
    if k is None:
        k = 0
        for i in range(1, L.degree + 1):
            if L.coeff(i):
                k = math.gcd(k, i)
    if k < 1 or any(L.coeff(i) for i in range(L.degree + 1) if i % k):
        raise ValueError(f"{L} is not a polynomial in x^{k}")
    return Poly(L.ring, L.coeffs[::k]), k


def expected_genus(e: int, k: int) -> int:
    """Genus of y^2 = ell(x^k): deg ell(x^k) is (d - k)/2 for odd e, (d - 2k)/2 for even e."""
    d = k * e
    degree = (d - k) // 2 if e % 2 else (d - 2 * k) // 2
    return (degree - 1) // 2


def _rescaled_decomposition(
    beta0: EtaleElement, k: int, rng: SplitMix64, box: int, first: bool
) -> Tuple[EtaleElement, Poly, Decomposition]:
    L0 = beta0.algebra
    gamma = L0.one() if first else random_element(L0, rng, box)
    if not gamma:
        raise SampleRejected("gamma = 0")
    m0 = char_poly(gamma**k * beta0)
    if not is_separable(m0):
        raise SampleRejected("not a generator")
    e = m0.degree
    t = Poly.x(m0.ring) if e % 2 else Poly(m0.ring, [1])
    decomposition = approx_sqrt(t * m0)
    ell = decomposition.ell
    n = (t * m0).degree // 2 - 1
    if ell.degree != n:
        raise SampleRejected(f"degree drop: deg ell = {ell.degree} != {n}")
    if not is_separable(ell) or not ell.coeff(0):
        raise SampleRejected("ell has a repeated or zero root")
    return gamma, m0, decomposition


def construct_kummer(
    m0: Poly, k: int, options: ConstructionOptions = ConstructionOptions()
) -> ConstructionReport:
    """Build y^2 = ell(x^k) with a new point of degree k e.

    Args:
        m0: Monic separable minimal polynomial of beta_0, degree e >= 3
        k: Exponent >= 2, prime to the characteristic; d = k e >= 9
        options: Seed, attempt cap and order bound

    Raises:
        PreconditionError: If a degree or characteristic hypothesis fails
        RetriesExhaustedError: If no rescaling gives a usable ell

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        report = construct_kummer(Poly(K, [-1, -1, 0, 0, 0, 0, 1]), k=4)  # x^6 - x - 1
        report.genus  # 3
        ```
    """
    field = m0.ring
    e = m0.degree
    p = field.characteristic
    if p == 2:
        raise PreconditionError(METHOD, "characteristic 2 has no approximate square roots")
    if e < 3:
        raise PreconditionError(METHOD, f"deg m0 = {e} is below 3")
    if k < 2 or (p and k % p == 0):
        raise PreconditionError(METHOD, f"k = {k} must be at least 2 and prime to {p}")
    if k * e < MIN_DEGREE:
        raise PreconditionError(METHOD, f"d = k e = {k * e} is below {MIN_DEGREE}")
    if not m0.is_monic():
        raise PreconditionError(METHOD, f"m0 = {m0} is not monic")
    if not is_separable(m0):
        raise InseparableInputError(m0, METHOD)
    if not m0.coeff(0):
        raise PreconditionError(METHOD, "beta0 must be nonzero")
    check_sampling_field(METHOD, field)
    L0 = EtaleAlgebra(m0, var="beta0")
    L = EtaleAlgebra(m0.substitute_power(k), var="theta")
    theta = L.gen()
    rng = SplitMix64(options.seed)
    beta0 = L0.gen()
    try:
        accepted, retries = _rescaled_decomposition(beta0, k, rng, 0, first=True), 0
    except SampleRejected as rejection:
        logging.debug("%s: unscaled beta0 rejected: %s", METHOD, rejection.reason)
        accepted, retries = run_trials(
            METHOD,
            options,
            lambda r, box: _rescaled_decomposition(beta0, k, r, box, first=False),
            rng,
        )
        retries += 1
    gamma, m0_scaled, decomposition = accepted
    h, ell = decomposition.h, decomposition.ell
    curve = HyperellipticModel.from_rhs(ell.substitute_power(k))
    x = gamma.as_poly()(theta**k) * theta
    extension = m0_scaled.substitute_power(k)
    point = certified_point(curve, (x, h(x**k)), extension, rng.fork(1))
    extra: Tuple[RationalPoint, ...] = ()
    if e % 2:
        extra = (RationalPoint((field.zero(), h(field.zero())), "(0, h(0))"),)
    extra += infinity_points(curve)
    genus = expected_genus(e, k)
    warnings: Tuple[str, ...] = (DEGENERATE_WARNING,) if ell.degree == 1 else ()
    check = None
    if genus == 1:
        check = check_genus_one(curve, extra, (point,), options.order_bound)
        warnings += check.warnings
    logging.info(
        "%s: accepted e=%d k=%d genus=%d after %d retries", METHOD, e, k, genus, retries
    )
    return ConstructionReport(
        method=METHOD,
        curve=curve,
        m=extension,
        h=h,
        points=(point,),
        extra_rational_points=extra,
        genus_expected=genus,
        degree=k * e,
        seed=options.seed,
        retries=retries,
        spec=ExtensionSpec.single(m0.substitute_power(k)),
        order_bound_result=check.order_bound if check else None,
        j_invariant=check.j_invariant if check else None,
        rescaling=gamma,
        warnings=warnings,
    )
