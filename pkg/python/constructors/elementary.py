"""A single new point from one approximate square root.

With f = x^(2n - d) m for the minimal polynomial m of alpha, write
f = h^2 - ell. The point (alpha, h(alpha)) lies on y^2 = ell. When ell has
too small a degree the curve is perturbed to y^2 = ell + 2 h c + c^2, which
still contains (alpha, h(alpha) + c); taking c = 2 k^2 makes the leading
coefficient 2c = (2k)^2 a square.
"""

import math
from typing import Optional, Tuple

from absl import logging

from python.algebra.etale import EtaleAlgebra
from python.algebra.poly import Poly, is_separable
from python.algebra.random_source import SplitMix64
from python.algebra.sqrt_decomp import Decomposition, approx_sqrt
from python.constructors.exceptions import PreconditionError
from python.constructors.options import ConstructionOptions
from python.constructors.report import ConstructionReport, certified_point, infinity_points
from python.constructors.sampling import SampleRejected, run_trials
from python.curves.models import HyperellipticModel

METHOD = "elementary"
MAX_HALF_DEGREE_STEPS = 4


def _padded(min_poly: Poly, n: int) -> Poly:
    return Poly.monomial(min_poly.ring, 2 * n - min_poly.degree) * min_poly


def _perturbation(
    decomposition: Decomposition, n: int, rng: SplitMix64, box: int
) -> Tuple[Poly, int]:
    k = rng.randint(1, box)
    c = decomposition.m.ring.coerce(2 * k * k)
    if not c:
        raise SampleRejected(f"c = 2*{k}^2 vanishes")
    h, ell = decomposition.h, decomposition.ell
    perturbed = ell + h.scale(2 * c) + Poly.constant(ell.ring, c * c)
    if perturbed.degree != n or not is_separable(perturbed):
        raise SampleRejected(f"inseparable remainder for c = {c}")
    return perturbed, 2 * k * k


def construct_elementary(
    min_poly: Poly,
    n: Optional[int] = None,
    options: ConstructionOptions = ConstructionOptions(),
) -> ConstructionReport:
    """Put the root of min_poly on a curve built from one square root.

    Args:
        min_poly: Monic separable minimal polynomial of alpha, degree d >= 2
        n: Half degree of f = x^(2n - d) min_poly, with 2n >= d; defaults to
            the smallest value allowed. It grows while the perturbed curve
            would have genus 0.
        options: Seed and attempt cap for the search over c

    Raises:
        PreconditionError: In characteristic 2, for d < 2, for 2n < d, or
            when f is a square or has zero derivative
        RetriesExhaustedError: If no c gives a separable curve
    """
    field = min_poly.ring
    d = min_poly.degree
    if field.characteristic == 2:
        raise PreconditionError(METHOD, "characteristic 2 has no approximate square roots")
    if d < 2:
        raise PreconditionError(METHOD, "a root of a linear polynomial is already K-rational")
    n = n if n is not None else math.ceil(d / 2)
    if 2 * n < d:
        raise PreconditionError(METHOD, f"2n = {2 * n} is below d = {d}")
    algebra = EtaleAlgebra(min_poly, var="alpha")
    alpha = algebra.gen()
    rng = SplitMix64(options.seed)
    for _ in range(MAX_HALF_DEGREE_STEPS):
        f = _padded(min_poly, n)
        if not f.derivative():
            raise PreconditionError(METHOD, f"f = {f} has zero derivative")
        decomposition = approx_sqrt(f)
        h, ell = decomposition.h, decomposition.ell
        if not ell:
            raise PreconditionError(METHOD, f"f = {f} is a square")
        if ell.degree >= 3 and is_separable(ell):
            curve = HyperellipticModel.from_rhs(ell)
            coords = (alpha, h(alpha))
            retries, c = 0, 0
            break
        if (n - 1) // 2 >= 1:
            (ell, c), retries = run_trials(
                METHOD, options, lambda r, box: _perturbation(decomposition, n, r, box), rng
            )
            curve = HyperellipticModel.from_rhs(ell)
            coords = (alpha, h(alpha) + c)
            break
        logging.info("%s: genus 0 at n=%d; retrying with n=%d", METHOD, n, n + 1)
        n += 1
    else:
        raise PreconditionError(METHOD, f"no positive genus up to n = {n}")
    point = certified_point(curve, coords, min_poly, rng.fork(1))
    logging.info("%s: accepted d=%d n=%d genus=%d c=%s", METHOD, d, n, curve.genus, c)
    return ConstructionReport(
        method=METHOD,
        curve=curve,
        m=min_poly,
        h=h,
        points=(point,),
        extra_rational_points=infinity_points(curve),
        genus_expected=(ell.degree - 1) // 2,
        degree=d,
        seed=options.seed,
        retries=retries,
        rescaling=c or None,
    )
