"""Curves with points (beta, beta^n) from a trace-zero m, in any characteristic.

If m = x^(2n) + a_(2n-2) x^(2n-2) + ... + a_0 has no x^(2n-1) term then,
with Q = a_(2n-2) x^(n-2) + ... + a_n and R = -(a_(n-1) x^(n-1) + ... + a_0),
every root beta of m gives the point (beta, beta^n) on y^2 + Q y = R. Odd
d uses x m instead, which adds the rational point (0, 0). The generators
are sampled with sum Tr(beta_i) = 0 so that m has the required shape.
"""

from typing import Tuple

from absl import logging

from python.algebra.poly import Poly
from python.algebra.random_source import SplitMix64
from python.constructors.exceptions import PreconditionError
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
    GeneratorSample,
    GeneratorSampler,
    SampleRejected,
    check_sampling_field,
    run_trials,
)
from python.curves.models import HyperellipticModel

METHOD = "tracezero"
MIN_DEGREE = 7


def tracezero_model(m: Poly) -> Tuple[HyperellipticModel, int]:
    """The curve y^2 + Q y = R for m, and the exponent n of the points (beta, beta^n).

    Raises:
        ValueError: If m is not monic with vanishing x^(d-1) coefficient, or
            if Q or R falls short of degree n - 2 or n - 1
    """
    field = m.ring
    if not m.is_monic() or m.coeff(m.degree - 1):
        raise ValueError(f"m must be monic without an x^(d-1) term, got {m}")
    M = m if m.degree % 2 == 0 else m * Poly.x(field)
    n = M.degree // 2
    Q = Poly(field, [M.coeff(k) for k in range(n, 2 * n - 1)])
    R = -Poly(field, [M.coeff(k) for k in range(n)])
    if Q.degree != n - 2 or R.degree != n - 1:
        raise ValueError(f"degree drop: deg Q = {Q.degree}, deg R = {R.degree}, n = {n}")
    return HyperellipticModel(Q, R), n


def construct_tracezero(
    spec: ExtensionSpec, options: ConstructionOptions = ConstructionOptions()
) -> ConstructionReport:
    """Build a genus floor((d - 5)/2) curve with points (beta_i, beta_i^n).

    Args:
        spec: Extensions L_i with multiplicities; d >= 7, any characteristic
        options: Seed, attempt cap and order bound

    Raises:
        PreconditionError: For d < 7 or over a tiny field
        RetriesExhaustedError: If no sample passes the smoothness certificate
    """
    field = spec.field
    d = spec.degree
    if d < MIN_DEGREE:
        raise PreconditionError(METHOD, f"total degree {d} is below {MIN_DEGREE}")
    check_sampling_field(METHOD, field)
    sampler = GeneratorSampler(spec, trace_zero=True, nonzero=d % 2 == 1)

    def trial(rng: SplitMix64, box: int) -> Tuple[GeneratorSample, HyperellipticModel, int]:
        sample = sampler.draw(rng, box)
        try:
            curve, n = tracezero_model(sample.m)
        except ValueError as e:
            raise SampleRejected(str(e)) from e
        certificate = curve.smoothness()
        if not certificate.smooth:
            raise SampleRejected(f"smoothness: {certificate.witness}")
        return sample, curve, n

    rng = SplitMix64(options.seed)
    (sample, curve, n), retries = run_trials(METHOD, options, trial, rng)
    certificate_rng = rng.fork(1)
    points = tuple(
        certified_point(curve, (g.beta, g.beta**n), spec.entries[g.entry][0], certificate_rng)
        for g in sample.generators
    )
    extra = infinity_points(curve)
    if d % 2:
        extra += (RationalPoint((field.zero(), field.zero()), "(0, 0)"),)
    genus = (d - 5) // 2
    check = check_genus_one(curve, extra, points, options.order_bound) if genus == 1 else None
    logging.info("%s: accepted d=%d genus=%d after %d retries", METHOD, d, genus, retries)
    return ConstructionReport(
        method=METHOD,
        curve=curve,
        m=sample.m,
        points=points,
        extra_rational_points=extra,
        genus_expected=genus,
        degree=d,
        seed=options.seed,
        retries=retries,
        spec=spec,
        order_bound_result=check.order_bound if check else None,
        j_invariant=check.j_invariant if check else None,
        warnings=check.warnings if check else (),
    )
