"""Plane cubics through (beta^-2 : beta^-3 : 1) for a degree-9 trace-zero m."""

from typing import Tuple

from absl import logging

from python.algebra.random_source import SplitMix64
from python.constructors.exceptions import PreconditionError
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.genus_one import check_genus_one
from python.constructors.options import ConstructionOptions
from python.constructors.report import ConstructionReport, RationalPoint, certified_point
from python.constructors.sampling import (
    GeneratorSample,
    GeneratorSampler,
    SampleRejected,
    check_sampling_field,
    run_trials,
)
from python.curves.models import PlaneCubic

METHOD = "cubic9"
DEGREE = 9
CORNER = (1, 0, 0)


def construct_cubic9(
    spec: ExtensionSpec, options: ConstructionOptions = ConstructionOptions()
) -> ConstructionReport:
    """Build an elliptic curve with new points over every L_i, sum d_i t_i = 9.

    m = x^9 + a7 x^7 + ... + a0 gives the cubic z^3 + a7 x z^2 + a6 y z^2 +
    a5 x^2 z + a4 x y z + a3 y^2 z + a2 x^2 y + a1 x y^2 + a0 y^3, which passes
    through (1 : 0 : 0) and through (beta^-2 : beta^-3 : 1) for each root beta.

    Args:
        spec: Extensions with total degree 9; any characteristic
        options: Seed, attempt cap and order bound

    Raises:
        PreconditionError: If the total degree is not 9 or the field is tiny
        RetriesExhaustedError: If no sample gives a smooth cubic
    """
    field = spec.field
    if spec.degree != DEGREE:
        raise PreconditionError(METHOD, f"total degree must be {DEGREE}, got {spec.degree}")
    check_sampling_field(METHOD, field)
    sampler = GeneratorSampler(spec, trace_zero=True, nonzero=True)

    def trial(rng: SplitMix64, box: int) -> Tuple[GeneratorSample, PlaneCubic]:
        sample = sampler.draw(rng, box)
        cubic = PlaneCubic.from_degree_nine(sample.m)
        if not sample.m.coeff(2) and not sample.m.coeff(5):
            raise SampleRejected("a2 = a5 = 0: singular at (1 : 0 : 0)")
        certificate = cubic.smoothness(seed=rng.randbelow(1 << 32))
        if not certificate.smooth:
            raise SampleRejected(f"smoothness: {certificate.witness}")
        return sample, cubic

    rng = SplitMix64(options.seed)
    (sample, cubic), retries = run_trials(METHOD, options, trial, rng)
    certificate_rng = rng.fork(1)
    points = []
    for g in sample.generators:
        inverse = g.beta.inverse()
        coords = (inverse**2, inverse**3, g.algebra.one())
        points.append(certified_point(cubic, coords, spec.entries[g.entry][0], certificate_rng))
    corner = tuple(field.coerce(c) for c in CORNER)
    extra = (RationalPoint(corner, "(1 : 0 : 0)"),)
    check = check_genus_one(cubic, extra, points, options.order_bound)
    logging.info("%s: accepted after %d retries", METHOD, retries)
    return ConstructionReport(
        method=METHOD,
        curve=cubic,
        m=sample.m,
        points=tuple(points),
        extra_rational_points=extra,
        genus_expected=1,
        degree=DEGREE,
        seed=options.seed,
        retries=retries,
        spec=spec,
        order_bound_result=check.order_bound,
        j_invariant=check.j_invariant,
        warnings=check.warnings,
    )
