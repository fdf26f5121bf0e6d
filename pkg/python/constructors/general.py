"""Curves y^2 = ell(x) through special points over prescribed extensions.

Sample generators beta_i of the L_i, let m be the product of their
characteristic polynomials and write m = h^2 - ell (or x m = h^2 - ell for
odd d). Every beta_i then gives the point (beta_i, h(beta_i)) on y^2 = ell.
A sample is accepted when ell has the generic degree n = floor((d - 1)/2)
and is separable.
"""

from typing import Tuple

from absl import logging

from python.algebra.poly import is_separable
from python.algebra.random_source import SplitMix64
from python.algebra.sqrt_decomp import Decomposition, decompose
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

METHOD = "general"
MIN_DEGREE = 7


def genus_for_degree(d: int) -> int:
    """Genus of the general construction for total degree d = 4q + j.

    q - 1 when j != 3 and q when j = 3.
    """
    q, j = divmod(d, 4)
    return q if j == 3 else q - 1


def construct_general(
    spec: ExtensionSpec, options: ConstructionOptions = ConstructionOptions()
) -> ConstructionReport:
    """Build y^2 = ell with a special new point over each L_i.

    Args:
        spec: Extensions L_i with multiplicities; d = sum d_i t_i >= 7
        options: Seed, attempt cap and order bound

    Returns:
        ConstructionReport with one point (beta_i, h(beta_i)) per slot

    Raises:
        PreconditionError: In characteristic 2, for d < 7 or over a tiny field
        RetriesExhaustedError: If no sample is accepted

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        report = construct_general(ExtensionSpec.single(Poly(K, [-2, 0, 0, 0, 0, 0, 0, 1])))
        report.genus  # 1
        ```
    """
    field = spec.field
    d = spec.degree
    if field.characteristic == 2:
        raise PreconditionError(METHOD, "characteristic 2; use construct_tracezero")
    if d < MIN_DEGREE:
        raise PreconditionError(METHOD, f"total degree {d} is below {MIN_DEGREE}")
    check_sampling_field(METHOD, field)
    n = (d - 1) // 2
    sampler = GeneratorSampler(spec)

    def trial(rng: SplitMix64, box: int) -> Tuple[GeneratorSample, Decomposition]:
        sample = sampler.draw(rng, box)
        decomposition = decompose(sample.m)
        if decomposition.ell.degree != n:
            raise SampleRejected(f"degree drop: deg ell = {decomposition.ell.degree} != {n}")
        if not is_separable(decomposition.ell):
            raise SampleRejected("inseparable remainder")
        return sample, decomposition

    rng = SplitMix64(options.seed)
    (sample, decomposition), retries = run_trials(METHOD, options, trial, rng)
    h, ell = decomposition.h, decomposition.ell
    curve = HyperellipticModel.from_rhs(ell)
    certificate_rng = rng.fork(1)
    points = tuple(
        certified_point(curve, (g.beta, h(g.beta)), spec.entries[g.entry][0], certificate_rng)
        for g in sample.generators
    )
    extra: Tuple[RationalPoint, ...] = ()
    if d % 2:
        extra = (RationalPoint((field.zero(), h(field.zero())), "(0, h(0))"),)
    extra += infinity_points(curve)
    genus = genus_for_degree(d)
    check = check_genus_one(curve, extra, points, options.order_bound) if genus == 1 else None
    logging.info("%s: accepted d=%d genus=%d after %d retries", METHOD, d, genus, retries)
    return ConstructionReport(
        method=METHOD,
        curve=curve,
        m=sample.m,
        h=h,
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
