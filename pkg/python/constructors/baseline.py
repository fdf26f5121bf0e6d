"""Points with y = 0: y^2 = m f, or y^2 + y = m f in characteristic 2.

The roots alpha_i of m = prod m_i give the points (alpha_i, 0); f is a
random monic polynomial coprime to m of degree 2g + 1 - d, so the curve has
genus g and a rational point at infinity. Works in every characteristic.
"""

from typing import Optional

from absl import logging

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly, gcd, is_separable
from python.algebra.random_source import SplitMix64
from python.constructors.exceptions import PreconditionError
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.options import ConstructionOptions
from python.constructors.report import ConstructionReport, certified_point, infinity_points
from python.constructors.sampling import SampleRejected, coordinate_bound, run_trials
from python.curves.models import HyperellipticModel

METHOD = "baseline"


def _model(field: FieldDescriptor, R: Poly) -> HyperellipticModel:
    if field.characteristic == 2:
        return HyperellipticModel(Poly(field, [1]), R)
    return HyperellipticModel.from_rhs(R)


def construct_baseline(
    spec: ExtensionSpec,
    genus: Optional[int] = None,
    options: ConstructionOptions = ConstructionOptions(),
) -> ConstructionReport:
    """Build a genus-g curve through (alpha_i, 0) for each distinct L_i.

    Args:
        spec: Extensions; repeated entries are merged
        genus: g >= floor(d/2), where d is the degree of the merged spec;
            defaults to floor(d/2)
        options: Seed and attempt cap for the choice of f

    Raises:
        PreconditionError: If g < floor(d/2) or m is not separable
        RetriesExhaustedError: If no f gives a smooth curve
    """
    merged = spec.distinct()
    if merged != spec:
        logging.info("%s: merged repeated extensions of %s", METHOD, spec)
    field = merged.field
    d = merged.degree
    g = d // 2 if genus is None else genus
    if g < d // 2:
        raise PreconditionError(METHOD, f"genus {g} is below floor(d/2) = {d // 2}")
    m = Poly(field, [1])
    for poly, _ in merged.entries:
        m = m * poly
    if not is_separable(m):
        raise PreconditionError(METHOD, f"the extensions share a root: m = {m}")
    f_degree = 2 * g + 1 - d

    def trial(rng: SplitMix64, box: int) -> HyperellipticModel:
        bound = coordinate_bound(field, box)
        coeffs = [field.random_element(rng, bound) for _ in range(f_degree)] + [1]
        f = Poly(field, coeffs)
        if gcd(f, m).degree > 0:
            raise SampleRejected("f shares a root with m")
        curve = _model(field, m * f)
        certificate = curve.smoothness()
        if not certificate.smooth:
            raise SampleRejected(f"smoothness: {certificate.witness}")
        return curve

    rng = SplitMix64(options.seed)
    curve, retries = run_trials(METHOD, options, trial, rng)
    certificate_rng = rng.fork(1)
    points = []
    for algebra, (poly, _) in zip(merged.algebras(), merged.entries):
        coords = (algebra.gen(), algebra.zero())
        points.append(certified_point(curve, coords, poly, certificate_rng))
    logging.info("%s: accepted d=%d genus=%d after %d retries", METHOD, d, g, retries)
    return ConstructionReport(
        method=METHOD,
        curve=curve,
        m=m,
        points=tuple(points),
        extra_rational_points=infinity_points(curve),
        genus_expected=g,
        degree=d,
        seed=options.seed,
        retries=retries,
        spec=merged,
    )
