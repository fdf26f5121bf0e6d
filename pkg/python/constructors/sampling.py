"""Seeded rejection sampling of generators beta_i of the extensions L_i.

Coordinates are drawn from integer boxes [-B, B] in the power basis of each
L_i = K[x]/(m_i), the radius doubling every ``growth_interval`` rejections.
A sample is kept when every char_poly(beta_i) is separable of degree
d_i = [L_i : K], so that beta_i generates L_i, and when the product m of
the characteristic polynomials is separable, so that no two beta_i are
conjugate.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, TypeVar

from absl import logging

from python.algebra.etale import EtaleAlgebra, EtaleElement, char_poly, trace
from python.algebra.fields import FieldDescriptor, FieldKind
from python.algebra.poly import Poly, is_separable
from python.algebra.random_source import SplitMix64
from python.constructors.exceptions import PreconditionError, RetriesExhaustedError
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.options import ConstructionOptions

T = TypeVar("T")

SMALL_FIELD_ORDER = 3


class SampleRejected(Exception):
    """Raised inside a trial to reject the current sample.

    Attributes:
        reason: Short description logged at DEBUG level
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


@dataclass(frozen=True)
class SampledGenerator:
    """A generator beta of one slot of the extension spec.

    Attributes:
        entry: Index of the extension spec entry
        algebra: K[x]/(m_i)
        beta: The sampled element
        chi: Its characteristic polynomial
    """

    entry: int
    algebra: EtaleAlgebra
    beta: EtaleElement
    chi: Poly


@dataclass(frozen=True)
class GeneratorSample:
    """One accepted draw: a generator per slot and m = prod chi_i."""

    generators: Tuple[SampledGenerator, ...]
    m: Poly


def check_sampling_field(method: str, field: FieldDescriptor) -> None:
    """Refuse tiny finite fields and warn about the other finite ones.

    Raises:
        PreconditionError: Over fields with at most SMALL_FIELD_ORDER elements
    """
    if not field.is_finite:
        return
    if field.order <= SMALL_FIELD_ORDER:
        raise PreconditionError(
            method, f"{field} is too small for rejection sampling; use the finite_lab search"
        )
    logging.warning(
        "%s over the finite field %s: rejection sampling may exhaust the field", method, field
    )


def coordinate_bound(field: FieldDescriptor, box: int) -> int:
    """random_element bound for a box radius; F_p(t) reads it as a degree."""
    if field.kind == FieldKind.RATIONAL_FUNCTION:
        return box.bit_length()
    return box


def random_element(algebra: EtaleAlgebra, rng: SplitMix64, box: int) -> EtaleElement:
    field = algebra.field
    bound = coordinate_bound(field, box)
    return algebra.unflatten([field.random_element(rng, bound) for _ in range(algebra.dimension)])


class GeneratorSampler:
    """Draws generators for every slot of an ExtensionSpec.

    Example Usage:
        ```python
        sampler = GeneratorSampler(spec, trace_zero=True)
        sample = sampler.draw(SplitMix64(0), box=2)  # may raise SampleRejected
        sample.m.coeff(spec.degree - 1)  # 0
        ```
    """

    def __init__(self, spec: ExtensionSpec, trace_zero: bool = False, nonzero: bool = False):
        """Initialize the sampler.

        Args:
            spec: The extensions to sample from
            trace_zero: Force sum Tr(beta_i) = 0, so m has no x^(d-1) term
            nonzero: Reject samples with some beta_i = 0
        """
        self.spec = spec
        self.trace_zero = trace_zero
        self.nonzero = nonzero
        self._algebras = spec.algebras()
        self._slots = [index for index, _ in spec.slots()]
        self._pivots: Dict[int, Optional[Tuple[int, EtaleElement, object]]] = {}

    def _pivot(self, index: int) -> Optional[Tuple[int, EtaleElement, object]]:
        """A basis element of L_index with nonzero trace, with that trace."""
        if index not in self._pivots:
            self._pivots[index] = None
            for j, e in enumerate(self._algebras[index].basis()):
                t = trace(e)
                if t:
                    self._pivots[index] = (j, e, t)
                    break
        return self._pivots[index]

    def _balance_traces(self, betas: List[EtaleElement]) -> None:
        total = self.spec.field.zero()
        for beta in betas:
            total = total + trace(beta)
        if not total:
            return
        for position in reversed(range(len(betas))):
            pivot = self._pivot(self._slots[position])
            if pivot is not None:
                _, e, t = pivot
                betas[position] = betas[position] - e * (total / t)
                return
        raise SampleRejected("no basis element with nonzero trace")

    def draw(self, rng: SplitMix64, box: int) -> GeneratorSample:
        """One draw from the box of radius box.

        Raises:
            SampleRejected: With the rejection reason
        """
        betas = [random_element(self._algebras[index], rng, box) for index in self._slots]
        if self.trace_zero:
            self._balance_traces(betas)
        generators = []
        m = Poly(self.spec.field, [1])
        for index, beta in zip(self._slots, betas):
            if self.nonzero and not beta:
                raise SampleRejected("zero generator")
            chi = char_poly(beta)
            if not is_separable(chi):
                raise SampleRejected("not a generator")
            generators.append(SampledGenerator(index, self._algebras[index], beta, chi))
            m = m * chi
        if not is_separable(m):
            raise SampleRejected("coincident characteristic polynomials")
        return GeneratorSample(tuple(generators), m)


def run_trials(
    method: str,
    options: ConstructionOptions,
    trial: Callable[[SplitMix64, int], T],
    rng: Optional[SplitMix64] = None,
) -> Tuple[T, int]:
    """Call trial(rng, box) until it returns instead of raising SampleRejected.

    Returns:
        The accepted value and the number of rejected attempts before it

    Raises:
        RetriesExhaustedError: After options.max_attempts rejections
    """
    rng = rng or SplitMix64(options.seed)
    last_reason = ""
    for attempt in range(options.max_attempts):
        try:
            return trial(rng, options.box_at(attempt)), attempt
        except SampleRejected as rejection:
            last_reason = rejection.reason
            logging.debug("%s: attempt %d rejected: %s", method, attempt, rejection.reason)
    raise RetriesExhaustedError(method, options.max_attempts, last_reason)
