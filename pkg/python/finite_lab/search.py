"""Search for a curve of genus g over F_q with a new point over F_{q^d}.

Candidates are double covers y^2 + Q y = R whose coefficient codes run
through graded lexicographic order: by total code weight, then
lexicographically with the constant terms first. Q = 0 outside
characteristic 2. Censuses of a batch of candidates are taken in parallel
and the first success in enumeration order wins.
"""

import functools
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Optional, Sequence, Tuple

from absl import logging

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.algebra.random_source import SplitMix64
from python.curves.models import HyperellipticModel
from python.finite_lab.census import CensusReport, new_point_census
from python.finite_lab.counting import element_from_code, lift_curve
from python.finite_lab.exceptions import FieldTooLargeError, SearchExhaustedError
from python.finite_lab.extension import base_field, element_degree, find_root
from python.finite_lab.options import MAX_SEARCH_GENUS, SEARCH_FIELD_LIMIT, CountingOptions


class SearchStrategy(Enum):
    """Order in which candidate curves are visited."""

    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass(frozen=True)
class NewPoint:
    """A point of X(F_{q^d}) lying in no proper subfield.

    Attributes:
        x: x-coordinate in F_{q^d}, None for a point at infinity
        y: y-coordinate in F_{q^d}, None for a point at infinity
        degree: Degree over F_q of the field generated by the coordinates
    """

    x: Any
    y: Any
    degree: int

    @property
    def at_infinity(self) -> bool:
        return self.x is None


@dataclass(frozen=True)
class SearchResult:
    """A witness curve with one explicit new point.

    Attributes:
        curve: The curve found
        point: A new point over F_{q^d}
        census: Point counts over the subfields of F_{q^d}
        examined: Smooth candidates censused up to and including the witness
    """

    curve: HyperellipticModel
    point: NewPoint
    census: CensusReport
    examined: int


def graded_lex_vectors(length: int, q: int) -> Iterator[Tuple[int, ...]]:
    """All vectors in [0, q)^length, by total weight, then lexicographically."""
    for weight in range(length * (q - 1) + 1):
        yield from _vectors_of_weight(length, weight, q)


def _vectors_of_weight(length: int, weight: int, q: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        if weight == 0:
            yield ()
        return
    lowest = max(0, weight - (length - 1) * (q - 1))
    for first in range(lowest, min(weight, q - 1) + 1):
        for rest in _vectors_of_weight(length - 1, weight - first, q):
            yield (first,) + rest


def _code_length(field: FieldDescriptor, genus: int) -> int:
    rhs = 2 * genus + 3
    return rhs + genus + 2 if field.characteristic == 2 else rhs


def model_from_codes(
    field: FieldDescriptor, genus: int, codes: Sequence[int]
) -> Optional[HyperellipticModel]:
    """The smooth genus-g model with these coefficient codes, or None.

    In characteristic 2 the first g + 2 codes give Q and the rest give R;
    otherwise all codes give R.
    """
    elements = [element_from_code(field, c) for c in codes]
    if field.characteristic == 2:
        Q = Poly(field, elements[: genus + 2])
        R = Poly(field, elements[genus + 2 :])
        if not Q:
            return None
        curve = HyperellipticModel(Q, R)
    else:
        R = Poly(field, elements)
        if R.degree < 2 * genus + 1:
            return None
        curve = HyperellipticModel.from_rhs(R)
    if curve.genus != genus or not curve.smoothness().smooth:
        return None
    return curve


def candidate_models(
    field: FieldDescriptor,
    genus: int,
    strategy: SearchStrategy = SearchStrategy.EXHAUSTIVE,
    seed: int = 0,
    max_random: int = 2000,
) -> Iterator[HyperellipticModel]:
    """Smooth genus-g double covers over field in the order of the strategy."""
    q = field.order
    length = _code_length(field, genus)
    if strategy == SearchStrategy.EXHAUSTIVE:
        vectors: Iterator[Tuple[int, ...]] = graded_lex_vectors(length, q)
    else:
        rng = SplitMix64(seed)
        vectors = (
            tuple(rng.randbelow(q) for _ in range(length)) for _ in range(max_random)
        )
    for codes in vectors:
        curve = model_from_codes(field, genus, codes)
        if curve is not None:
            yield curve


def find_new_point(curve: HyperellipticModel, d: int, seed: int = 0) -> Optional[NewPoint]:
    """The first new point over F_{q^d}, scanning x in code order.

    Each y is a root of y^2 + Q(x) y - R(x) found by equal-degree splitting.
    Points at infinity are new only for d = 2 when the two of them are conjugate.
    """
    q = curve.field.order
    model = lift_curve(curve, d)
    target = model.field
    rng = SplitMix64(seed)
    for code in range(target.order):
        x = element_from_code(target, code)
        qx, rx = model.Q(x), model.R(x)
        y = find_root(Poly(target, [-rx, qx, 1]), target, rng)
        if y is None:
            continue
        x_degree = element_degree(x, q, d)
        for root in (y, -qx - y):
            degree = math.lcm(x_degree, element_degree(root, q, d))
            if degree == d:
                return NewPoint(x, root, d)
    if d == 2 and curve.rational_points_at_infinity() == 0:
        if model.rational_points_at_infinity() == 2:
            return NewPoint(None, None, 2)
    return None


def search_curve_with_new_point(
    q: int,
    genus: int,
    d: int,
    strategy: str = "exhaustive",
    seed: int = 0,
    options: CountingOptions = CountingOptions(),
) -> SearchResult:
    """First candidate curve of genus g over F_q with a new point over F_{q^d}.

    Args:
        q: Prime power
        genus: 1 <= g <= 3
        d: Degree of the extension
        strategy: "exhaustive" (graded lexicographic) or "random"
        seed: Seed of the random strategy and of the root finder
        options: Counting options; max_workers candidates are censused at once

    Returns:
        SearchResult with the curve, a new point and its census

    Raises:
        FieldTooLargeError: If q^d exceeds the search limit of 2^20
        SearchExhaustedError: If no candidate has a new point
        ValueError: For a genus outside [1, 3] or an unknown strategy

    Example Usage:
        ```python
        result = search_curve_with_new_point(2, 1, 4)
        result.census.new_point_count  # > 0
        ```
    """
    field = base_field(q)
    if not 1 <= genus <= MAX_SEARCH_GENUS:
        raise ValueError(f"genus must lie in [1, {MAX_SEARCH_GENUS}], got {genus}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if q**d > SEARCH_FIELD_LIMIT:
        raise FieldTooLargeError(q**d, SEARCH_FIELD_LIMIT)
    order = SearchStrategy(strategy.lower())
    candidates = candidate_models(field, genus, order, seed, options.max_random_candidates)
    census_of = functools.partial(new_point_census, d=d, options=options)
    examined = 0
    with ThreadPoolExecutor(max_workers=options.max_workers) as executor:
        while True:
            batch = list(itertools.islice(candidates, options.max_workers))
            if not batch:
                break
            censuses = list(executor.map(census_of, batch))
            for curve, census in zip(batch, censuses):
                examined += 1
                if census.new_point_count == 0:
                    continue
                point = find_new_point(curve, d, seed)
                if point is None:
                    raise ArithmeticError(f"census of {curve} promises a new point, none found")
                logging.info(
                    "Found %s over F_%d with %d new points over F_%d^%d after %d candidates",
                    curve,
                    q,
                    census.new_point_count,
                    q,
                    d,
                    examined,
                )
                return SearchResult(curve, point, census, examined)
    raise SearchExhaustedError(q, genus, d, examined)
