"""New-point censuses over F_{q^d} by Moebius inclusion-exclusion.

The subfields of F_{q^d} containing F_q are the F_{q^e} with e | d, so the
points that are new over F_{q^d} number sum_{e | d} mu(d/e) N_e, and they
fall into closed points of degree d, d at a time.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List

import sympy
from absl import logging
from sympy.functions.combinatorial.numbers import mobius

from python.curves.models import HyperellipticModel
from python.finite_lab.counting import count_points
from python.finite_lab.options import CountingOptions


def within_weil_bounds(count: int, q: int, genus: int, e: int) -> bool:
    """|N_e - (q^e + 1)| <= 2g q^(e/2), compared after squaring."""
    deviation = count - (q**e + 1)
    return deviation * deviation <= 4 * genus * genus * q**e


@dataclass(frozen=True)
class CensusReport:
    """Point counts of one curve over the subfields of F_{q^d}.

    Attributes:
        q: Size of the base field
        d: Degree of the top field over F_q
        genus: Genus of the curve
        counts: N_e = |X(F_{q^e})| for every e dividing d
        new_point_count: Points of X(F_{q^d}) lying in no proper subfield
        closed_point_count: Closed points of degree exactly d
    """

    q: int
    d: int
    genus: int
    counts: Dict[int, int] = field(default_factory=dict)
    new_point_count: int = 0
    closed_point_count: int = 0

    def new_count_over(self, e: int) -> int:
        """Points new over F_{q^e}, for any e dividing d."""
        if self.d % e:
            raise ValueError(f"{e} does not divide {self.d}")
        return sum(int(mobius(e // k)) * self.counts[k] for k in sympy.divisors(e))

    def weil_slack(self, e: int) -> float:
        """2g q^(e/2) - |N_e - (q^e + 1)|; for display only."""
        deviation = abs(self.counts[e] - (self.q**e + 1))
        return 2 * self.genus * math.sqrt(self.q**e) - deviation

    @property
    def weil_consistent(self) -> bool:
        return all(
            within_weil_bounds(n, self.q, self.genus, e) for e, n in self.counts.items()
        )


def new_point_census(
    curve: HyperellipticModel, d: int, options: CountingOptions = CountingOptions()
) -> CensusReport:
    """Count points over every F_{q^e} with e | d and isolate the new ones.

    Args:
        curve: Smooth model over F_q
        d: Degree of the extension
        options: Passed to count_points

    Returns:
        CensusReport with the Moebius count and the closed-point count

    Raises:
        FieldTooLargeError: If q^d exceeds options.max_field_size
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    q = curve.field.order
    counts = {e: count_points(curve, e, options) for e in sympy.divisors(d)}
    new = sum(int(mobius(d // e)) * n for e, n in counts.items())
    if new < 0 or new % d:
        raise ArithmeticError(f"{new} new points over F_{q}^{d} is not a multiple of {d}")
    report = CensusReport(q, d, curve.genus, counts, new, new // d)
    if not report.weil_consistent:
        logging.warning("Counts %s of %s violate the Weil bounds", counts, curve)
    logging.debug("Census of %s over F_%d^%d: %d new points", curve, q, d, new)
    return report


def genus_one_counts(q: int, n1: int, e_max: int) -> List[int]:
    """N_1, ..., N_{e_max} of a genus-one curve over F_q from N_1 alone.

    With a = q + 1 - N_1 the Frobenius power sums obey s_e = a s_{e-1} - q s_{e-2},
    s_0 = 2, s_1 = a, and N_e = q^e + 1 - s_e.

    Example Usage:
        ```python
        genus_one_counts(2, 1, 4)  # [1, 5, 13, 25]
        ```
    """
    if e_max < 1:
        raise ValueError(f"e_max must be positive, got {e_max}")
    a = q + 1 - n1
    previous, current = 2, a
    counts = []
    for e in range(1, e_max + 1):
        counts.append(q**e + 1 - current)
        previous, current = current, a * current - q * previous
    return counts
