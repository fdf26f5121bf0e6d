"""Order and j-invariant checks for genus-one construction outputs."""

from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

from absl import logging

from python.analysis.exceptions import NoRationalPointError
from python.analysis.invariants import j_invariant
from python.analysis.reduction import CubicReduction, QuarticReduction
from python.analysis.weierstrass import OrderBoundResult, order_bound_check
from python.constructors.report import ConstructedPoint, RationalPoint
from python.curves.models import HyperellipticModel, PlaneCubic


@dataclass(frozen=True)
class GenusOneCheck:
    """Outcome of reducing a genus-one output to Weierstrass form.

    Attributes:
        order_bound: Order of the image of the first new point, bounded by N
        j_invariant: j of the curve, when it could be computed
        warnings: Why a part of the check was skipped
    """

    order_bound: Optional[OrderBoundResult] = None
    j_invariant: Any = None
    warnings: Tuple[str, ...] = ()


def _hyperelliptic_reduction(
    curve: HyperellipticModel, rational_points: Sequence[RationalPoint]
) -> QuarticReduction:
    F = curve.completed_square()
    if F.degree == 3 or curve.field.is_square(F.lc):
        return QuarticReduction(F)
    for point in rational_points:
        if point.coords is not None:
            x0, y0 = point.coords[0], point.coords[1]
            return QuarticReduction(F, (x0, y0 + curve.Q(x0) / 2))
    raise NoRationalPointError(str(curve))


def check_genus_one(
    curve: Any,
    rational_points: Sequence[RationalPoint],
    points: Sequence[ConstructedPoint],
    N: int,
) -> GenusOneCheck:
    """Bound the order of points[0] on the Jacobian and compute j.

    Args:
        curve: A genus-one HyperellipticModel or PlaneCubic
        rational_points: Candidate base points for the reduction
        points: New points; the first one is checked
        N: Largest multiple tried

    Returns:
        GenusOneCheck; skipped parts are listed as warnings
    """
    if curve.genus != 1 or curve.field.characteristic == 2:
        return GenusOneCheck(warnings=("order bound needs genus one in odd characteristic",))
    warnings = []
    j = None
    try:
        if isinstance(curve, PlaneCubic):
            base = next(p.coords for p in rational_points if p.coords is not None)
            reduction: Any = CubicReduction(curve, base)
            j = reduction.curve.j_invariant
            image = reduction.image(points[0].coords)
        else:
            j = j_invariant(curve.completed_square()).j
            reduction = _hyperelliptic_reduction(curve, rational_points)
            x, y = points[0].coords[0], points[0].coords[1]
            image = reduction.image(x, y + curve.Q(x) / 2)
    except NoRationalPointError:
        warnings.append("no K-rational base point; order bound skipped")
        return GenusOneCheck(j_invariant=j, warnings=tuple(warnings))
    except (ValueError, ArithmeticError) as e:
        warnings.append(f"order bound skipped: {e}")
        return GenusOneCheck(j_invariant=j, warnings=tuple(warnings))
    result = order_bound_check(reduction.curve, image, N)
    if not result.exceeds_bound:
        warnings.append(f"first new point has {result}")
    logging.debug("genus-one check: %s, j = %s", result, j)
    return GenusOneCheck(order_bound=result, j_invariant=j, warnings=tuple(warnings))
