"""Point counts of smooth double covers y^2 + Q(x) y = R(x) over F_{q^e}.

Affine points are counted one x-value at a time. In odd characteristic the
number of y is 1 + chi(F(x)) for F = R + Q^2/4. In characteristic 2 the
substitution y = Q(x) w turns the equation into w^2 + w = R/Q^2, solvable
exactly when the absolute trace of R/Q^2 vanishes; where Q(x) = 0 the unique
square root of R(x) gives one point. Points at infinity come from the smooth
model: one for odd branch degree, two or none for even branch degree.
"""

import functools
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any

from absl import logging

from python.algebra.fields import FieldDescriptor
from python.curves.models import HyperellipticModel
from python.finite_lab.exceptions import FieldTooLargeError, NotApplicableError
from python.finite_lab.extension import FieldEmbedding, extension_field
from python.finite_lab.options import CountingOptions


def element_from_code(field: FieldDescriptor, code: int) -> Any:
    """The element whose base-p digits are code, matching field.elements() order."""
    coeffs = []
    for _ in range(field.n):
        code, digit = divmod(code, field.p)
        coeffs.append(digit)
    return field.coerce(coeffs)


def lift_curve(curve: HyperellipticModel, e: int) -> HyperellipticModel:
    """The same model with coefficients embedded in F_{q^e}."""
    target = extension_field(curve.field, e)
    if target == curve.field:
        return curve
    return curve.map_field(target, FieldEmbedding.between(curve.field, target))


def _count_chunk(model: HyperellipticModel, start: int, stop: int) -> int:
    field = model.field
    total = 0
    if model.characteristic == 2:
        for code in range(start, stop):
            x = element_from_code(field, code)
            qx = model.Q(x)
            if not qx:
                total += 1
            elif not field.absolute_trace(model.R(x) / (qx * qx)):
                total += 2
        return total
    F = model.completed_square()
    half = (field.order - 1) // 2
    for code in range(start, stop):
        value = F(element_from_code(field, code))
        if not value:
            total += 1
        elif value**half == 1:
            total += 2
    return total


def count_points(
    curve: HyperellipticModel, e: int = 1, options: CountingOptions = CountingOptions()
) -> int:
    """Number of points of the smooth projective model over F_{q^e}.

    Args:
        curve: Smooth model over a finite field F_q
        e: Degree of the extension to count over
        options: Field size limit and thread count

    Returns:
        |X(F_{q^e})|

    Raises:
        FieldTooLargeError: If q^e exceeds options.max_field_size
        NotApplicableError: If the model is not a double cover over a finite field
        ValueError: If the model is singular

    Example Usage:
        ```python
        F2 = FieldDescriptor.prime(2)
        curve = HyperellipticModel(Poly(F2, [1]), Poly(F2, [1, 1, 0, 1]))
        count_points(curve, 2)  # 5
        ```
    """
    if not isinstance(curve, HyperellipticModel):
        raise NotApplicableError(f"point counting needs a double cover, got {type(curve).__name__}")
    if not curve.field.is_finite:
        raise NotApplicableError(f"point counting needs a finite field, got {curve.field}")
    size = curve.field.order**e
    if size > options.max_field_size:
        raise FieldTooLargeError(size, options.max_field_size)
    certificate = curve.smoothness()
    if not certificate.smooth:
        raise ValueError(f"{curve} is singular ({certificate.method}: {certificate.witness})")
    model = lift_curve(curve, e)
    step = options.chunk_size
    task = functools.partial(_count_chunk, model)
    affine = 0
    with ThreadPoolExecutor(max_workers=options.max_workers) as executor:
        futures = [
            executor.submit(task, start, min(start + step, size)) for start in range(0, size, step)
        ]
        for future in as_completed(futures):
            affine += future.result()
    at_infinity = model.rational_points_at_infinity()
    if at_infinity is None:
        raise ArithmeticError(f"points at infinity of {model} are undecided")
    logging.debug("N_%d(%s) = %d affine + %d at infinity", e, curve, affine, at_infinity)
    return affine + at_infinity
