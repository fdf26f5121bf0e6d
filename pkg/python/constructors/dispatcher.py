"""Pick a construction and padding for a single extension L and optional genus.

Without a genus request, small degrees are padded with copies of L or of
the trivial extension K until the total is 7 to 10, which yields an
elliptic curve. A genus request g >= 2 pads L with copies of K until the
general construction lands on genus g with a K-rational point. In
characteristic 2 the trace-zero and plane-cubic constructions are used.
"""

from typing import Dict, Optional, Tuple

from absl import logging

from python.algebra.poly import Poly
from python.constructors.cubic9 import construct_cubic9
from python.constructors.exceptions import NoRecipeError
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.general import construct_general, genus_for_degree
from python.constructors.kummer import construct_kummer, kummer_base
from python.constructors.options import ConstructionOptions
from python.constructors.report import ConstructionReport
from python.constructors.tracezero import construct_tracezero

# d -> (copies of L, copies of K) giving a total of 8, 9 or 10.
ELLIPTIC_PADDING: Dict[int, Tuple[int, int]] = {
    1: (8, 0),
    2: (4, 0),
    3: (3, 0),
    4: (2, 0),
    5: (2, 0),
    6: (1, 1),
    7: (1, 0),
    8: (1, 0),
    9: (1, 0),
}
KUMMER_DEGREE = 10


def _has_rational_point(total: int, padding: int) -> bool:
    return padding >= 1 or total % 4 != 2


def genus_padding(d: int, genus: int) -> int:
    """Copies c of K so that d + c gives genus g with a K-rational point.

    Raises:
        NoRecipeError: If no padding reaches genus g
    """
    c = max(0, 7 - d)
    while genus_for_degree(d + c) <= genus:
        if genus_for_degree(d + c) == genus and _has_rational_point(d + c, c):
            return c
        c += 1
    if d % 4 == 2 and genus_for_degree(d) == genus:
        return 0
    raise NoRecipeError(d, genus, "every padding of L misses this genus")


def _kummer_for_genus(
    m0: Poly, k: int, genus: Optional[int], options: ConstructionOptions
) -> ConstructionReport:
    report = construct_kummer(m0, k, options)
    if genus is not None and report.genus != genus:
        raise NoRecipeError(
            report.degree, genus, f"the Kummer construction gives genus {report.genus}"
        )
    return report


def _auto_odd_characteristic(
    L: Poly,
    spec: ExtensionSpec,
    genus: Optional[int],
    options: ConstructionOptions,
    kummer: Optional[Tuple[Poly, int]],
) -> ConstructionReport:
    d = spec.degree
    if kummer is not None:
        return _kummer_for_genus(kummer[0], kummer[1], genus, options)
    if genus is not None and genus < 1:
        raise NoRecipeError(d, genus, "only positive genus is constructed")
    if genus is None or genus == 1:
        if d in ELLIPTIC_PADDING:
            copies, trivial = ELLIPTIC_PADDING[d]
            return construct_general(spec.repeat(copies).pad(trivial), options)
        if d == KUMMER_DEGREE:
            try:
                m0, k = kummer_base(L, 2)
            except ValueError:
                return construct_general(spec, options)
            return _kummer_for_genus(m0, k, genus, options)
        if genus == 1:
            raise NoRecipeError(
                d, genus, "no general recipe beyond d = 10; use the families or composition"
            )
        return construct_general(spec, options)
    padding = genus_padding(d, genus)
    if padding == 0 and d % 4 == 2:
        logging.warning("auto: d=%d alone gives genus %d without a rational point", d, genus)
    return construct_general(spec.pad(padding), options)


def _auto_char2(
    spec: ExtensionSpec, genus: Optional[int], options: ConstructionOptions
) -> ConstructionReport:
    d = spec.degree
    if genus is None or genus == 1:
        if d == 9:
            return construct_cubic9(spec, options)
        if d <= 8:
            return construct_tracezero(spec.pad(max(d, 7) - d), options)
        if genus == 1:
            raise NoRecipeError(d, genus, "characteristic 2 reaches genus 1 only for d <= 9")
        return construct_tracezero(spec, options)
    if genus < 1:
        raise NoRecipeError(d, genus, "only positive genus is constructed")
    for total in (2 * genus + 5, 2 * genus + 6):
        if total >= d:
            return construct_tracezero(spec.pad(total - d), options)
    raise NoRecipeError(d, genus, f"trace-zero curves of genus {genus} need d <= {2 * genus + 6}")


def construct_auto(
    L: Poly,
    genus: Optional[int] = None,
    options: ConstructionOptions = ConstructionOptions(),
    kummer: Optional[Tuple[Poly, int]] = None,
) -> ConstructionReport:
    """Construct a curve with a new point over K[x]/(L).

    Args:
        L: Monic separable defining polynomial of L
        genus: Requested genus; None asks for the smallest available one
        options: Seed, attempt cap and order bound
        kummer: (m0, k) with m0(x^k) = L, to force the Kummer construction

    Raises:
        NoRecipeError: If (deg L, genus) lies outside every construction, or
            the Kummer construction gives a genus other than the one requested
        ValueError: If the kummer hint does not match L

    Example Usage:
        ```python
        K = FieldDescriptor.rationals()
        report = construct_auto(Poly(K, [-2, 0, 0, 0, 0, 1]))  # x^5 - 2, padded to {L, L}
        report.genus  # 1
        ```
    """
    spec = ExtensionSpec.single(L)
    if kummer is not None and kummer[0].substitute_power(kummer[1]) != L:
        raise ValueError(f"{kummer[0]} at x^{kummer[1]} is not {L}")
    logging.info("auto: d=%d genus=%s over %s", spec.degree, genus, spec.field)
    if spec.field.characteristic == 2:
        return _auto_char2(spec, genus, options)
    return _auto_odd_characteristic(L, spec, genus, options, kummer)
