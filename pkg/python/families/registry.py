"""Family registry for mapping family names to generator callables."""

import inspect
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Optional, Sequence

import sympy
from absl import logging

from python.families.artin_schreier import (
    ArtinSchreierVariant,
    family_artin_schreier,
    variant_applies,
)
from python.families.charp import family_charp
from python.families.cyclotomic import family_cyclotomic_special, family_zeta60
from python.families.fermat import family_fermat_quotient
from python.families.kummer import (
    family_kummer_3mod4,
    family_kummer_alpha,
    family_kummer_three_star,
    verify_h_identity,
)
from python.families.kummer11 import family_kummer11
from python.families.report import FamilyReport

FamilyGenerator = Callable[..., FamilyReport]

GRID_PRIME_BOUND = 61
GRID_RADICANDS = (2, 3, 5, -2)
GRID_COEFFICIENT_BOUND = 11


def _grid_primes(lowest: int) -> List[int]:
    return list(sympy.primerange(lowest, GRID_PRIME_BOUND + 1))


def _artin_schreier_grid() -> List[Dict[str, Any]]:
    pairs = ((1, 1), (2, 3), (-1, 5), (3, -2), (7, GRID_COEFFICIENT_BOUND))
    return [
        {"ell": ell, "a": a, "b": b, "variant": variant.value}
        for ell in (5, 11, 12, 13, 16, 17)
        for variant in ArtinSchreierVariant
        if variant_applies(variant, ell)
        for a, b in pairs
    ]


class FamilyRegistry:
    """Registry for managing the explicit families.

    Every family is called as family(**params) and returns a FamilyReport.

    Example Usage:
        ```python
        families = FamilyRegistry.get_available_families()

        if FamilyRegistry.has_family("kummer_alpha"):
            report = FamilyRegistry.run_family("kummer_alpha", ell=7, m=2)
        ```

    Attributes:
        _FAMILY_MAP: Mapping from family names to generator callables
    """

    _FAMILY_MAP: Dict[str, FamilyGenerator] = {
        "kummer_3mod4": family_kummer_3mod4,
        "kummer_alpha": family_kummer_alpha,
        "kummer_three_star": family_kummer_three_star,
        "kummer11": family_kummer11,
        "h_identity": verify_h_identity,
        "artin_schreier": family_artin_schreier,
        "cyclotomic_special": family_cyclotomic_special,
        "zeta60": lambda **params: family_zeta60(),
        "fermat_quotient": family_fermat_quotient,
        "charp": family_charp,
    }

    @classmethod
    def get_available_families(cls) -> list[str]:
        """Get list of all available family names.

        Returns:
            List of family names that can be used with run_family()
        """
        return sorted(cls._FAMILY_MAP.keys())

    @classmethod
    def has_family(cls, family_name: str) -> bool:
        """Check if a family with the given name exists (case insensitive)."""
        return family_name.lower() in cls._FAMILY_MAP

    @classmethod
    def get_family_parameters(cls, family_name: str) -> List[str]:
        """Names of the keyword parameters a family accepts.

        Raises:
            ValueError: If family_name is not registered
        """
        normalized_name = family_name.lower()
        if normalized_name not in cls._FAMILY_MAP:
            available = ", ".join(cls.get_available_families())
            raise ValueError(f"Unknown family: '{family_name}'. Available families: {available}")
        parameters = inspect.signature(cls._FAMILY_MAP[normalized_name]).parameters.values()
        return [
            p.name
            for p in parameters
            if p.kind in (inspect.Parameter.POSITIONAL_OR_KEYWORD, inspect.Parameter.KEYWORD_ONLY)
        ]

    @classmethod
    def run_family(cls, family_name: str, **params: Any) -> FamilyReport:
        """Generate and verify one member of a family.

        Args:
            family_name: Name of the family (case insensitive)
            **params: Parameters of the member, e.g. ell=7, m=2

        Returns:
            The family report

        Raises:
            ValueError: If family_name is not registered
            FamilyParameterError: If the parameters violate the family's hypotheses
        """
        normalized_name = family_name.lower()

        if normalized_name not in cls._FAMILY_MAP:
            available = ", ".join(cls.get_available_families())
            raise ValueError(f"Unknown family: '{family_name}'. Available families: {available}")

        return cls._FAMILY_MAP[normalized_name](**params)

    @classmethod
    def register_family(cls, family_name: str, generator: FamilyGenerator) -> None:
        """Register a new family.

        Args:
            family_name: Name to register the family under (will be lowercased)
            generator: Callable taking keyword parameters

        Raises:
            ValueError: If family_name is already registered
        """
        normalized_name = family_name.lower()

        if normalized_name in cls._FAMILY_MAP:
            raise ValueError(f"Family '{family_name}' is already registered")

        cls._FAMILY_MAP[normalized_name] = generator

    @classmethod
    def run_grid(
        cls,
        family_name: str,
        parameter_sets: Optional[Sequence[Dict[str, Any]]] = None,
        max_workers: int = 4,
    ) -> List[FamilyReport]:
        """Run a family over many parameter sets, one task per set.

        Args:
            family_name: Name of the family (case insensitive)
            parameter_sets: Keyword parameters per member; the regression grid
                of the family when omitted
            max_workers: Thread pool size

        Returns:
            Reports in the order of parameter_sets
        """
        if parameter_sets is None:
            parameter_sets = regression_grid(family_name)
        reports: List[Optional[FamilyReport]] = [None] * len(parameter_sets)
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            futures = {
                executor.submit(cls.run_family, family_name, **params): i
                for i, params in enumerate(parameter_sets)
            }
            for future in as_completed(futures):
                reports[futures[future]] = future.result()
        failed = [r.params for r in reports if r is not None and not r.passed]
        logging.info(
            "grid %s: %d members, %d with failed checks", family_name, len(reports), len(failed)
        )
        return [r for r in reports if r is not None]


def regression_grid(family_name: str) -> List[Dict[str, Any]]:
    """Parameter sets over which every unconditional identity must hold.

    Raises:
        ValueError: If the family has no regression grid
    """
    name = family_name.lower()
    if name == "kummer_3mod4":
        return [
            {"ell": ell, "m": m} for ell in _grid_primes(7) if ell % 4 == 3 for m in GRID_RADICANDS
        ]
    if name == "kummer_alpha":
        return [{"ell": ell, "m": m} for ell in _grid_primes(5) for m in GRID_RADICANDS]
    if name == "kummer11":
        return [{"m": m} for m in GRID_RADICANDS]
    if name == "cyclotomic_special":
        return [{"p": p} for p in _grid_primes(11)]
    if name == "fermat_quotient":
        return [{"ell": ell, "a": a} for ell in _grid_primes(3) for a in range(1, ell - 1)]
    if name == "h_identity":
        return [{"ell": ell} for ell in _grid_primes(13)]
    if name == "artin_schreier":
        return _artin_schreier_grid()
    raise ValueError(f"family '{family_name}' has no regression grid")
