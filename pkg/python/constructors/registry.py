"""Construction registry for mapping method names to construction callables."""

from typing import Any, Callable, Dict

from python.algebra.poly import Poly
from python.constructors.baseline import construct_baseline
from python.constructors.cubic9 import construct_cubic9
from python.constructors.dispatcher import construct_auto
from python.constructors.elementary import construct_elementary
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.general import construct_general
from python.constructors.kummer import construct_kummer, kummer_base
from python.constructors.options import ConstructionOptions
from python.constructors.report import ConstructionReport
from python.constructors.tracezero import construct_tracezero

Constructor = Callable[..., ConstructionReport]


def _single(spec: ExtensionSpec, method: str) -> Poly:
    if len(spec.entries) != 1 or spec.entries[0][1] != 1:
        raise ValueError(f"{method} takes a single extension, got {spec}")
    return spec.entries[0][0]


def _elementary(
    spec: ExtensionSpec, options: ConstructionOptions, **params: Any
) -> ConstructionReport:
    return construct_elementary(_single(spec, "elementary"), params.get("n"), options)


def _kummer(
    spec: ExtensionSpec, options: ConstructionOptions, **params: Any
) -> ConstructionReport:
    m0, k = kummer_base(_single(spec, "kummer"), params.get("k"))
    return construct_kummer(m0, k, options)


def _auto(
    spec: ExtensionSpec, options: ConstructionOptions, **params: Any
) -> ConstructionReport:
    return construct_auto(_single(spec, "auto"), params.get("genus"), options)


class ConstructorRegistry:
    """Registry for managing available construction methods.

    Every method is called as method(spec, options, **params). Single-extension
    methods (elementary, kummer, auto) expect one entry of multiplicity one;
    the recognized params are n (elementary), k (kummer) and genus
    (baseline, auto).

    Example Usage:
        ```python
        methods = ConstructorRegistry.get_available_methods()

        if ConstructorRegistry.has_method("general"):
            report = ConstructorRegistry.run_method(
                "general", spec, ConstructionOptions(seed=0)
            )
        ```

    Attributes:
        _METHOD_MAP: Mapping from method names to construction callables
    """

    _METHOD_MAP: Dict[str, Constructor] = {
        "general": lambda spec, options, **params: construct_general(spec, options),
        "elementary": _elementary,
        "kummer": _kummer,
        "baseline": lambda spec, options, **params: construct_baseline(
            spec, params.get("genus"), options
        ),
        "tracezero": lambda spec, options, **params: construct_tracezero(spec, options),
        "cubic9": lambda spec, options, **params: construct_cubic9(spec, options),
        "auto": _auto,
    }

    @classmethod
    def get_available_methods(cls) -> list[str]:
        """Get list of all available method names.

        Returns:
            List of method names that can be used with run_method()
        """
        return sorted(cls._METHOD_MAP.keys())

    @classmethod
    def has_method(cls, method_name: str) -> bool:
        """Check if a method with the given name exists (case insensitive)."""
        return method_name.lower() in cls._METHOD_MAP

    @classmethod
    def run_method(
        cls,
        method_name: str,
        spec: ExtensionSpec,
        options: ConstructionOptions = ConstructionOptions(),
        **params: Any,
    ) -> ConstructionReport:
        """Run a construction by name.

        Args:
            method_name: Name of the method (case insensitive)
            spec: Extensions to place new points over
            options: Seed, attempt cap and order bound
            **params: Method-specific parameters

        Returns:
            The construction report

        Raises:
            ValueError: If method_name is not registered
        """
        normalized_name = method_name.lower()

        if normalized_name not in cls._METHOD_MAP:
            available = ", ".join(cls.get_available_methods())
            raise ValueError(f"Unknown method: '{method_name}'. Available methods: {available}")

        return cls._METHOD_MAP[normalized_name](spec, options, **params)

    @classmethod
    def register_method(cls, method_name: str, constructor: Constructor) -> None:
        """Register a new construction method.

        Args:
            method_name: Name to register the method under (will be lowercased)
            constructor: Callable taking (spec, options, **params)

        Raises:
            ValueError: If method_name is already registered
        """
        normalized_name = method_name.lower()

        if normalized_name in cls._METHOD_MAP:
            raise ValueError(f"Method '{method_name}' is already registered")

        cls._METHOD_MAP[normalized_name] = constructor
