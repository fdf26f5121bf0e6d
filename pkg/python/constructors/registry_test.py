"""Tests for construction registry."""

import unittest

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.general import construct_general
from python.constructors.options import ConstructionOptions
from python.constructors.registry import ConstructorRegistry
from python.constructors.report import ConstructionReport

Q = FieldDescriptor.rationals()
SEPTIC = ExtensionSpec.single(Poly(Q, [-2, 0, 0, 0, 0, 0, 0, 1]))
FAST = ConstructionOptions(order_bound=1)


class ConstructorRegistryTest(unittest.TestCase):
    """Test cases for ConstructorRegistry class."""

    def test_get_available_methods_returns_sorted_list(self) -> None:
        """Test that get_available_methods returns sorted method names."""
        methods = ConstructorRegistry.get_available_methods()

        self.assertIsInstance(methods, list)
        self.assertEqual(methods, sorted(methods))
        for name in ("auto", "baseline", "cubic9", "elementary", "general", "kummer"):
            self.assertIn(name, methods)

    def test_has_method_is_case_insensitive(self) -> None:
        """Test that has_method is case insensitive."""
        self.assertTrue(ConstructorRegistry.has_method("General"))
        self.assertTrue(ConstructorRegistry.has_method("TRACEZERO"))
        self.assertFalse(ConstructorRegistry.has_method("nonexistent"))

    def test_run_method_matches_direct_call(self) -> None:
        """Test that run_method('general') is construct_general."""
        report = ConstructorRegistry.run_method("GENERAL", SEPTIC, FAST)

        self.assertEqual(report.curve, construct_general(SEPTIC, FAST).curve)

    def test_run_method_passes_params(self) -> None:
        """Test that method-specific params reach the construction."""
        cube = ExtensionSpec.single(Poly(Q, [-2, 0, 0, 1]))
        report = ConstructorRegistry.run_method("baseline", cube, FAST, genus=3)

        self.assertEqual(report.genus, 3)

    def test_single_extension_methods_reject_multisets(self) -> None:
        """Test that elementary refuses more than one extension."""
        with self.assertRaises(ValueError):
            ConstructorRegistry.run_method("elementary", SEPTIC.repeat(2), FAST)

    def test_run_method_raises_value_error_for_unknown_method(self) -> None:
        """Test that run_method raises ValueError for unknown methods."""
        with self.assertRaises(ValueError) as context:
            ConstructorRegistry.run_method("unknown_method", SEPTIC)

        self.assertIn("Unknown method", str(context.exception))
        self.assertIn("unknown_method", str(context.exception))
        self.assertIn("Available methods", str(context.exception))

    def test_register_method_adds_new_method(self) -> None:
        """Test that register_method adds a new method to the registry."""

        def constant_method(
            spec: ExtensionSpec, options: ConstructionOptions, **params: object
        ) -> ConstructionReport:
            return construct_general(spec, options)

        original_methods = set(ConstructorRegistry.get_available_methods())

        try:
            ConstructorRegistry.register_method("test_method", constant_method)

            self.assertTrue(ConstructorRegistry.has_method("test_method"))
            report = ConstructorRegistry.run_method("test_method", SEPTIC, FAST)
            self.assertEqual(report.method, "general")
        finally:
            if "test_method" in ConstructorRegistry._METHOD_MAP:
                del ConstructorRegistry._METHOD_MAP["test_method"]

            current_methods = set(ConstructorRegistry.get_available_methods())
            self.assertEqual(original_methods, current_methods)

    def test_register_method_raises_error_for_duplicate(self) -> None:
        """Test that register_method raises error for duplicate names."""
        with self.assertRaises(ValueError) as context:
            ConstructorRegistry.register_method("general", construct_general)

        self.assertIn("already registered", str(context.exception))


if __name__ == "__main__":
    unittest.main()
