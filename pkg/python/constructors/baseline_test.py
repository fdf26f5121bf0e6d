"""Tests for the y = 0 baseline construction."""

import unittest

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.constructors.baseline import construct_baseline
from python.constructors.exceptions import PreconditionError
from python.constructors.extension_spec import ExtensionSpec

Q = FieldDescriptor.rationals()
CUBE = Poly(Q, [-2, 0, 0, 1])


class ConstructBaselineTest(unittest.TestCase):
    """Test cases for construct_baseline."""

    def test_cube_root_in_genus_two(self) -> None:
        """Test that the cube root of 2 lies on a genus-two curve y^2 = m f."""
        report = construct_baseline(ExtensionSpec.single(CUBE), genus=2)
        self.assertEqual(report.genus, 2)
        self.assertEqual(report.curve.R.degree, 5)
        self.assertFalse(report.curve.R % CUBE)
        x, y = report.points[0].coords
        self.assertFalse(y)
        self.assertTrue(report.verify_points())
        self.assertTrue(report.all_new)
        self.assertEqual([p.label for p in report.extra_rational_points], ["infinity"])

    def test_default_genus(self) -> None:
        """Test that the genus defaults to floor(d/2)."""
        report = construct_baseline(ExtensionSpec.of([CUBE, Poly(Q, [-3, 0, 1])]))
        self.assertEqual(report.genus, 2)
        self.assertEqual(len(report.points), 2)

    def test_repeated_extensions_are_merged(self) -> None:
        """Test that a repeated extension contributes one point."""
        report = construct_baseline(ExtensionSpec.single(CUBE, 3), genus=2)
        self.assertEqual(report.degree, 3)
        self.assertEqual(len(report.points), 1)

    def test_characteristic_two(self) -> None:
        """Test y^2 + y = m f over F_2 with m = x^4 + x + 1."""
        F2 = FieldDescriptor.prime(2)
        m = Poly(F2, [1, 1, 0, 0, 1])
        report = construct_baseline(ExtensionSpec.single(m), genus=2)
        self.assertEqual(report.curve.Q, Poly(F2, [1]))
        self.assertEqual(report.curve.R.degree, 5)
        self.assertEqual(report.genus, 2)
        self.assertTrue(report.verify_points())
        self.assertTrue(report.all_new)

    def test_genus_too_small(self) -> None:
        """Test that g < floor(d/2) is refused."""
        spec = ExtensionSpec.of([CUBE, Poly(Q, [2, 2, 0, 0, 1])])
        with self.assertRaises(PreconditionError):
            construct_baseline(spec, genus=2)

    def test_shared_roots(self) -> None:
        """Test that extensions with a common root are refused."""
        spec = ExtensionSpec.of([Poly(Q, [-1, 1]), Poly(Q, [-1, 0, 1])])
        with self.assertRaises(PreconditionError):
            construct_baseline(spec)


if __name__ == "__main__":
    unittest.main()
