"""Tests for the Kummer construction y^2 = ell(x^k)."""

import unittest

from absl.testing import parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.constructors.exceptions import PreconditionError
from python.constructors.kummer import (
    DEGENERATE_WARNING,
    construct_kummer,
    expected_genus,
    kummer_base,
)

Q = FieldDescriptor.rationals()
QUINTIC = Poly(Q, [-2, 0, 0, 0, 0, 1])
SEXTIC = Poly(Q, [-1, -1, 0, 0, 0, 0, 1])


class KummerBaseTest(unittest.TestCase):
    """Test cases for kummer_base."""

    def test_default_exponent_is_gcd(self) -> None:
        """Test that x^6 + x^3 + 1 is m0(x^3) with m0 = x^2 + x + 1."""
        m0, k = kummer_base(Poly(Q, [1, 0, 0, 1, 0, 0, 1]))
        self.assertEqual(k, 3)
        self.assertEqual(m0, Poly(Q, [1, 1, 1]))

    def test_explicit_exponent(self) -> None:
        """Test that x^10 - 2 read at k = 2 gives x^5 - 2."""
        self.assertEqual(kummer_base(QUINTIC.substitute_power(2), 2), (QUINTIC, 2))

    def test_not_a_power(self) -> None:
        """Test that x^3 + x + 1 is not a polynomial in x^2."""
        with self.assertRaises(ValueError):
            kummer_base(Poly(Q, [1, 1, 0, 1]), 2)


class ExpectedGenusTest(parameterized.TestCase):
    """Test cases for expected_genus."""

    @parameterized.parameters(
        (5, 2, 1),
        (6, 2, 1),
        (3, 3, 1),
        (6, 4, 3),
        (7, 2, 2),
        (5, 4, 3),
    )
    def test_genus(self, e: int, k: int, genus: int) -> None:
        """Test the genus of y^2 = ell(x^k) for deg m0 = e."""
        self.assertEqual(expected_genus(e, k), genus)


class ConstructKummerTest(unittest.TestCase):
    """Test cases for construct_kummer."""

    def test_quintic_square_roots(self) -> None:
        """Test that x^5 - 2 with k = 2 gives a degree-10 point in genus one."""
        report = construct_kummer(QUINTIC, 2)
        self.assertEqual(report.genus, 1)
        self.assertEqual(report.degree, 10)
        self.assertEqual(report.curve.R.degree, 4)
        self.assertEqual(report.points[0].degree, 10)
        self.assertIsNotNone(report.rescaling)
        self.assertTrue(report.verify_points())
        self.assertTrue(report.all_new)
        self.assertIn("(0, h(0))", [point.label for point in report.extra_rational_points])

    def test_even_shape(self) -> None:
        """Test that e = 6, k = 2 gives y^2 = a x^4 + b x^2 + c."""
        report = construct_kummer(SEXTIC, 2)
        R = report.curve.R
        self.assertEqual(R.degree, 4)
        self.assertFalse(R.coeff(1))
        self.assertFalse(R.coeff(3))
        self.assertEqual(report.genus, 1)
        self.assertTrue(report.all_new)

    def test_residue_field_is_unchanged(self) -> None:
        """Test that the rescaled extension still has the degree of m0(x^k)."""
        report = construct_kummer(QUINTIC, 2)
        self.assertEqual(report.m.degree, 10)
        self.assertEqual(report.spec.entries[0][0], QUINTIC.substitute_power(2))
        x = report.points[0].coords[0]
        self.assertFalse(report.m(x))

    def test_cubic_is_degenerate(self) -> None:
        """Test that e = 3 warns that all such curves are twists of one another."""
        report = construct_kummer(Poly(Q, [-2, 0, 0, 1]), 3)
        self.assertEqual(report.genus, 1)
        self.assertEqual(report.curve.R.degree, 3)
        self.assertIn(DEGENERATE_WARNING, report.warnings)
        self.assertEqual(report.j_invariant, 0)

    def test_preconditions(self) -> None:
        """Test the degree, exponent and characteristic hypotheses."""
        with self.assertRaises(PreconditionError):
            construct_kummer(Poly(Q, [-2, 0, 0, 1]), 2)
        with self.assertRaises(PreconditionError):
            construct_kummer(Poly(Q, [-2, 0, 1]), 5)
        with self.assertRaises(PreconditionError):
            construct_kummer(Poly(Q, [0, 1, 0, 1]), 3)
        F5 = FieldDescriptor.prime(5)
        with self.assertRaises(PreconditionError):
            construct_kummer(Poly(F5, [-2, 0, 0, 1]), 5)


if __name__ == "__main__":
    unittest.main()
