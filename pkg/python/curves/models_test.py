"""Tests for curve models."""

import unittest

from absl.testing import parameterized

from python.algebra.etale import EtaleAlgebra
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.curves.models import HyperellipticModel, PlaneCubic, SuperellipticModel

Q = FieldDescriptor.rationals()
F2 = FieldDescriptor.prime(2)


class HyperellipticModelTest(parameterized.TestCase):
    """Test cases for y^2 + Q y = R."""

    def test_elliptic_curve_over_rationals(self) -> None:
        """Test genus, membership and the point at infinity of y^2 = x^3 + x + 1."""
        curve = HyperellipticModel.from_rhs(Poly(Q, [1, 1, 0, 1]))
        self.assertEqual(curve.genus, 1)
        self.assertTrue(curve.contains(0, 1))
        self.assertFalse(curve.contains(1, 1))
        self.assertTrue(curve.smoothness().smooth)
        self.assertEqual(curve.rational_points_at_infinity(), 1)

    @parameterized.parameters(([1, 0, 0, 0, 1], 2), ([1, 0, 0, 0, 2], 0))
    def test_points_at_infinity_even_degree(self, coeffs, expected) -> None:
        """Test that two points at infinity are rational iff lc is a square."""
        curve = HyperellipticModel.from_rhs(Poly(Q, coeffs))
        self.assertEqual(curve.rational_points_at_infinity(), expected)

    def test_repeated_root_is_singular(self) -> None:
        """Test that y^2 = (x - 1)^2 (x + 1) fails the certificate."""
        x = Poly.x(Q)
        curve = HyperellipticModel.from_rhs((x - 1) ** 2 * (x + 1))
        self.assertFalse(curve.smoothness().smooth)

    @parameterized.parameters(
        ([1], [1, 1, 0, 1], True),
        ([0, 1], [1, 0, 0, 1], True),
        ([0, 1], [0, 0, 0, 1], False),
        ([1], [0, 1, 0, 0, 1], False),
    )
    def test_characteristic_two_smoothness(self, q, r, expected) -> None:
        """Test the char 2 criterion, including the chart at infinity."""
        curve = HyperellipticModel(Poly(F2, q), Poly(F2, r))
        self.assertEqual(curve.smoothness().smooth, expected)

    def test_characteristic_two_genus(self) -> None:
        """Test that y^2 + y = x^5 + 1 over F_2 has genus 2."""
        curve = HyperellipticModel(Poly(F2, [1]), Poly(F2, [1, 0, 0, 0, 0, 1]))
        self.assertEqual(curve.genus, 2)
        self.assertEqual(curve.rational_points_at_infinity(), 1)

    def test_characteristic_two_requires_q(self) -> None:
        """Test that Q = 0 is rejected in characteristic 2."""
        with self.assertRaises(ValueError):
            HyperellipticModel.from_rhs(Poly(F2, [1, 1, 0, 1]))

    def test_points_in_etale_algebra(self) -> None:
        """Test membership of a point with coordinates in Q[a]/(a^3 - 2)."""
        algebra = EtaleAlgebra(Poly(Q, [-2, 0, 0, 1]))
        a = algebra.gen()
        curve = HyperellipticModel.from_rhs(Poly(Q, [0, 0, 0, 1]))
        self.assertTrue(curve.contains(a * a, a * a * a))

    def test_to_str(self) -> None:
        """Test rendering of both forms."""
        x = Poly.x(F2)
        self.assertEqual(str(HyperellipticModel(x, x**3 + 1)), "y^2 + (x)*y = x^3 + 1")


class SuperellipticModelTest(parameterized.TestCase):
    """Test cases for y^n = f(x)."""

    @parameterized.parameters((7, 2, 3), (5, 1, 2), (13, 4, 6))
    def test_fermat_quotient_genus(self, ell, a, expected) -> None:
        """Test that y^ell = (x - 1) x^a has genus (ell - 1)/2."""
        x = Poly.x(Q)
        curve = SuperellipticModel(ell, (x - 1) * x**a)
        self.assertEqual(curve.genus, expected)

    def test_genus_of_hyperelliptic_quintic(self) -> None:
        """Test that y^2 = x^5 - 1 has genus 2."""
        curve = SuperellipticModel(2, Poly(Q, [-1, 0, 0, 0, 0, 1]))
        self.assertEqual(curve.genus, 2)

    def test_reducible_cover_rejected(self) -> None:
        """Test that y^2 = x^2 (x - 1)^2 is reported reducible."""
        x = Poly.x(Q)
        with self.assertRaises(ValueError):
            _ = SuperellipticModel(2, x**2 * (x - 1) ** 2).genus


class PlaneCubicTest(unittest.TestCase):
    """Test cases for plane cubics."""

    def test_smooth_cubic_certified(self) -> None:
        """Test that y^2 z = x^3 + z^3 is certified smooth."""
        cubic = PlaneCubic.from_affine(Q, {(0, 2): 1, (3, 0): -1, (0, 0): -1})
        self.assertTrue(cubic.smoothness().smooth)

    def test_cusp_is_not_certified(self) -> None:
        """Test that y^2 z = x^3 fails in every chart."""
        cubic = PlaneCubic.from_affine(Q, {(0, 2): 1, (3, 0): -1})
        self.assertFalse(cubic.smoothness().smooth)

    def test_degree_nine_points(self) -> None:
        """Test that (b^-2 : b^-3 : 1) lies on the cubic built from m."""
        m = Poly(Q, [-1, -1, 0, 0, 0, 1, 0, 0, 0, 1])
        cubic = PlaneCubic.from_degree_nine(m)
        b = EtaleAlgebra(m).gen()
        self.assertTrue(cubic.contains(b**-2, b**-3))
        self.assertTrue(cubic.contains(1, 0, 0))
        self.assertTrue(cubic.is_smooth_at((1, 0, 0)))

    def test_degree_nine_rejects_x8_term(self) -> None:
        """Test that a nonzero x^8 coefficient is refused."""
        m = Poly(Q, [1] + [0] * 7 + [1, 1])
        with self.assertRaises(ValueError):
            PlaneCubic.from_degree_nine(m)


if __name__ == "__main__":
    unittest.main()
