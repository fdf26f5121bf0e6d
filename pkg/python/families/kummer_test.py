"""Tests for the Kummer families."""

import unittest
from fractions import Fraction

from absl.testing import parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.families.exceptions import FamilyParameterError
from python.families.kummer import (
    alpha_min_poly,
    family_kummer_3mod4,
    family_kummer_alpha,
    family_kummer_three_star,
    verify_h_identity,
)

Q = FieldDescriptor.rationals()


class Kummer3Mod4Test(parameterized.TestCase):
    """Test cases for family_kummer_3mod4."""

    def test_septic(self) -> None:
        """Test y^2 = 4x^4 + 2x + 4 with the point (2^(1/7), 2^(4/7) + 2)."""
        report = family_kummer_3mod4(7, 2)

        self.assertEqual(report.curve.R, Poly(Q, [4, 2, 0, 0, 4]))
        self.assertEqual(report.genus, 1)
        self.assertTrue(report.passed)
        self.assertTrue(report.all_new)
        self.assertEqual(report.points[0].degree, 7)
        self.assertIn((0, 2), report.rational_points)

    def test_genus_two(self) -> None:
        """Test that ell = 11 gives genus (11 - 3)/4 = 2."""
        report = family_kummer_3mod4(11, 3)

        self.assertEqual(report.genus, 2)
        self.assertTrue(report.passed)

    @parameterized.parameters((3,), (5,), (15,))
    def test_bad_ell(self, ell: int) -> None:
        """Test that ell must be a prime 3 mod 4 above 3."""
        with self.assertRaises(FamilyParameterError):
            family_kummer_3mod4(ell, 2)


class AlphaMinPolyTest(unittest.TestCase):
    """Test cases for alpha_min_poly."""

    def test_quintic(self) -> None:
        """Test f = x^5 - 10x^2 + 10x + 2 for m = 2, by both methods."""
        expected = Poly(Q, [2, 10, -10, 0, 0, 1])

        self.assertEqual(alpha_min_poly(5, 2), expected)
        self.assertEqual(alpha_min_poly(5, 2, method="resultant"), expected)

    def test_resultant_agrees_for_negative_radicand(self) -> None:
        """Test that both methods agree for ell = 7, m = -2."""
        self.assertEqual(alpha_min_poly(7, -2), alpha_min_poly(7, -2, method="resultant"))

    def test_unknown_method(self) -> None:
        """Test that an unknown method is refused."""
        with self.assertRaises(ValueError):
            alpha_min_poly(5, 2, method="newton")


class KummerAlphaTest(unittest.TestCase):
    """Test cases for family_kummer_alpha."""

    def test_septic(self) -> None:
        """Test y^2 = -2x(7x^3 - 14x^2 + 7x + 1) of genus one for ell = 7, m = 2."""
        report = family_kummer_alpha(7, 2)

        self.assertEqual(report.curve.R, Poly(Q, [0, -2, -14, 28, -14]))
        self.assertEqual(report.genus, 1)
        self.assertTrue(report.passed)
        self.assertTrue(report.all_new)
        self.assertTrue(report.check("f(0) = m^2 - m").passed)
        self.assertEqual(report.companions, ())

    def test_quintic(self) -> None:
        """Test that f(alpha) = 0 in Q[y]/(y^5 - 2) with the resultant method."""
        report = family_kummer_alpha(5, 2, method="resultant")

        self.assertTrue(report.check("f(alpha) = 0").passed)
        self.assertEqual(report.genus, 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.companions, ())

    def test_cofactor_and_companion(self) -> None:
        """Test the cofactor shape for ell = 13 and the genus-two companion."""
        report = family_kummer_alpha(13, 3)

        self.assertTrue(report.passed)
        self.assertTrue(report.check("c_1 = 4").passed)
        self.assertTrue(report.check("lc(c) = -1").passed)
        self.assertEqual(len(report.companions), 1)
        companion = report.companions[0]
        self.assertEqual(companion.genus, 2)
        self.assertTrue(companion.passed)

    def test_bad_radicand(self) -> None:
        """Test that m = 0 makes x^ell - m inseparable."""
        with self.assertRaises(FamilyParameterError):
            family_kummer_alpha(7, 0)


class KummerThreeStarTest(unittest.TestCase):
    """Test cases for family_kummer_three_star."""

    def test_ell_thirteen(self) -> None:
        """Test that (x - 1/3)^2 divides t and the quotient curve has genus two."""
        report = family_kummer_three_star(13)

        self.assertEqual(report.params["m"], Fraction(1, 729))
        self.assertTrue(report.passed)
        self.assertEqual(report.genus, 2)
        self.assertTrue(report.all_new)

    def test_ell_must_be_one_mod_six(self) -> None:
        """Test that ell = 11 and ell = 7 are refused."""
        for ell in (7, 11):
            with self.assertRaises(FamilyParameterError):
                family_kummer_three_star(ell)


class HIdentityTest(parameterized.TestCase):
    """Test cases for verify_h_identity."""

    def test_ell_thirteen(self) -> None:
        """Test the identity for ell = 13, with -21 as coefficient of x^5 in h."""
        report = verify_h_identity(13)

        self.assertTrue(report.passed)
        h = report.extras["h"]
        self.assertEqual(h.degree, 6)
        self.assertEqual(h.coeff(5), -21)
        self.assertEqual(h.coeff(1), -11)
        self.assertEqual(h.coeff(0), 1)

    def test_ell_nineteen(self) -> None:
        """Test ell = 19, where the trailing signs flip."""
        report = verify_h_identity(19)

        self.assertTrue(report.passed)
        h = report.extras["h"]
        self.assertEqual(h.coeff(8), -45)
        self.assertEqual(h.coeff(2), -120)
        self.assertEqual(h.coeff(1), 17)
        self.assertEqual(h.coeff(0), -1)

    def test_small_ell(self) -> None:
        """Test that ell below 13 is refused."""
        with self.assertRaises(FamilyParameterError):
            verify_h_identity(11)


if __name__ == "__main__":
    unittest.main()
