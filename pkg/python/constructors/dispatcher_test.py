"""Tests for the automatic choice of construction and padding."""

import unittest

from absl.testing import parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.constructors.dispatcher import construct_auto, genus_padding
from python.constructors.exceptions import NoRecipeError, PreconditionError
from python.constructors.options import ConstructionOptions

Q = FieldDescriptor.rationals()
CUBE = Poly(Q, [-2, 0, 0, 1])
QUINTIC = Poly(Q, [-2, 0, 0, 0, 0, 1])
FAST = ConstructionOptions(order_bound=1)


class GenusPaddingTest(parameterized.TestCase):
    """Test cases for genus_padding."""

    @parameterized.parameters(
        (5, 2, 6),
        (7, 1, 0),
        (30, 6, 0),
        (30, 7, 1),
        (11, 2, 0),
        (11, 3, 4),
    )
    def test_padding(self, d: int, genus: int, padding: int) -> None:
        """Test the number of copies of K added to reach the genus."""
        self.assertEqual(genus_padding(d, genus), padding)

    def test_genus_below_reach(self) -> None:
        """Test that d = 12 cannot be padded down to genus one."""
        with self.assertRaises(NoRecipeError):
            genus_padding(12, 1)


class ConstructAutoTest(unittest.TestCase):
    """Test cases for construct_auto."""

    def test_quintic_is_doubled(self) -> None:
        """Test that d = 5 uses {L, L} and gives two new points of degree 5."""
        report = construct_auto(QUINTIC, options=FAST)
        self.assertEqual(report.method, "general")
        self.assertEqual(report.spec.entries, ((QUINTIC, 2),))
        self.assertEqual(report.genus, 1)
        self.assertEqual([point.degree for point in report.points], [5, 5])

    def test_cubic_is_tripled(self) -> None:
        """Test that d = 3 uses {L, L, L}."""
        report = construct_auto(CUBE, options=FAST)
        self.assertEqual(report.spec.entries, ((CUBE, 3),))
        self.assertEqual(report.degree, 9)
        self.assertTrue(report.all_new)

    def test_genus_request_pads_with_rational_points(self) -> None:
        """Test that genus 2 for d = 5 adds six copies of K."""
        report = construct_auto(QUINTIC, genus=2)
        self.assertEqual(report.genus, 2)
        self.assertEqual(report.degree, 11)
        self.assertEqual(report.spec.entries[1], (Poly.x(Q), 6))

    def test_degree_ten_uses_kummer(self) -> None:
        """Test that x^10 - 3 goes through y^2 = ell(x^2)."""
        report = construct_auto(Poly(Q, [-3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]), options=FAST)
        self.assertEqual(report.method, "kummer")
        self.assertEqual(report.genus, 1)

    def test_no_recipe(self) -> None:
        """Test that genus one for d = 12 and genus zero are refused."""
        L = Poly(Q, [-2] + [0] * 11 + [1])
        with self.assertRaises(NoRecipeError) as context:
            construct_auto(L, genus=1)
        self.assertIn("d=12", str(context.exception))
        with self.assertRaises(NoRecipeError):
            construct_auto(CUBE, genus=0)

    def test_kummer_hint_must_match(self) -> None:
        """Test that a hint m0 with m0(x^k) != L is refused."""
        L = Poly(Q, [-3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
        with self.assertRaises(ValueError):
            construct_auto(L, kummer=(QUINTIC, 2))

    def test_kummer_hint_with_matching_genus(self) -> None:
        """Test that a genus-one request is honoured by the Kummer hint."""
        L = Poly(Q, [-2] + [0] * 9 + [1])
        report = construct_auto(L, genus=1, options=FAST, kummer=(QUINTIC, 2))

        self.assertEqual(report.method, "kummer")
        self.assertEqual(report.genus, 1)

    def test_kummer_hint_genus_mismatch(self) -> None:
        """Test that a Kummer hint does not silently drop a genus request."""
        L = Poly(Q, [-2] + [0] * 9 + [1])
        with self.assertRaises(NoRecipeError) as context:
            construct_auto(L, genus=3, options=FAST, kummer=(QUINTIC, 2))
        self.assertEqual(context.exception.genus, 3)

    def test_characteristic_two(self) -> None:
        """Test that a cubic over F_256 is padded to the trace-zero curve with d = 7."""
        F256 = FieldDescriptor.finite(2, 8)
        report = construct_auto(Poly(F256, [1, 1, 0, 1]))
        self.assertEqual(report.method, "tracezero")
        self.assertEqual(report.degree, 7)
        self.assertEqual(report.genus, 1)
        self.assertTrue(report.verify_points())

    def test_tiny_field(self) -> None:
        """Test that F_2 is left to the finite-field search."""
        with self.assertRaises(PreconditionError):
            construct_auto(Poly(FieldDescriptor.prime(2), [1, 1, 0, 1]))


if __name__ == "__main__":
    unittest.main()
