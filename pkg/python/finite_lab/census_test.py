"""Tests for new-point censuses and the genus-one recursion."""

import unittest

import sympy
from absl.testing import parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.curves.models import HyperellipticModel
from python.finite_lab.census import (
    genus_one_counts,
    new_point_census,
    within_weil_bounds,
)
from python.finite_lab.counting import count_points

F2 = FieldDescriptor.prime(2)
F3 = FieldDescriptor.prime(3)
SUPERSINGULAR = HyperellipticModel(Poly(F2, [1]), Poly(F2, [1, 1, 0, 1]))
GRID = (
    SUPERSINGULAR,
    HyperellipticModel(Poly(F2, [0, 1]), Poly(F2, [1, 0, 0, 1])),
    HyperellipticModel.from_rhs(Poly(F3, [1, 2, 0, 0, 0, 1])),
    HyperellipticModel.from_rhs(Poly(F3, [1, 2, 0, 1])),
)


class NewCountOverTest(unittest.TestCase):
    """Test cases for CensusReport.new_count_over."""

    def test_square_cofactors_drop_out(self) -> None:
        """Test that new points over F_16 are N_4 - N_2, with no N_1 term."""
        report = new_point_census(SUPERSINGULAR, 4)
        n = report.counts

        self.assertEqual(report.new_count_over(4), n[4] - n[2])
        self.assertEqual(report.new_count_over(2), n[2] - n[1])
        self.assertEqual(report.new_count_over(1), n[1])

    def test_counts_are_plain_integers(self) -> None:
        """Test that the census holds Python ints, ready for JSON."""
        report = new_point_census(SUPERSINGULAR, 6)

        self.assertIs(type(report.new_point_count), int)
        self.assertIs(type(report.new_count_over(6)), int)


class NewPointCensusTest(parameterized.TestCase):
    """Test cases for new_point_census."""

    def test_degree_four(self) -> None:
        """Test that y^2 + y = x^3 + x + 1 has 20 new points over F_16, 5 closed points."""
        report = new_point_census(SUPERSINGULAR, 4)
        self.assertEqual(report.counts, {1: 1, 2: 5, 4: 25})
        self.assertEqual(report.new_point_count, 20)
        self.assertEqual(report.closed_point_count, 5)
        self.assertEqual((report.q, report.d, report.genus), (2, 4, 1))
        self.assertTrue(report.weil_consistent)

    def test_degree_one(self) -> None:
        """Test that every rational point is new over F_q itself."""
        report = new_point_census(SUPERSINGULAR, 1)
        self.assertEqual(report.new_point_count, count_points(SUPERSINGULAR))

    def test_degree_six(self) -> None:
        """Test that new points over F_64 are N_6 - N_3 - N_2 + N_1."""
        report = new_point_census(SUPERSINGULAR, 6)
        n = report.counts
        self.assertEqual(report.new_point_count, n[6] - n[3] - n[2] + n[1])

    @parameterized.parameters(4, 6)
    def test_additivity(self, d: int) -> None:
        """Test that the points new over each F_{q^e}, e | d, add up to N_d."""
        for curve in GRID:
            report = new_point_census(curve, d)
            total = sum(report.new_count_over(e) for e in sympy.divisors(d))
            self.assertEqual(total, report.counts[d])
            self.assertTrue(report.weil_consistent)

    def test_weil_slack(self) -> None:
        """Test that the displayed slack is nonnegative on a smooth curve."""
        report = new_point_census(SUPERSINGULAR, 4)
        self.assertEqual(report.weil_slack(4), 0.0)
        self.assertGreater(report.weil_slack(1), 0.0)

    def test_new_count_needs_divisor(self) -> None:
        """Test that new_count_over refuses e not dividing d."""
        with self.assertRaises(ValueError):
            new_point_census(SUPERSINGULAR, 4).new_count_over(3)


class WeilBoundsTest(parameterized.TestCase):
    """Test cases for within_weil_bounds."""

    @parameterized.parameters(
        (25, 2, 1, 4, True),
        (26, 2, 1, 4, False),
        (9, 2, 1, 4, True),
        (8, 2, 1, 4, False),
        (17, 9, 1, 1, False),
        (6, 5, 1, 1, True),
    )
    def test_bounds(self, count: int, q: int, genus: int, e: int, inside: bool) -> None:
        """Test the squared comparison at and around the bounds."""
        self.assertEqual(within_weil_bounds(count, q, genus, e), inside)


class GenusOneCountsTest(unittest.TestCase):
    """Test cases for genus_one_counts."""

    def test_supersingular(self) -> None:
        """Test that N_1 = 1 over F_2 gives 1, 5, 13, 25."""
        self.assertEqual(genus_one_counts(2, 1, 4), [1, 5, 13, 25])

    def test_matches_count_points(self) -> None:
        """Test the recursion against counts of y^2 = x^3 + 2x + 1 over F_3^e."""
        curve = HyperellipticModel.from_rhs(Poly(F3, [1, 2, 0, 1]))
        counts = [count_points(curve, e) for e in range(1, 5)]
        self.assertEqual(genus_one_counts(3, counts[0], 4), counts)


if __name__ == "__main__":
    unittest.main()
