"""Tests for Weil-bound feasibility."""

import itertools
import math
import unittest

from absl.testing import parameterized
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from python.algebra.fields import FieldDescriptor
from python.finite_lab.census import new_point_census
from python.finite_lab.search import candidate_models
from python.finite_lab.weil import WeilVerdict, sign_of, weil_feasibility, weil_margin

SPOT_CHECK_CANDIDATES = 6


class SignOfTest(parameterized.TestCase):
    """Test cases for sign_of."""

    @parameterized.parameters(
        (0, 0, 2, 0),
        (3, 0, 2, 1),
        (0, -1, 2, -1),
        (3, -2, 2, 1),
        (2, -2, 2, -1),
        (-4, 2, 4, 0),
        (-5, 2, 4, -1),
        (-3, 2, 2, -1),
    )
    def test_sign(self, u: int, v: int, q: int, expected: int) -> None:
        """Test the sign of u + v sqrt(q) on boundary cases."""
        self.assertEqual(sign_of(u, v, q), expected)

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(st.integers(-500, 500), st.integers(-50, 50), st.integers(2, 400))
    def test_agrees_with_floating_point(self, u: int, v: int, q: int) -> None:
        """Test that the exact sign matches floats away from zero."""
        value = u + v * math.sqrt(q)
        assume(abs(value) > 1e-6)
        self.assertEqual(sign_of(u, v, q), 1 if value > 0 else -1)


class WeilFeasibilityTest(parameterized.TestCase):
    """Test cases for weil_feasibility."""

    @parameterized.parameters(
        (2, 1, 4, WeilVerdict.UNKNOWN),
        (2, 1, 5, WeilVerdict.GUARANTEED),
        (1009, 1, 2, WeilVerdict.GUARANTEED),
        (2, 1, 1, WeilVerdict.GUARANTEED),
        (2, 2, 1, WeilVerdict.UNKNOWN),
        (3, 1, 3, WeilVerdict.GUARANTEED),
        (2, 2, 7, WeilVerdict.GUARANTEED),
        (2, 3, 4, WeilVerdict.UNKNOWN),
    )
    def test_verdicts(self, q: int, genus: int, d: int, verdict: WeilVerdict) -> None:
        """Test verdicts on both sides of the bound."""
        self.assertEqual(weil_feasibility(q, genus, d), verdict)

    def test_boundary_case_is_equality(self) -> None:
        """Test that q = 2, g = 1, d = 4 sits exactly on the bound, 9 against 9."""
        self.assertEqual(weil_margin(2, 1, 4), (0, 0))

    def test_six_has_two_maximal_subfields(self) -> None:
        """Test that d = 6 subtracts the bounds for F_{q^3} and F_{q^2}."""
        u, v = weil_margin(5, 1, 6)
        self.assertEqual(u, 5**6 + 1 - 2 * 125 - (125 + 1) - (25 + 1 + 2 * 5))
        self.assertEqual(v, -2 * 5)

    @parameterized.parameters((6, 1, 2), (2, 0, 2), (2, 1, 0))
    def test_invalid_inputs(self, q: int, genus: int, d: int) -> None:
        """Test that bad q, genus or d are refused."""
        with self.assertRaises(ValueError):
            weil_feasibility(q, genus, d)

    @parameterized.parameters((2, 1, 5), (3, 1, 3), (2, 2, 7), (3, 2, 5))
    def test_guaranteed_means_every_candidate_has_a_new_point(
        self, q: int, genus: int, d: int
    ) -> None:
        """Test that the first smooth candidates all have new points when guaranteed."""
        self.assertEqual(weil_feasibility(q, genus, d), WeilVerdict.GUARANTEED)
        field = FieldDescriptor.prime(q)
        curves = itertools.islice(candidate_models(field, genus), SPOT_CHECK_CANDIDATES)
        for curve in curves:
            self.assertGreater(new_point_census(curve, d).new_point_count, 0, str(curve))


if __name__ == "__main__":
    unittest.main()
