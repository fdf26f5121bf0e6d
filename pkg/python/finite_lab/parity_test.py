"""Tests for the root-number parity calculator."""

import itertools
import math
import unittest
from typing import Iterator, Tuple

import sympy
from absl.testing import parameterized

from python.finite_lab.exceptions import NotApplicableError
from python.finite_lab.parity import factor_count, neumann_setzer_parity, parity_scan, u_form

ORACLE_PAIRS = 50


def coprime_pairs() -> Iterator[Tuple[int, int]]:
    for ell in sympy.primerange(3, 30):
        for p in sympy.primerange(2, 400):
            if p != ell and math.gcd(ell, p - 1) == 1:
                yield ell, p


class NeumannSetzerParityTest(parameterized.TestCase):
    """Test cases for neumann_setzer_parity."""

    def test_thirteen_and_seventy_three(self) -> None:
        """Test that l = 13, p = 73 gives f = 4, s = 4 and root number -1 over L."""
        report = neumann_setzer_parity(13, 73)
        self.assertEqual((report.f, report.s), (4, 4))
        self.assertEqual((report.omega_q, report.omega_l), (1, -1))
        self.assertTrue(report.predicts_new_point)
        self.assertEqual(report.u_form, 3)

    def test_no_prediction(self) -> None:
        """Test that l = 3, p = 5 gives s = 2 and equal root numbers."""
        report = neumann_setzer_parity(3, 5)
        self.assertEqual((report.f, report.s, report.omega_l), (2, 2, 1))
        self.assertFalse(report.predicts_new_point)
        self.assertIsNone(report.u_form)

    def test_not_applicable(self) -> None:
        """Test that l dividing p - 1 is refused."""
        with self.assertRaises(NotApplicableError) as context:
            neumann_setzer_parity(5, 11)
        self.assertIn("5 divides 11 - 1", context.exception.reason)

    @parameterized.parameters((2, 3), (9, 11), (13, 13), (13, 15))
    def test_invalid(self, ell: int, p: int) -> None:
        """Test that ell and p must be distinct primes with ell odd."""
        with self.assertRaises(ValueError):
            neumann_setzer_parity(ell, p)

    def test_invariants(self) -> None:
        """Test that f divides l - 1, s >= 2 and the root numbers are signs."""
        for ell, p in itertools.islice(coprime_pairs(), ORACLE_PAIRS):
            report = neumann_setzer_parity(ell, p)
            self.assertEqual((ell - 1) % report.f, 0)
            self.assertGreaterEqual(report.s, 2)
            self.assertIn(report.omega_l, (-1, 1))

    def test_s_counts_factors_of_x_ell_minus_one(self) -> None:
        """Test s against distinct-degree factorization of x^l - 1 mod p."""
        for ell, p in itertools.islice(coprime_pairs(), ORACLE_PAIRS):
            self.assertEqual(neumann_setzer_parity(ell, p).s, factor_count(ell, p), (ell, p))

    @parameterized.parameters((7, 73, 2), (13, 73, 3), (11, 73, 5), (13, 113, 6))
    def test_kummer_factorization_matches(self, ell: int, p: int, m: int) -> None:
        """Test that x^l - m splits like x^l - 1 when l does not divide p - 1."""
        self.assertEqual(factor_count(ell, p, m), neumann_setzer_parity(ell, p).s)


class UFormTest(parameterized.TestCase):
    """Test cases for u_form and parity_scan."""

    @parameterized.parameters((73, 3), (89, 5), (113, 7), (64, 0), (71, None), (11, None))
    def test_u_form(self, p: int, u: object) -> None:
        """Test the solution of p = u^2 + 64."""
        self.assertEqual(u_form(p), u)

    def test_scan(self) -> None:
        """Test the primes u^2 + 64 with u <= 20 admissible for l = 13."""
        reports = parity_scan(13, 20)
        self.assertEqual([r.p for r in reports], [73, 89, 113, 233, 353])
        self.assertEqual([r.u_form for r in reports], [3, 5, 7, 13, 17])


if __name__ == "__main__":
    unittest.main()
