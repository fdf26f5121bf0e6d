"""Tests for exact linear algebra helpers."""

import unittest
from fractions import Fraction

from absl.testing import parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.linalg import (
    bareiss_determinant,
    char_poly_coeffs,
    determinant,
    hessenberg_form,
    solve,
)

Q = FieldDescriptor.rationals()


def _matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


class CharPolyTest(parameterized.TestCase):
    """Test cases for the Hessenberg characteristic polynomial."""

    @parameterized.parameters(
        ([[2, 1], [1, 2]], [3, -4, 1]),
        ([[0, 0, 1], [1, 0, 0], [0, 1, 0]], [-1, 0, 0, 1]),
        ([[1, 2, 3], [0, 4, 5], [6, 0, 7]], [-16, 21, -12, 1]),
        ([[5]], [-5, 1]),
    )
    def test_char_poly(self, rows, expected) -> None:
        """Test characteristic polynomials against hand computations."""
        self.assertEqual(char_poly_coeffs(_matrix(rows), Q), expected)

    def test_hessenberg_form_zeros_below_subdiagonal(self) -> None:
        """Test that the reduced matrix is upper Hessenberg."""
        h = hessenberg_form(_matrix([[1, 2, 3, 4], [5, 6, 7, 8], [9, 1, 2, 3], [4, 5, 6, 8]]))
        for i in range(4):
            for j in range(i - 1):
                self.assertEqual(h[i][j], 0)

    def test_char_poly_over_finite_field(self) -> None:
        """Test the identity matrix over F_7."""
        f7 = FieldDescriptor.prime(7)
        one, zero = f7.one(), f7.zero()
        coeffs = char_poly_coeffs([[one, zero], [zero, one]], f7)
        self.assertEqual(coeffs, [1, -2, 1])


class SolveTest(unittest.TestCase):
    """Test cases for linear solving."""

    def test_unique_solution(self) -> None:
        """Test a regular 2x2 system."""
        self.assertEqual(solve(_matrix([[1, 1], [1, -1]]), [3, 1], Q), [2, 1])

    def test_inconsistent_system(self) -> None:
        """Test that an inconsistent system returns None."""
        self.assertIsNone(solve(_matrix([[1, 1], [2, 2]]), [1, 3], Q))

    def test_free_variables_are_zero(self) -> None:
        """Test an underdetermined system."""
        self.assertEqual(solve(_matrix([[1, 1]]), [2], Q), [2, 0])


class DeterminantTest(unittest.TestCase):
    """Test cases for determinants."""

    def test_gaussian_and_bareiss_agree(self) -> None:
        """Test both determinant routines on a matrix needing a pivot swap."""
        rows = _matrix([[0, 2, 3], [1, 4, 5], [6, 0, 7]])
        expected = -(2 * (7 - 30) - 3 * (0 - 24))
        self.assertEqual(determinant(rows, Q), expected)
        self.assertEqual(bareiss_determinant(rows, lambda a, b: a / b), expected)

    def test_singular(self) -> None:
        """Test that singular matrices have determinant zero."""
        rows = _matrix([[1, 2], [2, 4]])
        self.assertEqual(determinant(rows, Q), 0)
        self.assertEqual(bareiss_determinant(rows, lambda a, b: a / b), 0)


if __name__ == "__main__":
    unittest.main()
