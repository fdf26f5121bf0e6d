"""Tests for command-line polynomial and curve parsing."""

import unittest
from fractions import Fraction

from absl.testing import parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.cli.exceptions import InputError
from python.cli.poly_parser import parse_curve, parse_expression, parse_poly, parse_scalar

Q = FieldDescriptor.rationals()
F2 = FieldDescriptor.prime(2)
F3 = FieldDescriptor.prime(3)
F4 = FieldDescriptor.finite(2, 2)
F3T = FieldDescriptor.rational_function(3)


class ParsePolyTest(parameterized.TestCase):
    """Test cases for parse_poly."""

    def test_ascii_over_rationals(self) -> None:
        """Test that x^7 - 2 becomes the little-endian coefficient list."""
        self.assertEqual(parse_poly("x^7 - 2", Q), Poly(Q, [-2, 0, 0, 0, 0, 0, 0, 1]))

    def test_rational_coefficients(self) -> None:
        """Test that num/den coefficients stay exact."""
        poly = parse_poly("x^2 - 1/3", Q)
        self.assertEqual(poly.coeff(0), Fraction(-1, 3))

    def test_implicit_multiplication(self) -> None:
        """Test that 2x means 2*x."""
        self.assertEqual(parse_poly("2x^2 + 3x", Q), Poly(Q, [0, 3, 2]))

    @parameterized.parameters(
        ("[-2, 0, 1]", [-2, 0, 1]),
        ('["1/2", 0, 1]', [Fraction(1, 2), 0, 1]),
        ("[]", []),
    )
    def test_json_arrays(self, text: str, coeffs: list) -> None:
        """Test that JSON arrays are read little-endian."""
        self.assertEqual(parse_poly(text, Q), Poly(Q, coeffs))

    def test_reduction_mod_p(self) -> None:
        """Test that coefficients are reduced into F_p."""
        self.assertEqual(parse_poly("3x^2 + 4x + 1", F3), Poly(F3, [1, 1]))

    def test_generator_of_finite_field(self) -> None:
        """Test that a names the generator of F_q over F_p."""
        poly = parse_poly("x^2 + a*x + 1", F4)
        self.assertEqual(poly.coeff(1), F4.generator())
        self.assertEqual(poly.degree, 2)

    def test_finite_field_json_coefficients(self) -> None:
        """Test that F_q coefficients may be given as integer lists."""
        poly = parse_poly("[[1, 1], [0, 1], 1]", F4)
        self.assertEqual(poly.coeff(0), F4.generator() + 1)
        self.assertEqual(poly.coeff(1), F4.generator())

    def test_rational_function_coefficients(self) -> None:
        """Test that t and 1/t map into F_p(t)."""
        poly = parse_poly("x^2 - t", F3T)
        self.assertEqual(poly.coeff(0), -F3T.generator())
        inverse = parse_poly("x - 1/t", F3T).coeff(0)
        self.assertEqual(inverse * F3T.generator(), F3T.coerce(-1))

    @parameterized.parameters(
        "",
        "x^^2",
        "x^2 +",
        "[1, 2",
        "x*y + 1",
        "x^(1/2)",
        "1/x",
        "[1.5, 1]",
    )
    def test_malformed_input(self, text: str) -> None:
        """Test that malformed polynomials raise InputError."""
        with self.assertRaises(InputError):
            parse_poly(text, Q)

    def test_generator_rejected_over_prime_field(self) -> None:
        """Test that a is not a coefficient symbol over F_p."""
        with self.assertRaises(InputError):
            parse_poly("x + a", F2)

    def test_denominator_divisible_by_p(self) -> None:
        """Test that 1/2 has no image in characteristic 2."""
        with self.assertRaises(InputError) as context:
            parse_poly("x^2 + 1/2", F2)

        self.assertIn("x^2 + 1/2", str(context.exception))

    def test_input_error_is_value_error(self) -> None:
        """Test that InputError can be handled as ValueError."""
        with self.assertRaises(ValueError):
            parse_expression("(")


class ParseScalarTest(unittest.TestCase):
    """Test cases for parse_scalar."""

    def test_rational(self) -> None:
        """Test a rational scalar."""
        self.assertEqual(parse_scalar("-15/64", Q), Fraction(-15, 64))

    def test_finite_field(self) -> None:
        """Test a scalar of F_4."""
        self.assertEqual(parse_scalar("a + 1", F4), F4.generator() + 1)

    def test_rejects_variable(self) -> None:
        """Test that x is not a scalar."""
        with self.assertRaises(InputError):
            parse_scalar("x", Q)


class ParseCurveTest(parameterized.TestCase):
    """Test cases for parse_curve."""

    def test_characteristic_two(self) -> None:
        """Test that y^2 + y = x^3 + x + 1 over F_2 gives Q = 1, R = x^3 + x + 1."""
        curve = parse_curve("y^2+y=x^3+x+1", F2)

        self.assertEqual(curve.Q, Poly(F2, [1]))
        self.assertEqual(curve.R, Poly(F2, [1, 1, 0, 1]))
        self.assertEqual(curve.genus, 1)

    def test_terms_on_both_sides(self) -> None:
        """Test that terms may sit on either side of the equation."""
        curve = parse_curve("y^2 - x^5 = -x*y + 1", Q)

        self.assertEqual(curve.Q, Poly(Q, [0, 1]))
        self.assertEqual(curve.R, Poly(Q, [1, 0, 0, 0, 0, 1]))

    def test_leading_coefficient_is_divided_out(self) -> None:
        """Test that 2y^2 = x^3 + 1 is normalized to y^2 = (x^3 + 1)/2."""
        curve = parse_curve("2y^2 = x^3 + 1", Q)

        self.assertFalse(curve.Q)
        self.assertEqual(curve.R, Poly(Q, [Fraction(1, 2), 0, 0, Fraction(1, 2)]))

    @parameterized.parameters(
        "y^2 x^3",
        "y^2 = x^3 = 1",
        "y^3 = x^3 + 1",
        "y = x^3 + 1",
        "x*y^2 = x^3 + 1",
        "y^2 = z^3 + 1",
        "3y^2 = x^3 + 1 + 3y^2",
    )
    def test_rejects_non_double_covers(self, text: str) -> None:
        """Test that equations not of the form y^2 + Q y = R raise InputError."""
        with self.assertRaises(InputError):
            parse_curve(text, Q)

    def test_vanishing_leading_coefficient(self) -> None:
        """Test that 2y^2 is rejected in characteristic 2."""
        with self.assertRaises(InputError):
            parse_curve("2y^2 + y = x^3", F2)


if __name__ == "__main__":
    unittest.main()
