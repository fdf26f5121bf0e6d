"""Tests for quartic and ternary cubic invariants."""

import unittest
from fractions import Fraction

import sympy
from absl.testing import parameterized
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from python.algebra.exceptions import UnsupportedCharacteristicError
from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.analysis.invariants import (
    generic_invariants,
    invariant_identity_residual,
    j_invariant,
    ternary_cubic_discriminant,
)
from python.analysis.weierstrass import WeierstrassCurve
from python.curves.models import PlaneCubic

Q = FieldDescriptor.rationals()


class JInvariantTest(parameterized.TestCase):
    """Test cases for j_invariant."""

    def test_quartic_x4_plus_1(self) -> None:
        """Test I = 12, J = 0, disc = 256 and j = 1728 for x^4 + 1."""
        data = j_invariant(Poly(Q, [1, 0, 0, 0, 1]))
        self.assertEqual((data.I, data.J, data.disc, data.j), (12, 0, 256, 1728))

    def test_cubic_x3_minus_x(self) -> None:
        """Test that x^3 - x gives j = 1728."""
        self.assertEqual(j_invariant(Poly(Q, [0, -1, 0, 1])).j, 1728)

    @settings(max_examples=100, derandomize=True, deadline=None)
    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_short_cubic_closed_form(self, A, B) -> None:
        """Test j = 6912 A^3 / (4A^3 + 27B^2) against the Weierstrass j."""
        assume(4 * A**3 + 27 * B**2 != 0)
        data = j_invariant(Poly(Q, [B, A, 0, 1]))
        self.assertEqual(data.j, Fraction(6912 * A**3, 4 * A**3 + 27 * B**2))
        self.assertEqual(data.j, WeierstrassCurve.short(Q, A, B).j_invariant)

    @settings(max_examples=100, derandomize=True, deadline=None)
    @given(
        st.sampled_from([0, 5, 7, 11, 13]),
        st.lists(st.integers(-20, 20), min_size=4, max_size=4),
    )
    def test_cubic_matches_weierstrass_model(self, p, coeffs) -> None:
        """Test that y^2 = b x^3 + c x^2 + d x + e matches its monic model."""
        field = Q if p == 0 else FieldDescriptor.prime(p)
        e, d, c, b = (field.coerce(v) for v in coeffs)
        assume(b)
        ell = Poly(field, [e, d, c, b])
        cubic_disc = (
            c * c * d * d
            - 4 * b * d**3
            - 4 * c**3 * e
            - 27 * b * b * e * e
            + 18 * b * c * d * e
        )
        assume(cubic_disc)
        model = WeierstrassCurve(field, 0, c, 0, b * d, b * b * e)
        self.assertEqual(j_invariant(ell).j, model.j_invariant)

    def test_characteristic_three(self) -> None:
        """Test that the formula is well defined over F_3."""
        F3 = FieldDescriptor.prime(3)
        data = j_invariant(Poly(F3, [1, 0, 1, 1]))
        model = WeierstrassCurve(F3, 0, 1, 0, 0, 1)
        self.assertEqual(data.j, model.j_invariant)

    def test_characteristic_two_refused(self) -> None:
        """Test that characteristic 2 is refused."""
        with self.assertRaises(UnsupportedCharacteristicError):
            j_invariant(Poly(FieldDescriptor.prime(2), [1, 1, 0, 1]))

    def test_singular_refused(self) -> None:
        """Test that a repeated root is refused."""
        x = Poly.x(Q)
        with self.assertRaises(ValueError):
            j_invariant((x - 1) ** 2 * (x + 1))

    @parameterized.parameters(3, 4)
    def test_invariant_identity(self, degree) -> None:
        """Test 4 I^3 - J^2 = 27 disc as a polynomial identity over Z."""
        self.assertEqual(invariant_identity_residual(degree), 0)

    def test_swapped_exponents_fail(self) -> None:
        """Test that 4 I^2 - J^3 is not 27 disc."""
        I, J, disc = generic_invariants(4)
        self.assertNotEqual(sympy.expand(4 * I**2 - J**3 - 27 * disc), 0)


class TernaryCubicDiscriminantTest(unittest.TestCase):
    """Test cases for ternary_cubic_discriminant."""

    def test_smooth_cubic_nonzero(self) -> None:
        """Test that y^2 z = x^3 + z^3 has nonzero discriminant."""
        cubic = PlaneCubic.from_affine(Q, {(0, 2): 1, (3, 0): -1, (0, 0): -1})
        self.assertNotEqual(ternary_cubic_discriminant(cubic), 0)

    def test_nodal_cubic_zero(self) -> None:
        """Test that y^2 z = x^3 + x^2 z has zero discriminant."""
        cubic = PlaneCubic.from_affine(Q, {(0, 2): 1, (3, 0): -1, (2, 0): -1})
        self.assertEqual(ternary_cubic_discriminant(cubic), 0)

    def test_scaling_degree_twelve(self) -> None:
        """Test that scaling the cubic by 2 scales the invariant by 2^12."""
        terms = {(0, 2): 1, (3, 0): -1, (1, 0): 1, (0, 0): -3}
        base = ternary_cubic_discriminant(PlaneCubic.from_affine(Q, terms))
        scaled = ternary_cubic_discriminant(
            PlaneCubic.from_affine(Q, {k: 2 * v for k, v in terms.items()})
        )
        self.assertEqual(scaled, 2**12 * base)

    def test_characteristic_three_refused(self) -> None:
        """Test that characteristic 3 is refused."""
        cubic = PlaneCubic.from_affine(
            FieldDescriptor.prime(3), {(0, 2): 1, (3, 0): -1, (0, 0): -1}
        )
        with self.assertRaises(UnsupportedCharacteristicError):
            ternary_cubic_discriminant(cubic)


if __name__ == "__main__":
    unittest.main()
