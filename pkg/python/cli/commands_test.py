"""Tests for the subcommands of the command-line tool."""

import unittest
from fractions import Fraction

from python.algebra.fields import FieldDescriptor
from python.analysis.weierstrass import WeierstrassCurve
from python.cli.commands import (
    EXIT_OK,
    CommandSettings,
    cmd_census,
    cmd_compose,
    cmd_construct,
    cmd_family,
    cmd_jinv,
    cmd_parity,
    family_params,
    weierstrass_from_model,
)
from python.cli.exceptions import InputError
from python.cli.poly_parser import parse_curve
from python.families.exceptions import FamilyParameterError

Q = FieldDescriptor.rationals()


class ConstructCommandTest(unittest.TestCase):
    """Test cases for cmd_construct."""

    def test_septic_general(self) -> None:
        """Test construct --ext 'x^7-2' --method general --seed 0."""
        document, code = cmd_construct(
            CommandSettings(ext=("x^7-2",), method="general", seed=0)
        )

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(document.genus, 1)
        self.assertEqual(document.seed, 0)
        self.assertEqual(document.extensions[0].poly, ["-2", "0", "0", "0", "0", "0", "0", "1"])

    def test_same_seed_same_document(self) -> None:
        """Test that the seed fixes the curve."""
        settings = CommandSettings(ext=("x^7-2",), method="general", seed=3)
        first, _ = cmd_construct(settings)
        second, _ = cmd_construct(settings)

        self.assertEqual(first.curve, second.curve)

    def test_repeated_quintic_pads_to_degree_ten(self) -> None:
        """Test that two copies of x^5 - x - 1 default to the general method with d = 10."""
        document, code = cmd_construct(CommandSettings(ext=("x^5-x-1", "x^5-x-1")))

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(document.method, "general")
        self.assertEqual(document.extras["degree"], "10")
        self.assertEqual(document.extensions[0].multiplicity, 2)
        self.assertEqual(len(document.points), 2)
        self.assertEqual(document.genus, 1)

    def test_missing_extension(self) -> None:
        """Test that construct needs --ext."""
        with self.assertRaises(InputError):
            cmd_construct(CommandSettings())

    def test_malformed_extension(self) -> None:
        """Test that a malformed polynomial is an input error."""
        with self.assertRaises(InputError):
            cmd_construct(CommandSettings(ext=("x^^7 - 2",)))


class FamilyCommandTest(unittest.TestCase):
    """Test cases for cmd_family and family_params."""

    def test_kummer11(self) -> None:
        """Test family kummer11 --m 2."""
        document, code = cmd_family(CommandSettings(args=("kummer11",), m="2"))

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(document.method, "kummer11")
        self.assertEqual(document.points[0].certificate.degree, 11)

    def test_params_follow_signature(self) -> None:
        """Test that only the flags a family accepts are passed."""
        settings = CommandSettings(ell=7, m="-3/2", a="2", p=5, genus=1, m_exp=1, d=4)

        self.assertEqual(family_params("kummer_alpha", settings)["m"], Fraction(-3, 2))
        self.assertEqual(set(family_params("kummer11", settings)), {"m"})
        self.assertEqual(family_params("fermat_quotient", settings), {"ell": 7, "a": 2})
        self.assertEqual(
            family_params("charp", settings), {"p": 5, "m_exp": 1, "d": 4, "g": 1}
        )

    def test_family_name_required(self) -> None:
        """Test that exactly one family name is expected."""
        with self.assertRaises(InputError):
            cmd_family(CommandSettings())

    def test_hypothesis_violation(self) -> None:
        """Test that m = 1 is refused by kummer11."""
        with self.assertRaises(FamilyParameterError):
            cmd_family(CommandSettings(args=("kummer11",), m="1"))


class CensusCommandTest(unittest.TestCase):
    """Test cases for cmd_census."""

    def test_supersingular_curve(self) -> None:
        """Test census --p 2 --genus 1 --d 4 --curve 'y^2+y=x^3+x+1'."""
        document, code = cmd_census(
            CommandSettings(p=2, n=1, genus=1, d=4, curve="y^2+y=x^3+x+1")
        )

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(document.counts, {1: 1, 2: 5, 4: 25})
        self.assertEqual(document.new_point_count, 20)
        self.assertEqual(document.closed_point_count, 5)
        self.assertEqual(document.weil_verdict, "unknown")
        self.assertIsNotNone(document.witness)
        self.assertEqual(document.witness.degree, 4)
        self.assertIsNone(document.examined)

    def test_search(self) -> None:
        """Test that census --search finds a genus-one curve over F_2 with a new quartic point."""
        document, code = cmd_census(CommandSettings(p=2, genus=1, d=4, search=True))

        self.assertEqual(code, EXIT_OK)
        self.assertGreater(document.new_point_count, 0)
        self.assertGreaterEqual(document.examined, 1)

    def test_genus_mismatch(self) -> None:
        """Test that --genus must match the curve."""
        with self.assertRaises(InputError):
            cmd_census(CommandSettings(p=2, genus=2, d=4, curve="y^2+y=x^3+x+1"))

    def test_requires_finite_field(self) -> None:
        """Test that a census over Q is refused."""
        with self.assertRaises(InputError):
            cmd_census(CommandSettings(d=4, curve="y^2=x^3+1"))

    def test_requires_degree(self) -> None:
        """Test that --d is required."""
        with self.assertRaises(InputError):
            cmd_census(CommandSettings(p=2, curve="y^2+y=x^3+x+1"))


class JInvariantCommandTest(unittest.TestCase):
    """Test cases for cmd_jinv."""

    def test_cubic(self) -> None:
        """Test that x^3 + x + 1 gives j = 6912/31."""
        document, _ = cmd_jinv(CommandSettings(poly="x^3 + x + 1"))

        self.assertEqual(document.j, "6912/31")
        self.assertEqual(document.poly, ["1", "1", "0", "1"])

    def test_quartic(self) -> None:
        """Test that x^4 + 1 gives I = 12, J = 0, disc = 256, j = 1728."""
        document, _ = cmd_jinv(CommandSettings(poly="x^4 + 1"))

        invariants = (document.I, document.J, document.disc, document.j)
        self.assertEqual(invariants, ("12", "0", "256", "1728"))


class ComposeCommandTest(unittest.TestCase):
    """Test cases for cmd_compose and weierstrass_from_model."""

    def test_disjoint_quadratics(self) -> None:
        """Test that (0, sqrt 2) + (1, sqrt 3) on y^2 = x^3 + 2 is new of degree 4."""
        document, code = cmd_compose(
            CommandSettings(
                curve="y^2 = x^3 + 2",
                ext=("x^2 - 2", "x^2 - 3"),
                x1="0",
                y1="x",
                x2="1",
                y2="x",
            )
        )

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(document.exponent_gcd, 2)
        self.assertTrue(document.torsion_free)
        self.assertEqual(document.point.certificate.residue_degree, 4)
        self.assertEqual(document.point.certificate.status, "NEW")

    def test_point_off_curve(self) -> None:
        """Test that a point not on the curve is an input error."""
        with self.assertRaises(InputError):
            cmd_compose(
                CommandSettings(
                    curve="y^2 = x^3 + 2",
                    ext=("x^2 - 2", "x^2 - 3"),
                    x1="1",
                    y1="x",
                    x2="1",
                    y2="x",
                )
            )

    def test_two_extensions_required(self) -> None:
        """Test that compose takes exactly two --ext flags."""
        with self.assertRaises(InputError):
            cmd_compose(CommandSettings(curve="y^2 = x^3 + 2", ext=("x^2 - 2",)))

    def test_long_weierstrass_form(self) -> None:
        """Test that a1, a2, a3, a4, a6 are read off the equation."""
        model = parse_curve("y^2 + x*y + 3y = x^3 - x^2 + 1/2 x + 5", Q)

        self.assertEqual(
            weierstrass_from_model(model),
            WeierstrassCurve(Q, 1, -1, 3, Fraction(1, 2), 5),
        )

    def test_not_weierstrass(self) -> None:
        """Test that a quartic right-hand side is refused."""
        with self.assertRaises(ValueError):
            weierstrass_from_model(parse_curve("y^2 = x^4 + 1", Q))


class ParityCommandTest(unittest.TestCase):
    """Test cases for cmd_parity."""

    def test_predicts_new_point(self) -> None:
        """Test parity --ell 13 --p 73."""
        document, code = cmd_parity(CommandSettings(ell=13, p=73))

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(document.predicts_new_point)
        self.assertEqual((document.ell, document.p), (13, 73))

    def test_requires_prime(self) -> None:
        """Test that --p is required."""
        with self.assertRaises(InputError):
            cmd_parity(CommandSettings(ell=13))


if __name__ == "__main__":
    unittest.main()
