"""Integration tests that run the explicit families end to end and re-verify their documents."""

from fractions import Fraction

from absl.testing import absltest, parameterized

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.algebra.sqrt_decomp import approx_sqrt
from python.cli.commands import CommandSettings, cmd_family
from python.cli.documents import ReportDocument
from python.cli.report_builder import family_document
from python.cli.verify import verify_report
from python.families.artin_schreier import (
    DEFAULT_PAIRS,
    ArtinSchreierVariant,
    discriminant_proportionality,
    substitution_divisible,
)
from python.families.registry import FamilyRegistry

Q = FieldDescriptor.rationals()
X = Poly.x(Q)


class FamilyIntegrationTest(parameterized.TestCase):
    """Tests that family reports hold their identities and survive serialization."""

    def _assert_verifies(self, document: ReportDocument) -> None:
        reparsed = ReportDocument.model_validate_json(document.model_dump_json())
        failed = [f"{c.name}: {c.detail}" for c in verify_report(reparsed) if not c.passed]
        self.assertEqual(failed, [])

    def test_zeta60_decomposition(self) -> None:
        """Test ell = -(1/4)x^3 - (3/8)x^2 - (1/4)x - 15/64 for the 60th roots of unity."""
        m = (X**2 + 1) * (X**2 + X + 1) * (X**4 + X**3 + X**2 + X + 1)

        self.assertEqual(
            approx_sqrt(m).ell,
            Poly(Q, [Fraction(-15, 64), Fraction(-1, 4), Fraction(-3, 8), Fraction(-1, 4)]),
        )

    def test_zeta60_composed_point(self) -> None:
        """Test that P + Q + R has degree 16 and its Weierstrass report re-verifies."""
        document, code = cmd_family(CommandSettings(args=("zeta60",)))

        self.assertEqual(code, 0)
        self.assertEqual(document.curve.kind, "weierstrass")
        self.assertEqual(document.points[0].certificate.residue_degree, 16)

    @parameterized.parameters(*DEFAULT_PAIRS)
    def test_twelve_divisibility(self, a: int, b: int) -> None:
        """Test that x^12 - a x - b divides f(x^5)."""
        self.assertTrue(substitution_divisible(ArtinSchreierVariant.TWELVE, 12, a, b))

    def test_thirteen_point(self) -> None:
        """Test (alpha^5, alpha^35) on the quartic model for ell = 13."""
        report = FamilyRegistry.run_family("artin_schreier", ell=13, a=1, b=1, variant="13")

        x, y = report.points[0].coords
        self.assertEqual(y, x**7)
        self.assertTrue(report.passed, report.failed_checks)
        self._assert_verifies(family_document(report))

    def test_kummer11(self) -> None:
        """Test f(alpha) = 0 and (alpha, alpha^4) on the cubic for m = 2."""
        report = FamilyRegistry.run_family("kummer11", m=2)

        self.assertTrue(report.check("(alpha, alpha^4) on curve").passed)
        self._assert_verifies(family_document(report))

    @parameterized.parameters(13, 19)
    def test_h_identity(self, ell: int) -> None:
        """Test x^ell - g^2/4 = (x - 1/4) h^2 with h(1/w) = 0."""
        report = FamilyRegistry.run_family("h_identity", ell=ell)

        self.assertTrue(report.passed, report.failed_checks)

    def test_fermat_quotient(self) -> None:
        """Test the three points for (ell, a) = (7, 2)."""
        report = FamilyRegistry.run_family("fermat_quotient", ell=7, a=2)

        self.assertEqual(len(report.points), 3)
        self.assertTrue(report.all_new)
        self._assert_verifies(family_document(report))

    @parameterized.parameters((19, 2), (31, 5))
    def test_cyclotomic_special_genus(self, p: int, genus: int) -> None:
        """Test the genus of the special cyclotomic curve."""
        report = FamilyRegistry.run_family("cyclotomic_special", p=p)

        self.assertEqual(report.genus, genus)
        self._assert_verifies(family_document(report))

    @parameterized.parameters(
        (13, 2), (19, 2), (31, 2), (37, 2), (43, 2), (11, 1), (17, 1), (23, 1), (29, 1)
    )
    def test_cyclotomic_special_order(self, p: int, order: int) -> None:
        """Test the order of vanishing of t at x = 1."""
        report = FamilyRegistry.run_family("cyclotomic_special", p=p)

        self.assertEqual(report.extras["order"], order)

    @parameterized.parameters((3, 1, 4, 1), (5, 1, 3, 1))
    def test_characteristic_p(self, p: int, m_exp: int, d: int, g: int) -> None:
        """Test the symbolic point identity over F_p(u)."""
        settings = CommandSettings(args=("charp",), p=p, m_exp=m_exp, d=d, genus=g)
        document, code = cmd_family(settings)

        self.assertEqual(code, 0)
        self.assertEqual(document.genus, g)

    @parameterized.parameters((ArtinSchreierVariant.TWELVE,), (ArtinSchreierVariant.THIRTEEN,))
    def test_discriminant_proportionality(self, variant: ArtinSchreierVariant) -> None:
        """Test one fixed ratio between computed and closed-form discriminants."""
        result = discriminant_proportionality(variant)

        self.assertTrue(result.passed, result.witness)

    def test_fermat_quotient_grid(self) -> None:
        """Test every unconditional identity on the Fermat-quotient regression grid."""
        grid = [{"ell": ell, "a": a} for ell in (5, 7, 11) for a in range(1, ell - 1)]
        reports = FamilyRegistry.run_grid("fermat_quotient", grid)

        self.assertEqual(len(reports), len(grid))
        self.assertEqual([r.params for r in reports if not r.passed], [])


if __name__ == "__main__":
    absltest.main()
