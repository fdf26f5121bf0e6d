"""Tests for report documents and their independent re-verification."""

import unittest
from fractions import Fraction
from typing import Any

from python.algebra.fields import FieldDescriptor
from python.algebra.poly import Poly
from python.cli.documents import ReportDocument
from python.cli.report_builder import construction_document, extension_documents, family_document
from python.cli.verify import residue_degree, verify_report
from python.constructors.extension_spec import ExtensionSpec
from python.constructors.general import construct_general
from python.families.kummer11 import family_kummer11

Q = FieldDescriptor.rationals()
SEPTIC = Poly(Q, [-2, 0, 0, 0, 0, 0, 0, 1])


def _septic_document() -> ReportDocument:
    report = construct_general(ExtensionSpec.single(SEPTIC))
    return construction_document(report, extension_documents(["x^7 - 2"], [SEPTIC]))


def _bump(value: Any) -> Any:
    """Add one to the first rational leaf of an encoded element."""
    if isinstance(value, list):
        return [_bump(value[0])] + value[1:]
    return str(Fraction(value) + 1)


def _replace_point(document: ReportDocument, **update: Any) -> ReportDocument:
    point = document.points[0].model_copy(update=update)
    return document.model_copy(update={"points": [point] + document.points[1:]})


def _failed(document: ReportDocument) -> list:
    return [c.name for c in verify_report(document) if not c.passed]


class ConstructionDocumentTest(unittest.TestCase):
    """Test cases for construction_document."""

    @classmethod
    def setUpClass(cls) -> None:
        cls.document = _septic_document()

    def test_fields(self) -> None:
        """Test the header of a genus-one report over Q(2^(1/7))."""
        document = self.document

        self.assertEqual(document.command, "construct")
        self.assertEqual(document.field, "Q")
        self.assertEqual(document.method, "general")
        self.assertEqual(document.genus, 1)
        self.assertEqual(document.schema_version, "1.0")
        self.assertEqual(document.extras["degree"], "7")
        self.assertEqual(len(document.points), 1)
        self.assertEqual(document.points[0].certificate.status, "NEW")
        self.assertEqual(document.points[0].certificate.residue_degree, 7)

    def test_json_round_trip(self) -> None:
        """Test that the document survives serialization unchanged."""
        text = self.document.model_dump_json()

        self.assertEqual(ReportDocument.model_validate_json(text), self.document)
        self.assertNotIn(".", "".join(self.document.points[0].coords[0]))

    def test_repeated_extension_is_merged(self) -> None:
        """Test that two equal --ext values become one entry of multiplicity 2."""
        extensions = extension_documents(["x^7-2", "x^7 - 2"], [SEPTIC, SEPTIC])

        self.assertEqual(len(extensions), 1)
        self.assertEqual(extensions[0].multiplicity, 2)
        self.assertEqual(extensions[0].text, "x^7-2")


class VerifyReportTest(unittest.TestCase):
    """Test cases for verify_report."""

    @classmethod
    def setUpClass(cls) -> None:
        cls.document = _septic_document()

    def test_own_output_verifies(self) -> None:
        """Test that a freshly built report passes every check."""
        checks = verify_report(self.document)

        self.assertTrue(checks)
        self.assertEqual([c.name for c in checks if not c.passed], [])
        names = {c.name for c in checks}
        self.assertIn("curve is smooth", names)
        self.assertIn("genus", names)

    def test_reparsed_output_verifies(self) -> None:
        """Test that the JSON text alone is enough to verify."""
        reparsed = ReportDocument.model_validate_json(self.document.model_dump_json())

        self.assertEqual(_failed(reparsed), [])

    def test_tampered_y_coordinate(self) -> None:
        """Test that changing y moves the point off the curve."""
        point = self.document.points[0]
        tampered = _replace_point(self.document, coords=[point.coords[0], _bump(point.coords[1])])

        failed = _failed(tampered)
        self.assertTrue(any(name.endswith("on curve") for name in failed))

    def test_tampered_residue_degree(self) -> None:
        """Test that an inflated residue degree is caught."""
        certificate = self.document.points[0].certificate.model_copy(
            update={"residue_degree": 14}
        )
        tampered = _replace_point(self.document, certificate=certificate)

        self.assertTrue(any(name.endswith("residue degree") for name in _failed(tampered)))

    def test_tampered_status(self) -> None:
        """Test that a new point claimed NOT_NEW is caught."""
        certificate = self.document.points[0].certificate.model_copy(
            update={"status": "NOT_NEW"}
        )
        tampered = _replace_point(self.document, certificate=certificate)

        self.assertTrue(any(name.endswith("newness") for name in _failed(tampered)))

    def test_tampered_genus(self) -> None:
        """Test that a wrong genus claim is caught."""
        tampered = self.document.model_copy(update={"genus": 2})

        self.assertIn("genus", _failed(tampered))

    def test_tampered_extension(self) -> None:
        """Test that a reducible extension is caught."""
        reducible = [str(c) for c in (-1, 0, 0, 0, 0, 0, 0, 1)]
        tampered = _replace_point(self.document, extension=reducible)

        self.assertTrue(any(name.endswith("extension") for name in _failed(tampered)))

    def test_undecodable_point(self) -> None:
        """Test that garbage coordinates fail the decode check."""
        tampered = _replace_point(self.document, coords=["x", "y"])

        self.assertTrue(any(name.endswith("decodes") for name in _failed(tampered)))


class ResidueDegreeTest(unittest.TestCase):
    """Test cases for residue_degree."""

    def test_rational_point(self) -> None:
        """Test that a K-rational point has residue degree 1."""
        self.assertEqual(residue_degree(Q, (Fraction(1), Fraction(2)), []), 1)


class FamilyDocumentTest(unittest.TestCase):
    """Test cases for family_document."""

    def test_kummer11_verifies(self) -> None:
        """Test that the degree-11 point on the m = 2 cubic re-verifies."""
        document = family_document(family_kummer11(2))

        self.assertEqual(document.command, "family")
        self.assertEqual(document.params, {"m": "2"})
        self.assertEqual(document.curve.kind, "plane_cubic")
        self.assertTrue(all(c.passed for c in document.checks))
        self.assertEqual(_failed(document), [])

    def test_failed_identity_fails_verification(self) -> None:
        """Test that a failed unconditional identity makes the report fail."""
        document = family_document(family_kummer11(2))
        check = document.checks[0].model_copy(update={"passed": False})
        tampered = document.model_copy(update={"checks": [check] + document.checks[1:]})

        self.assertIn(f"identity {check.name}", _failed(tampered))


if __name__ == "__main__":
    unittest.main()
