"""Integration tests that build curves from the command line and re-verify the written reports."""

import json
import os
from fractions import Fraction
from typing import Any, Dict

from absl.testing import absltest, parameterized

from python.cli.commands import CommandSettings
from python.cli.main import run
from python.constructors.general import genus_for_degree


def _cyclotomic_prime(p: int) -> str:
    """Phi_p as a JSON coefficient array."""
    return json.dumps([1] * p)


class ConstructVerifyIntegrationTest(parameterized.TestCase):
    """Tests that every written report passes verify in a separate invocation."""

    def setUp(self) -> None:
        super().setUp()
        self.directory = self.create_tempdir().full_path

    def _construct(self, name: str, settings: CommandSettings) -> Dict[str, Any]:
        """Run construct into a file, verify that file, and return the parsed report.

        Args:
            name: File name inside the test directory
            settings: Flags of the construct command

        Returns:
            The report as plain JSON
        """
        path = os.path.join(self.directory, name)
        self.assertEqual(run("construct", settings, path), 0, f"construct {settings.ext}")
        verification = os.path.join(self.directory, f"{name}.verification")
        self.assertEqual(
            run("verify", CommandSettings(args=(path,)), verification),
            0,
            f"verify {settings.ext}",
        )
        with open(path, encoding="utf-8") as f:
            return json.load(f)

    @parameterized.named_parameters(
        ("septic", "x^7 - 2", 7),
        ("octic", "x^8 + x^3 + 1", 8),
        ("phi11", _cyclotomic_prime(11), 10),
        ("phi13", _cyclotomic_prime(13), 12),
        ("phi31", _cyclotomic_prime(31), 30),
    )
    def test_general_construction(self, ext: str, d: int) -> None:
        """Test that the genus follows d = 4q + j and every point reaches residue degree d."""
        settings = CommandSettings(ext=(ext,), method="general")
        report = self._construct(f"general_{d}.json", settings)

        self.assertEqual(report["genus"], genus_for_degree(d))
        self.assertEqual(report["extras"]["degree"], str(d))
        for point in report["points"]:
            self.assertTrue(point["certificate"]["on_curve"])
            self.assertEqual(point["certificate"]["residue_degree"], d)

    @parameterized.named_parameters(("septic", "x^7 - 2"), ("octic", "x^8 + x^3 + 1"))
    def test_seeds_give_distinct_j_invariants(self, ext: str) -> None:
        """Test that seeds 0..9 give ten distinct j-invariants."""
        j_values = set()
        for seed in range(10):
            settings = CommandSettings(ext=(ext,), method="general", seed=seed)
            report = self._construct(f"seed_{seed}.json", settings)
            self.assertEqual(report["genus"], 1)
            j_values.add(report["extras"]["j"])

        self.assertLen(j_values, 10)

    def test_repeated_extension_padding(self) -> None:
        """Test two points over Q[x]/(x^5 - x - 1) on one genus-one curve."""
        settings = CommandSettings(ext=("x^5 - x - 1", "x^5 - x - 1"))
        report = self._construct("quintic_pair.json", settings)

        self.assertEqual(report["method"], "general")
        self.assertEqual(report["extensions"][0]["multiplicity"], 2)
        self.assertEqual(len(report["points"]), 2)

    def test_tracezero_over_rational_functions(self) -> None:
        """Test a degree-7 point on a smooth genus-one curve over F_2(t)."""
        settings = CommandSettings(field="Fpt:2", ext=("x^7 + x + t",), method="tracezero")
        report = self._construct("tracezero.json", settings)

        self.assertEqual(report["field"], "Fpt:2")
        self.assertEqual(report["genus"], 1)
        self.assertEqual(report["points"][0]["certificate"]["degree"], 7)
        self.assertTrue(report["points"][0]["certificate"]["on_curve"])

    def test_cubic9(self) -> None:
        """Test a degree-9 point on a smooth plane cubic."""
        settings = CommandSettings(ext=("x^9 - x - 1",), method="cubic9")
        report = self._construct("cubic9.json", settings)

        self.assertEqual(report["curve"]["kind"], "plane_cubic")
        self.assertEqual(report["genus"], 1)
        self.assertEqual(report["points"][0]["certificate"]["residue_degree"], 9)

    def test_auto_method(self) -> None:
        """Test that the default method for one extension is auto."""
        report = self._construct("auto.json", CommandSettings(ext=("x^7 - 2",)))

        self.assertEqual(report["genus"], 1)
        self.assertEqual(report["points"][0]["certificate"]["status"], "NEW")

    def test_tampered_file_fails_in_fresh_invocation(self) -> None:
        """Test that verify exits with 1 after an x-coordinate is edited on disk."""
        path = os.path.join(self.directory, "tampered.json")
        run("construct", CommandSettings(ext=("x^7 - 2",), method="general"), path)
        with open(path, encoding="utf-8") as f:
            report = json.load(f)
        x = report["points"][0]["coords"][0]
        x[0] = str(Fraction(x[0]) + 1)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(report, f)

        output = os.path.join(self.directory, "tampered.verification")
        self.assertEqual(run("verify", CommandSettings(args=(path,)), output), 1)


if __name__ == "__main__":
    absltest.main()
