"""Tests for the type check and lint runner."""

import subprocess
import unittest
from unittest.mock import patch

from python.scripts.pycheck import build_checks, default_targets, run_command


class BuildChecksTest(unittest.TestCase):
    """Test cases for build_checks and default_targets."""

    def test_fix_mode(self) -> None:
        """Test that ruff check gets --fix and format rewrites files."""
        checks = build_checks(["python/algebra"], fix=True)

        self.assertEqual([d for _, d in checks], ["Type checking", "Linting", "Formatting"])
        self.assertEqual(checks[1][0], ["ruff", "check", "--fix", "python/algebra"])
        self.assertEqual(checks[2][0], ["ruff", "format", "python/algebra"])

    def test_report_mode(self) -> None:
        """Test that format only checks without --fix."""
        checks = build_checks(["python/cli"], fix=False)

        self.assertEqual(checks[1][0], ["ruff", "check", "python/cli"])
        self.assertEqual(checks[2][0], ["ruff", "format", "--check", "python/cli"])

    def test_default_targets(self) -> None:
        """Test that the package directories are found."""
        targets = default_targets()

        self.assertIn("python/algebra", targets)
        self.assertIn("python/finite_lab", targets)


class RunCommandTest(unittest.TestCase):
    """Test cases for run_command."""

    @patch("python.scripts.pycheck.subprocess.run")
    def test_failure(self, mock_run) -> None:
        """Test that a failing check returns False."""
        mock_run.side_effect = subprocess.CalledProcessError(1, ["ruff"], "E501", "")

        self.assertFalse(run_command(["ruff", "check"], "Linting", {}))

    @patch("python.scripts.pycheck.subprocess.run")
    def test_missing_tool(self, mock_run) -> None:
        """Test that a missing executable returns False."""
        mock_run.side_effect = FileNotFoundError("pyrefly")

        self.assertFalse(run_command(["pyrefly", "check"], "Type checking", {}))

    @patch("python.scripts.pycheck.subprocess.run")
    def test_success(self, mock_run) -> None:
        """Test that a passing check returns True."""
        mock_run.return_value = subprocess.CompletedProcess(["ruff"], 0, "", "")

        self.assertTrue(run_command(["ruff", "check"], "Linting", {}))


if __name__ == "__main__":
    unittest.main()
