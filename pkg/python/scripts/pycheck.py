#!/usr/bin/env python3
"""Type check, lint and format the newpoints packages.

Example Usage:
    ```bash
    python -m python.scripts.pycheck
    python -m python.scripts.pycheck -- python/algebra/poly.py
    python -m python.scripts.pycheck --nofix
    ```
"""

import os
import subprocess
from pathlib import Path
from typing import List, Sequence, Tuple

from absl import app, flags, logging

FLAGS = flags.FLAGS

flags.DEFINE_bool("fix", True, "Let ruff rewrite files instead of only reporting")

PACKAGES = (
    "algebra",
    "analysis",
    "cli",
    "constructors",
    "curves",
    "families",
    "finite_lab",
    "integration_tests",
    "scripts",
)

REPO_ROOT = Path(__file__).resolve().parents[2]


def default_targets() -> List[str]:
    """Every package directory under python/ that exists."""
    return [
        str(Path("python") / package)
        for package in PACKAGES
        if (REPO_ROOT / "python" / package).is_dir()
    ]


def build_checks(targets: Sequence[str], fix: bool) -> List[Tuple[List[str], str]]:
    """The commands to run over targets, each with a description for the log."""
    lint = ["ruff", "check", *targets]
    fmt = ["ruff", "format", *targets]
    if fix:
        lint.insert(2, "--fix")
    else:
        fmt.insert(2, "--check")
    return [
        (["pyrefly", "check", *targets], "Type checking"),
        (lint, "Linting"),
        (fmt, "Formatting"),
    ]


def run_command(cmd: List[str], description: str, env: dict[str, str]) -> bool:
    """Run a check and log its output; False when it fails or is missing."""
    logging.info("Running %s...", description)
    try:
        result = subprocess.run(
            cmd, check=True, capture_output=True, text=True, env=env, cwd=REPO_ROOT
        )
    except FileNotFoundError:
        logging.error("%s failed: %s is not installed", description, cmd[0])
        return False
    except subprocess.CalledProcessError as e:
        logging.error("%s failed:", description)
        for stream in (e.stdout, e.stderr):
            if stream:
                logging.error(stream)
        return False
    if result.stdout.strip():
        logging.info(result.stdout)
    return True


def main(argv: List[str]) -> int:
    targets = [f for f in argv[1:] if f.endswith(".py")] or default_targets()
    env = os.environ.copy()
    existing = env.get("PYTHONPATH", "")
    env["PYTHONPATH"] = os.pathsep.join(p for p in (str(REPO_ROOT), existing) if p)

    results = [run_command(cmd, desc, env) for cmd, desc in build_checks(targets, FLAGS.fix)]
    if all(results):
        logging.info("Python checks complete")
        return 0
    logging.error("Some Python checks failed")
    return 1


if __name__ == "__main__":
    app.run(main)
