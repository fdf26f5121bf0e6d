"""Command-line entry point for constructing and checking curves with new points.

Usage:
    python -m python.cli.main construct --field Q --ext "x^7 - 2" --method general
    python -m python.cli.main verify report.json
    python -m python.cli.main family kummer11 --m 2
    python -m python.cli.main census --p 2 --d 4 --curve "y^2 + y = x^3 + x + 1"
    python -m python.cli.main jinv --poly "x^3 + x + 1"
    python -m python.cli.main compose --curve "y^2 = x^3 + 1" --ext "x^2 - 2" --ext "x^2 - 3" ...
    python -m python.cli.main parity --ell 13 --p 73

Exit codes: 0 success, 1 verification failure, 2 construction failure, 3 input error.
The seed is the only source of nondeterminism.
"""

import sys
from pathlib import Path
from typing import List, Optional

from absl import app, flags, logging
from pydantic import BaseModel

from python.algebra.exceptions import ZeroDivisorError
from python.cli.commands import (
    COMMANDS,
    EXIT_CONSTRUCTION_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    CommandSettings,
)
from python.constructors.exceptions import (
    ConstructionError,
    InseparableInputError,
    PreconditionError,
)
from python.constructors.registry import ConstructorRegistry
from python.families.exceptions import IdentityFailedError
from python.finite_lab.exceptions import SearchExhaustedError

FLAGS = flags.FLAGS

# Construction
flags.DEFINE_string("field", "Q", "Base field: Q, Fp:p, Fq:p:n[:c0,c1,...] or Fpt:p")
flags.DEFINE_multi_string(
    "ext",
    [],
    "Extension polynomial in x, e.g. 'x^7 - 2' or '[-2, 0, 1]'; repeat for several",
)
flags.DEFINE_string(
    "method",
    None,
    f"Construction method. Available: {', '.join(ConstructorRegistry.get_available_methods())}"
    " (default: auto for one extension, general otherwise)",
)
flags.DEFINE_integer("seed", 0, "Seed of every random choice; the sole source of nondeterminism")
flags.DEFINE_integer("genus", None, "Requested genus (construct, census --search, charp)")
flags.DEFINE_integer("elementary_n", None, "n of the elementary construction")
flags.DEFINE_integer("kummer_k", None, "k of the Kummer construction")
flags.DEFINE_string("output", None, "Write the JSON document here instead of stdout")

# Families
flags.DEFINE_integer("ell", None, "Degree ell of a family or of the parity calculator")
flags.DEFINE_string("m", None, "Rational parameter m of a Kummer family")
flags.DEFINE_string("a", None, "Coefficient a of an Artin-Schreier family")
flags.DEFINE_string("b", None, "Coefficient b of an Artin-Schreier family")
flags.DEFINE_string("variant", None, "Artin-Schreier variant, e.g. cube or 6g+5")
flags.DEFINE_string("alpha_method", None, "How kummer_alpha derives f: charpoly or resultant")
flags.DEFINE_integer("m_exp", None, "Exponent of the characteristic-p family")

# Finite fields
flags.DEFINE_integer("p", None, "Characteristic of the census field, or the prime of a family")
flags.DEFINE_integer("n", 1, "Census field is F_{p^n}")
flags.DEFINE_integer("d", None, "Degree of the extension F_{q^d}, or of a family")
flags.DEFINE_string("curve", None, "Equation such as 'y^2 + y = x^3 + x + 1'")
flags.DEFINE_bool("search", False, "Search for a curve with a new point instead of reading one")
flags.DEFINE_enum("strategy", "exhaustive", ["exhaustive", "random"], "Census search order")
flags.DEFINE_integer("max_workers", 4, "Threads used by point counting")

# Invariants and composition
flags.DEFINE_string("poly", None, "Cubic or quartic ell of y^2 = ell for jinv")
flags.DEFINE_string("x1", None, "x of the first compose point, a polynomial mod the first ext")
flags.DEFINE_string("y1", None, "y of the first compose point")
flags.DEFINE_string("x2", None, "x of the second compose point, a polynomial mod the second ext")
flags.DEFINE_string("y2", None, "y of the second compose point")


def settings_from_flags(args: List[str]) -> CommandSettings:
    """Collect the parsed flags for a command."""
    return CommandSettings(
        args=tuple(args),
        field=FLAGS.field,
        ext=tuple(FLAGS.ext),
        method=FLAGS.method,
        seed=FLAGS.seed,
        genus=FLAGS.genus,
        elementary_n=FLAGS.elementary_n,
        kummer_k=FLAGS.kummer_k,
        ell=FLAGS.ell,
        m=FLAGS.m,
        a=FLAGS.a,
        b=FLAGS.b,
        variant=FLAGS.variant,
        alpha_method=FLAGS.alpha_method,
        m_exp=FLAGS.m_exp,
        p=FLAGS.p,
        n=FLAGS.n,
        d=FLAGS.d,
        curve=FLAGS.curve,
        search=FLAGS.search,
        strategy=FLAGS.strategy,
        max_workers=FLAGS.max_workers,
        poly=FLAGS.poly,
        x1=FLAGS.x1,
        y1=FLAGS.y1,
        x2=FLAGS.x2,
        y2=FLAGS.y2,
    )


def write_document(document: BaseModel, output: Optional[str] = None) -> None:
    """Write a document as UTF-8 JSON, newline-terminated."""
    text = document.model_dump_json(indent=2) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(command: str, settings: CommandSettings, output: Optional[str] = None) -> int:
    """Run one command and map its outcome to an exit code.

    Args:
        command: One of the keys of COMMANDS
        settings: Flags and positional arguments
        output: Destination file; stdout when None

    Returns:
        0 on success, 1 if verification failed, 2 if a construction gave up,
        3 for malformed or unusable input
    """
    if command not in COMMANDS:
        logging.error("Unknown command '%s'. Available: %s", command, ", ".join(COMMANDS))
        return EXIT_INPUT_ERROR
    logging.info("%s: start", command)
    try:
        document, code = COMMANDS[command](settings)
    except (InseparableInputError, PreconditionError) as e:
        logging.error("%s: %s", command, e)
        return EXIT_INPUT_ERROR
    except (ConstructionError, SearchExhaustedError) as e:
        logging.error("%s: %s", command, e)
        return EXIT_CONSTRUCTION_FAILED
    except IdentityFailedError as e:
        logging.error("%s: %s", command, e)
        return EXIT_VERIFICATION_FAILED
    except (ValueError, TypeError, ZeroDivisorError, OSError) as e:
        logging.error("%s: %s", command, e)
        return EXIT_INPUT_ERROR
    write_document(document, output)
    if code != EXIT_OK:
        logging.error("%s: verification failed", command)
    logging.info("%s: finished with exit code %d", command, code)
    return code


def main(argv: List[str]) -> int:
    """Dispatch the command named by the first positional argument."""
    if len(argv) < 2:
        logging.error("Usage: %s <%s> [args] [flags]", argv[0], "|".join(COMMANDS))
        return EXIT_INPUT_ERROR
    return run(argv[1], settings_from_flags(argv[2:]), FLAGS.output)


if __name__ == "__main__":
    app.run(main)
