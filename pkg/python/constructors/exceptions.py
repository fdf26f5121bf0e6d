"""Custom exceptions for curve constructions."""

from typing import Any, Optional


class ConstructionError(Exception):
    """Base exception for a construction that could not produce a curve.

    Attributes:
        method: Name of the construction method
    """

    def __init__(self, method: str, message: str):
        """Initialize the ConstructionError.

        Args:
            method: Name of the construction method
            message: Description of the failure
        """
        self.method = method
        super().__init__(f"{method}: {message}")


class RetriesExhaustedError(ConstructionError):
    """Exception raised when rejection sampling runs out of attempts.

    Attributes:
        method: Name of the construction method
        attempts: Number of samples drawn before giving up
        last_reason: Rejection reason of the final sample
    """

    def __init__(self, method: str, attempts: int, last_reason: str = ""):
        """Initialize the RetriesExhaustedError.

        Args:
            method: Name of the construction method
            attempts: Number of samples drawn
            last_reason: Rejection reason of the final sample
        """
        self.attempts = attempts
        self.last_reason = last_reason
        detail = f" (last rejection: {last_reason})" if last_reason else ""
        super().__init__(method, f"no acceptable sample in {attempts} attempts{detail}")


class InseparableInputError(ConstructionError):
    """Exception raised when an input polynomial is not separable.

    Attributes:
        poly: The offending polynomial
    """

    def __init__(self, poly: Any, method: str = "input"):
        self.poly = poly
        super().__init__(method, f"{poly} is not separable")


class NoRecipeError(ConstructionError):
    """Exception raised when no construction covers a degree and genus.

    Attributes:
        degree: Requested degree d = [L : K]
        genus: Requested genus, or None
        reason: Which ranges were tried
    """

    def __init__(self, degree: int, genus: Optional[int], reason: str):
        """Initialize the NoRecipeError.

        Args:
            degree: Requested degree
            genus: Requested genus, or None when unspecified
            reason: Which ranges were tried
        """
        self.degree = degree
        self.genus = genus
        self.reason = reason
        super().__init__("auto", f"no recipe for (d={degree}, g={genus}): {reason}")


class PreconditionError(ConstructionError):
    """Exception raised when the inputs violate a method's hypotheses.

    Attributes:
        method: Name of the construction method
        reason: The violated hypothesis
    """

    def __init__(self, method: str, reason: str):
        self.reason = reason
        super().__init__(method, reason)
