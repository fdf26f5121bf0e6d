"""Custom exceptions for the explicit families."""

from typing import Sequence


class FamilyParameterError(ValueError):
    """Exception raised when parameters fall outside a family's hypotheses.

    Attributes:
        family: Registry name of the family
        reason: Which hypothesis failed
    """

    def __init__(self, family: str, reason: str):
        """Initialize the FamilyParameterError.

        Args:
            family: Registry name of the family
            reason: Which hypothesis failed
        """
        self.family = family
        self.reason = reason
        super().__init__(f"{family}: {reason}")


class IdentityFailedError(ArithmeticError):
    """Exception raised when an identity the family rests on does not hold.

    Attributes:
        family: Registry name of the family
        failed: Names of the failing identity checks
    """

    def __init__(self, family: str, failed: Sequence[str]):
        self.family = family
        self.failed = tuple(failed)
        super().__init__(f"{family}: identities failed: {', '.join(self.failed)}")
