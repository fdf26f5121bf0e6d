"""Custom exceptions for curve-side analysis."""


class NoRationalPointError(ValueError):
    """Exception raised when a reduction to Weierstrass form has no base point.

    Attributes:
        curve: Text of the curve that was given without a usable point
    """

    def __init__(self, curve: str):
        """Initialize the NoRationalPointError.

        Args:
            curve: Text of the curve
        """
        self.curve = curve
        super().__init__(f"No rational point supplied for {curve}")


class NotApplicableError(ValueError):
    """Exception raised when a worked example's hypothesis fails for the input.

    Attributes:
        reason: Which hypothesis failed
    """

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Not applicable: {reason}")
