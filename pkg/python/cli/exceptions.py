"""Custom exceptions for the command-line surface."""


class InputError(ValueError):
    """Exception raised when user input cannot be parsed.

    Attributes:
        text: The offending input
        reason: Why it was rejected
    """

    def __init__(self, text: str, reason: str):
        """Initialize the InputError.

        Args:
            text: The offending input
            reason: Why it was rejected
        """
        self.text = text
        self.reason = reason
        super().__init__(f"cannot parse '{text}': {reason}")
