"""Custom exceptions for the finite-field laboratory."""


class NotApplicableError(ValueError):
    """Exception raised when a calculation's hypotheses do not hold.

    Attributes:
        reason: Which hypothesis failed
    """

    def __init__(self, reason: str):
        """Initialize the NotApplicableError.

        Args:
            reason: Which hypothesis failed
        """
        self.reason = reason
        super().__init__(f"not applicable: {reason}")


class FieldTooLargeError(ValueError):
    """Exception raised when a field exceeds the enumeration limit.

    Attributes:
        size: Number of elements of the field that would be enumerated
        limit: Largest field size allowed by the options
    """

    def __init__(self, size: int, limit: int):
        """Initialize the FieldTooLargeError.

        Args:
            size: Number of elements of the requested field
            limit: Largest field size allowed
        """
        self.size = size
        self.limit = limit
        super().__init__(f"field of size {size} exceeds the enumeration limit {limit}")


class SearchExhaustedError(RuntimeError):
    """Exception raised when a curve search ends without a witness.

    Attributes:
        q: Size of the base field
        genus: Genus searched
        degree: Degree d of the extension F_{q^d}
        examined: Number of smooth candidates whose census was taken
    """

    def __init__(self, q: int, genus: int, degree: int, examined: int = 0):
        self.q = q
        self.genus = genus
        self.degree = degree
        self.examined = examined
        super().__init__(
            f"no genus-{genus} curve over F_{q} with a new point over F_{q}^{degree} "
            f"among {examined} candidates"
        )
