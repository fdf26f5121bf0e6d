"""Custom exceptions for exact-arithmetic errors."""

from typing import Any


class ZeroDivisorError(ArithmeticError):
    """Exception raised when inversion in a quotient ring meets a zero divisor.

    The extended gcd of the element and the modulus is a nontrivial factor of
    the modulus, so the quotient ring is a product of smaller rings rather than
    a field. Callers composing towers treat this as evidence that two
    extensions are not linearly disjoint.

    Attributes:
        factor: Monic nontrivial factor of the modulus found during inversion
    """

    def __init__(self, factor: Any):
        """Initialize the ZeroDivisorError.

        Args:
            factor: Monic polynomial dividing the modulus
        """
        self.factor = factor
        super().__init__(f"Zero divisor found; modulus has factor {factor}")


class UnsupportedCharacteristicError(ValueError):
    """Exception raised when an operation is undefined in the field characteristic.

    Attributes:
        characteristic: Characteristic of the coefficient field
        operation: Name of the rejected operation
    """

    def __init__(self, characteristic: int, operation: str):
        """Initialize the UnsupportedCharacteristicError.

        Args:
            characteristic: Characteristic of the coefficient field
            operation: Name of the rejected operation
        """
        self.characteristic = characteristic
        self.operation = operation
        super().__init__(
            f"{operation} is not supported in characteristic {characteristic}"
        )


class NotEtaleError(ValueError):
    """Exception raised when a quotient ring modulus is not separable.

    Attributes:
        modulus: The inseparable modulus
    """

    def __init__(self, modulus: Any):
        self.modulus = modulus
        super().__init__(f"Modulus {modulus} is not separable; algebra is not etale")


class FieldMismatchError(TypeError):
    """Exception raised when values from different coefficient rings are combined.

    Attributes:
        left: Ring of the left operand
        right: Ring of the right operand
    """

    def __init__(self, left: Any, right: Any):
        self.left = left
        self.right = right
        super().__init__(f"Cannot combine values over {left} and {right}")
