"""Seeded SplitMix64 generator used for every sampled quantity.

All randomized choices in constructors, certificates and searches draw from
this generator so that a seed fully determines a report. The output sequence
matches the reference SplitMix64 mixing function.
"""

from typing import Sequence, TypeVar

T = TypeVar("T")

_MASK = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator.

    Example Usage:
        ```python
        rng = SplitMix64(seed=0)
        coefficient = rng.randint(-4, 4)
        ```
    """

    def __init__(self, seed: int = 0) -> None:
        """Initialize the generator.

        Args:
            seed: Any integer; reduced modulo 2**64
        """
        self._state = seed & _MASK

    def next_u64(self) -> int:
        """Return the next 64-bit output."""
        self._state = (self._state + _GOLDEN_GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randbelow(self, bound: int) -> int:
        """Return a uniform integer in [0, bound) by rejection sampling.

        Args:
            bound: Positive exclusive upper bound, may exceed 2**64

        Raises:
            ValueError: If bound is not positive
        """
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        words = max(1, (bound.bit_length() + 63) // 64)
        span = 1 << (64 * words)
        limit = span - span % bound
        while True:
            value = 0
            for _ in range(words):
                value = (value << 64) | self.next_u64()
            if value < limit:
                return value % bound

    def randint(self, low: int, high: int) -> int:
        """Return a uniform integer in the closed interval [low, high]."""
        if high < low:
            raise ValueError(f"empty interval [{low}, {high}]")
        return low + self.randbelow(high - low + 1)

    def choice(self, items: Sequence[T]) -> T:
        """Return a uniformly chosen item of a non-empty sequence."""
        if not items:
            raise ValueError("choice from an empty sequence")
        return items[self.randbelow(len(items))]

    def fork(self, label: int) -> "SplitMix64":
        """Return an independent generator derived from this one and a label."""
        return SplitMix64(self.next_u64() ^ ((label * _GOLDEN_GAMMA) & _MASK))
