"""Tunables for point counting and curve searches."""

from dataclasses import dataclass

SEARCH_FIELD_LIMIT = 2**20
MAX_SEARCH_GENUS = 3


@dataclass(frozen=True)
class CountingOptions:
    """Limits and parallelism for finite-field enumeration.

    Attributes:
        max_field_size: Largest q^e whose elements count_points will enumerate
        max_workers: Threads used to split an enumeration
        chunk_size: x-values handed to one worker at a time
        max_random_candidates: Draws made by the random search strategy

    Example Usage:
        ```python
        options = CountingOptions(max_field_size=2**16, max_workers=2)
        count_points(curve, 4, options)
        ```
    """

    max_field_size: int = 2**24
    max_workers: int = 4
    chunk_size: int = 4096
    max_random_candidates: int = 2000

    def __post_init__(self) -> None:
        for name in ("max_field_size", "max_workers", "chunk_size", "max_random_candidates"):
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f"{name} must be positive, got {value}")
