"""Tunables shared by every construction method."""

from dataclasses import dataclass

MAX_DOUBLINGS = 20


@dataclass(frozen=True)
class ConstructionOptions:
    """Sampling and verification settings for one construction run.

    Attributes:
        seed: Seed of the SplitMix64 generator; fixes the whole report
        max_attempts: Cap on rejection-sampling attempts
        initial_box: Radius B of the first integer coordinate box [-B, B]
        growth_interval: The box radius doubles after this many rejections
        order_bound: N for the order check on genus-one outputs
        residue_lambdas: Multipliers tried when certifying residue degrees

    Example Usage:
        ```python
        options = ConstructionOptions(seed=3, order_bound=20)
        report = construct_general(spec, options)
        ```
    """

    seed: int = 0
    max_attempts: int = 10000
    initial_box: int = 2
    growth_interval: int = 20
    order_bound: int = 10
    residue_lambdas: int = 5

    def __post_init__(self) -> None:
        for name in (
            "max_attempts",
            "initial_box",
            "growth_interval",
            "order_bound",
            "residue_lambdas",
        ):
            value = getattr(self, name)
            if value < 1:
                raise ValueError(f"{name} must be positive, got {value}")

    def box_at(self, attempt: int) -> int:
        """Coordinate box radius used for the given zero-based attempt."""
        return self.initial_box << min(attempt // self.growth_interval, MAX_DOUBLINGS)
