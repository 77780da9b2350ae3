"""Independent range sampling over interval data."""

from ._core import (
    AIT,
    AITV,
    AWIT,
    AITFloat,
    AITVFloat,
    AWITFloat,
    AliasTable,
    CumulativeSum,
    IntervalTree,
    IntervalTreeFloat,
    IrsError,
    Rng,
    RNG_ALGORITHM,
    generate_dataset,
    generate_queries,
)

__all__ = [
    "AIT",
    "AITV",
    "AWIT",
    "AITFloat",
    "AITVFloat",
    "AWITFloat",
    "AliasTable",
    "CumulativeSum",
    "IntervalTree",
    "IntervalTreeFloat",
    "IrsError",
    "Rng",
    "RNG_ALGORITHM",
    "generate_dataset",
    "generate_queries",
]
