"""Exact computations for nilpotent Lie superalgebras."""

from ._core import (
    AlgebraError,
    NotNilpotent,
    ParseError,
    SuperAlgebra,
    capability,
    catalog_entry,
    catalog_ids,
    direct_sum,
    epicenter,
    invariants,
    multiplier,
    multiplier_direct_sum,
    quotient,
    run,
    violations,
)

__all__ = [
    "AlgebraError",
    "NotNilpotent",
    "ParseError",
    "SuperAlgebra",
    "capability",
    "catalog_entry",
    "catalog_ids",
    "direct_sum",
    "epicenter",
    "invariants",
    "multiplier",
    "multiplier_direct_sum",
    "quotient",
    "run",
    "violations",
]
