"""Metric dimension and minimum resolving sets of star-product grids."""

from ._core import (
    BudgetError,
    InputError,
    aux_report,
    brute_force_dimension,
    build_basis,
    dimension,
    distance,
    is_resolving,
    metric_code,
    regime_of,
    simulate,
    tiling_plan,
)

__all__ = [
    "BudgetError",
    "InputError",
    "aux_report",
    "brute_force_dimension",
    "build_basis",
    "dimension",
    "distance",
    "is_resolving",
    "metric_code",
    "regime_of",
    "simulate",
    "tiling_plan",
]
