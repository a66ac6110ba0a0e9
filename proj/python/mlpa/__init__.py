"""Multi-level prime array design: exhaustive coarray-optimal configurations."""

from ._core import (
    ConfigError,
    InfeasibleQueryError,
    __version__,
    aperture,
    build_positions,
    coprime_positions,
    difference_coarray,
    enumerate_coprime_partitions,
    enumerate_spacing_orders,
    evaluate_config,
    nested_positions,
    optimize,
    sweep,
    total_elements,
    unit_spacing_count,
    validate_config,
)

__all__ = [
    "ConfigError",
    "InfeasibleQueryError",
    "__version__",
    "aperture",
    "build_positions",
    "coprime_positions",
    "difference_coarray",
    "enumerate_coprime_partitions",
    "enumerate_spacing_orders",
    "evaluate_config",
    "nested_positions",
    "optimize",
    "sweep",
    "total_elements",
    "unit_spacing_count",
    "validate_config",
]
