"""Constructions, verification, exact search and bound evaluation for set-coloring Ramsey numbers."""

__version__ = "0.1.0"

from .coloring import (  # noqa: E402
    CliqueWitness,
    SetColoring,
    ValidationReport,
    clique_number_of_color,
    delete_color,
    duplicate_colors,
    find_mono_clique,
    trim_to_exact,
    validate,
)
from .codes import Code, PartitionFamily  # noqa: E402
from .errors import BudgetExceeded, FormatError, ResourceLimitError, StrategyError  # noqa: E402

__all__ = [
    "__version__",
    "BudgetExceeded",
    "CliqueWitness",
    "Code",
    "FormatError",
    "PartitionFamily",
    "ResourceLimitError",
    "SetColoring",
    "StrategyError",
    "ValidationReport",
    "clique_number_of_color",
    "delete_color",
    "duplicate_colors",
    "find_mono_clique",
    "trim_to_exact",
    "validate",
]
