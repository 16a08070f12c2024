"""Semantics-preserving Java transformations and repair metrics."""

from ._jrobust import (
    ApplicabilityError,
    ContractViolation,
    InputError,
    LookupError,
    MetricError,
    build_benchmark,
    codebleu,
    kinds,
    pass_at_k_unbiased,
    relative_change,
    sites,
    transform,
)

__all__ = [
    "ApplicabilityError",
    "ContractViolation",
    "InputError",
    "LookupError",
    "MetricError",
    "build_benchmark",
    "codebleu",
    "kinds",
    "pass_at_k_unbiased",
    "relative_change",
    "sites",
    "transform",
]
