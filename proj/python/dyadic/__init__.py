"""Characteristic-function identification for the dyadic model y = c + alpha + eta + eps."""

from ._dyadic import (
    ComponentDist,
    DyadicError,
    IdentificationError,
    ModelConfig,
    analytic_cf,
    density,
    ecf,
    ecf_partial_first,
    grid,
    identify,
    invert_cf,
    simulate,
    validate_cf,
)

__all__ = [
    "ComponentDist",
    "DyadicError",
    "IdentificationError",
    "ModelConfig",
    "analytic_cf",
    "density",
    "ecf",
    "ecf_partial_first",
    "grid",
    "identify",
    "invert_cf",
    "simulate",
    "validate_cf",
]
