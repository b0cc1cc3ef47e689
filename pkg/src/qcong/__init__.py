"""Truncated q-series arithmetic and bounded verification of partition congruences."""

from .errors import (
    InstantiationError,
    InversionError,
    PreconditionError,
    QCongError,
    ResourceError,
    StructuralError,
)
from .series import ZZ, CoefficientRing, IntegersMod, Series

__version__ = "0.1.0"

__all__ = [
    "ZZ",
    "CoefficientRing",
    "InstantiationError",
    "IntegersMod",
    "InversionError",
    "PreconditionError",
    "QCongError",
    "ResourceError",
    "Series",
    "StructuralError",
]
