"""Exact Bott-residue enumeration for hypersurfaces singular along a family member."""

from .backend import BACKEND
from .charalg import LaurentMonomial, VirtualRep, dual, expand, sym_power, tensor
from .families import FamilySpec, family_spec, fiber
from .localize import (
    FixedPoint,
    WeightVector,
    bott_sum,
    contribution,
    default_weights,
    validate_weights,
)
from .monideal import MonomialIdeal, hilbert_count, hilbert_polynomial
from .polyfit import RatPoly, lagrange

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "FamilySpec",
    "FixedPoint",
    "LaurentMonomial",
    "MonomialIdeal",
    "RatPoly",
    "VirtualRep",
    "WeightVector",
    "__version__",
    "bott_sum",
    "contribution",
    "default_weights",
    "dual",
    "expand",
    "family_spec",
    "fiber",
    "hilbert_count",
    "hilbert_polynomial",
    "lagrange",
    "sym_power",
    "tensor",
    "validate_weights",
]
