"""Distinct Hamming weights of linear codes and distinct distances of unrestricted codes."""

from .code import LinearCode, WeightSpectrum, num_distinct_weights, rank, weight_of_message, weight_spectrum
from .field import FieldSpec, make_field, pp

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "LinearCode",
    "WeightSpectrum",
    "make_field",
    "num_distinct_weights",
    "pp",
    "rank",
    "weight_of_message",
    "weight_spectrum",
]
