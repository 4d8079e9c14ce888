"""Exact arithmetic: rationals, finite fields, integer normal forms."""

from .fields import GF, QQ, FFElement, FiniteField, field_of, parse_field
from .intmat import (
    AbelianPresentation,
    IntMatrix,
    group_from_relations,
    hermite_normal_form,
    smith_normal_form,
)

__all__ = [
    "GF",
    "QQ",
    "FFElement",
    "FiniteField",
    "field_of",
    "parse_field",
    "AbelianPresentation",
    "IntMatrix",
    "group_from_relations",
    "hermite_normal_form",
    "smith_normal_form",
]
