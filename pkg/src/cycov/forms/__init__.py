"""Homogeneous forms: group actions, derivatives, resultants, singular points."""

from .binary import (
    check_characteristic,
    common_root,
    disc_binary,
    is_squarefree_binary,
    sylvester_matrix,
    sylvester_resultant,
)
from .poly import (
    Form,
    Poly,
    TwistSpec,
    act_linear,
    format_form,
    monomial_form,
    parse_form,
    parse_poly,
    partials,
    random_form,
)
from .search import ProjectivePoint, common_zeros, embedding, singular_point_search

__all__ = [
    "check_characteristic",
    "common_root",
    "disc_binary",
    "is_squarefree_binary",
    "sylvester_matrix",
    "sylvester_resultant",
    "Form",
    "Poly",
    "TwistSpec",
    "act_linear",
    "format_form",
    "monomial_form",
    "parse_form",
    "parse_poly",
    "partials",
    "random_form",
    "ProjectivePoint",
    "common_zeros",
    "embedding",
    "singular_point_search",
]
