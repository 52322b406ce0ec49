"""
Group machinery for H0 = Z_k^n: elements, subgroups and characters.
"""

from .abelian import (
    GroupElement,
    GroupType,
    Subgroup,
    cyclic_subgroups,
    format_element,
    full_group,
    intersect_with_cyclic,
    parse_element,
    product,
    span,
    trivial_subgroup,
)
from .characters import Character, character_of_kernel, enumerate_hyperplanes

__all__ = [
    "GroupElement",
    "GroupType",
    "Subgroup",
    "cyclic_subgroups",
    "format_element",
    "full_group",
    "intersect_with_cyclic",
    "parse_element",
    "product",
    "span",
    "trivial_subgroup",
    "Character",
    "character_of_kernel",
    "enumerate_hyperplanes",
]
