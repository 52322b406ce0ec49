"""
Decomposition pipelines: Kani-Rosen certificates, the prime-exponent
decomposition, named families, j-classes and composite-exponent search.
"""

from .kani_rosen import KaniRosenInstance, check_corollary, check_general, corollary_via_general, positive_genus
from .prime import branch_set_for, decompose_prime
from .families import (
    SUBGROUP_TABLES,
    FamilySubgroup,
    check_family_coverage,
    family_sizes,
    named_family_subgroups,
    subgroup_table,
    parse_subgroup,
)
from .isogeny import (
    IsogenyClass,
    IsogenyReport,
    PentagonalSetup,
    SpecialCondition,
    group_by_j,
    hyperelliptic_factors,
    pentagonal_parameters,
    special_parameter_conditions,
)
from .conjectural import (
    CandidateFactor,
    ConjecturalReport,
    CriterionResult,
    conjectural_enumeration,
    criterion_search,
    exponent_classes,
    point_subsets,
    scan_cyclic_subgroups,
)
from .report import decomposition_to_dict, format_decomposition_text, format_json

__all__ = [
    "KaniRosenInstance",
    "check_corollary",
    "check_general",
    "corollary_via_general",
    "positive_genus",
    "branch_set_for",
    "decompose_prime",
    "SUBGROUP_TABLES",
    "FamilySubgroup",
    "check_family_coverage",
    "family_sizes",
    "named_family_subgroups",
    "subgroup_table",
    "parse_subgroup",
    "IsogenyClass",
    "IsogenyReport",
    "PentagonalSetup",
    "SpecialCondition",
    "group_by_j",
    "hyperelliptic_factors",
    "pentagonal_parameters",
    "special_parameter_conditions",
    "CandidateFactor",
    "ConjecturalReport",
    "CriterionResult",
    "conjectural_enumeration",
    "criterion_search",
    "exponent_classes",
    "point_subsets",
    "scan_cyclic_subgroups",
    "decomposition_to_dict",
    "format_decomposition_text",
    "format_json",
]
