"""
Scalar arithmetic for branch parameters: Q, Q(sqrt(d)), BigComplex,
symbolic tags, the Klein j-function and Möbius machinery.
"""

from .quadratic import QuadraticNumber, rational_sqrt, squarefree_part
from .numeric import BigComplex, DEFAULT_PRECISION, root_of_unity
from .symbolic import Symbolic
from .field import (
    INFINITY,
    Scalar,
    ScalarMode,
    as_scalar,
    field_discriminant,
    format_scalar,
    is_infinity,
    is_zero,
    mode_of,
    parse_scalar,
    scalars_equal,
    sqrt_in_field,
    to_big_complex,
)
from .klein import anharmonic_orbit, j_invariant
from .mobius import (
    BranchSet,
    Mobius,
    branch_permutation,
    cross_ratio,
    mobius_from_triple,
    mobius_order,
    roots_of_unity_branch_set,
    symmetries_of_branch_set,
)

__all__ = [
    "QuadraticNumber",
    "rational_sqrt",
    "squarefree_part",
    "BigComplex",
    "DEFAULT_PRECISION",
    "root_of_unity",
    "Symbolic",
    "INFINITY",
    "Scalar",
    "ScalarMode",
    "as_scalar",
    "field_discriminant",
    "format_scalar",
    "is_infinity",
    "is_zero",
    "mode_of",
    "parse_scalar",
    "scalars_equal",
    "sqrt_in_field",
    "to_big_complex",
    "anharmonic_orbit",
    "j_invariant",
    "BranchSet",
    "Mobius",
    "branch_permutation",
    "cross_ratio",
    "mobius_from_triple",
    "mobius_order",
    "roots_of_unity_branch_set",
    "symmetries_of_branch_set",
]
