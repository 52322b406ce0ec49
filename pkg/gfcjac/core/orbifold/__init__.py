"""
Genus counting and quotient-orbifold signatures.
"""

from .counting import (
    GenusIdentity,
    cyclic_cover_genus,
    genus_sum_identity,
    hyperplane_count_with_positive_genus,
    phi,
    psi_bruteforce,
    psi_closed,
    psi_small_closed,
    r_q,
    total_genus,
)
from .signature import Signature, base_euler_characteristic, hyperplane_signature, quotient_signature

__all__ = [
    "GenusIdentity",
    "cyclic_cover_genus",
    "genus_sum_identity",
    "hyperplane_count_with_positive_genus",
    "phi",
    "psi_bruteforce",
    "psi_closed",
    "psi_small_closed",
    "r_q",
    "total_genus",
    "Signature",
    "base_euler_characteristic",
    "hyperplane_signature",
    "quotient_signature",
]
