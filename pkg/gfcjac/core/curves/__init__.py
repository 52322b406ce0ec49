"""
Curve models: fiber-product Fermat models, cyclic p-gonal quotients and
hyperelliptic curves with an extra involution.
"""

from .fermat import FermatModel, build_fermat_model
from .pgonal import PGonalCurve, classical_fermat_factors, pgonal_from_character, renormalize_branches
from .hyperelliptic import (
    TAU_INVOLUTION_DOC,
    HyperellipticModel,
    HyperellipticSplit,
    hyperelliptic_split_params,
    lambdas_from_mu_squares,
    mu_squares_from_lambdas,
    quotient_models,
    verify_split,
)
from .genus4 import Genus4Family, RhoIdentity, genus4_family, rho_values, second_pair

__all__ = [
    "FermatModel",
    "build_fermat_model",
    "PGonalCurve",
    "classical_fermat_factors",
    "pgonal_from_character",
    "renormalize_branches",
    "TAU_INVOLUTION_DOC",
    "HyperellipticModel",
    "HyperellipticSplit",
    "hyperelliptic_split_params",
    "lambdas_from_mu_squares",
    "mu_squares_from_lambdas",
    "quotient_models",
    "verify_split",
    "Genus4Family",
    "RhoIdentity",
    "genus4_family",
    "rho_values",
    "second_pair",
]
