"""
Klein's j-function on the Legendre parameter and the anharmonic group.
"""

from typing import List

from gfcjac.core.errors import DomainError, UnsupportedModeError
from gfcjac.core.scalars.field import INFINITY, Scalar, is_zero
from gfcjac.core.scalars.symbolic import Symbolic


def j_invariant(lam: Scalar) -> Scalar:
    """
    j(lambda) = (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2).

    Two Legendre curves y^2 = x(x-1)(x-lambda) are isomorphic over the
    algebraic closure exactly when their j values agree.

    Args:
        lam: Legendre parameter, not 0, 1 or infinity

    Returns:
        j in the same field as lam
    """
    if lam is INFINITY:
        raise DomainError("j is undefined at infinity")
    if isinstance(lam, Symbolic):
        raise UnsupportedModeError("j-invariants need concrete parameters; compare anharmonic orbits instead")
    if is_zero(lam) or is_zero(lam - 1):
        raise DomainError(f"j is undefined at lambda = {lam}")
    one_minus = 1 - lam
    return (1 - lam + lam * lam) ** 3 / (lam * lam * one_minus * one_minus)


def anharmonic_orbit(lam: Scalar) -> List[Scalar]:
    """The six values lambda, 1/lambda, 1-lambda, 1/(1-lambda), lambda/(lambda-1), (lambda-1)/lambda."""
    if lam is INFINITY or is_zero(lam) or is_zero(lam - 1):
        raise DomainError(f"anharmonic orbit is undefined at lambda = {lam}")
    return [
        lam,
        1 / lam,
        1 - lam,
        1 / (1 - lam),
        lam / (lam - 1),
        (lam - 1) / lam,
    ]
