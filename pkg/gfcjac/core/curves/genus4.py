"""
Genus-4 hyperelliptic curves whose Jacobian splits into four elliptic curves.

Both quotients C1, C2 of the genus-4 curve are genus-2 curves with an extra
involution, each splitting as E_{1,j} x E_{2,j}. Gluing the two genus-2
splittings along their common branch points forces

    lambda_21, lambda_22 = functions of (lambda_11, lambda_12)

and the ambient curve is rebuilt from rho_{1,1}, rho_{2,1}, rho_{3,1}, rho_{3,2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Dict, Optional, Sequence, Tuple

from gfcjac.core.curves.hyperelliptic import (
    HyperellipticModel,
    HyperellipticSplit,
    exact_square_roots,
    hyperelliptic_split_params,
)
from gfcjac.core.errors import InputError, SquareRootError
from gfcjac.core.scalars import (
    INFINITY,
    Scalar,
    as_scalar,
    format_scalar,
    is_zero,
    scalars_equal,
    to_big_complex,
)
from gfcjac.core.scalars.numeric import DEFAULT_PRECISION
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)

Signs = Tuple[int, int, int, int]


def second_pair(l11: Scalar, l12: Scalar) -> Tuple[Scalar, Scalar]:
    """lambda_21 and lambda_22 from lambda_11 and lambda_12."""
    den21 = 1 - 4 * l12 + 2 * l11 * l12 + l12 * l12
    den22 = 1 - 4 * l11 + 2 * l11 * l12 + l11 * l11
    if is_zero(den21):
        raise InputError("1 - 4*l12 + 2*l11*l12 + l12^2 vanishes; lambda_21 is undefined")
    if is_zero(den22):
        raise InputError("1 - 4*l11 + 2*l11*l12 + l11^2 vanishes; lambda_22 is undefined")
    num21 = 4 + 2 * l11 - 13 * l12 + 8 * l12 * l12 - l12 ** 3
    l21 = (-4 * l12 + num21 / den21) / 2
    l22 = (2 * l11 + l12 - 4 * l11 * l12 + l11 * l11 * l12) / den22
    return l21, l22


def rho_values(mu1: Scalar, mu2: Scalar) -> Tuple[Scalar, Scalar, Scalar]:
    """
    Branch points of a genus-2 curve with an extra involution, moved so that
    1, -1 and mu1 go to 1, 0 and inf.
    """
    half = (1 - mu1) / 2
    rho1 = -((1 - mu1) ** 2) / (4 * mu1)
    rho2 = half * (mu2 + 1) / (mu2 - mu1)
    rho3 = half * (mu2 - 1) / (mu2 + mu1)
    return rho1, rho2, rho3


def _pair_mu_squares(l1: Scalar, l2: Scalar) -> Tuple[Scalar, Scalar]:
    m2 = (l1 - 1) / (l2 - 1)
    return (l2 / l1) * m2, m2


@dataclass(frozen=True)
class RhoIdentity:
    """Outcome of the rho_11 = rho_22, rho_21 = rho_12 check over sign choices."""

    holds: bool
    signs: Optional[Signs]
    tried: int

    def to_dict(self) -> Dict[str, Any]:
        return {"holds": self.holds, "signs": list(self.signs) if self.signs else None, "tried": self.tried}


@dataclass(frozen=True, eq=False)
class Genus4Family:
    lambda11: Scalar
    lambda12: Scalar
    lambda21: Scalar
    lambda22: Scalar
    factors: Tuple[HyperellipticModel, ...]
    mus: Tuple[Scalar, Scalar, Scalar, Scalar]
    rhos: Tuple[Scalar, ...]
    identity: RhoIdentity
    big_lambdas: Tuple[Scalar, ...]
    big_curve: Optional[HyperellipticSplit]
    numeric: bool

    def j_values(self) -> Dict[str, Optional[Scalar]]:
        return {f.label: f.j_invariant() for f in self.factors}

    def to_dict(self) -> Dict[str, Any]:
        j_values = self.j_values()
        return {
            "lambda11": format_scalar(self.lambda11),
            "lambda12": format_scalar(self.lambda12),
            "lambda21": format_scalar(self.lambda21),
            "lambda22": format_scalar(self.lambda22),
            "factors": [
                {**f.to_dict(), "j": format_scalar(j_values[f.label]) if j_values[f.label] is not None else None}
                for f in self.factors
            ],
            "mus": [format_scalar(m) for m in self.mus],
            "rho_identity": self.identity.to_dict(),
            "big_curve": self.big_curve.to_dict() if self.big_curve else None,
            "numeric": self.numeric,
        }


def _check_parameters(l11: Scalar, l12: Scalar):
    for name, value in (("lambda11", l11), ("lambda12", l12)):
        if value is INFINITY or is_zero(value) or is_zero(value - 1):
            raise InputError(f"{name} = {format_scalar(value)} must avoid 0, 1 and inf")
    if scalars_equal(l11, l12):
        raise InputError("lambda11 = lambda12")
    if is_zero(l11 * l12 - 1):
        raise InputError("lambda11 * lambda12 = 1")


def _check_derived(l11: Scalar, l12: Scalar, l21: Scalar, l22: Scalar):
    for name, value in (("lambda21", l21), ("lambda22", l22)):
        if is_zero(value) or is_zero(value - 1):
            raise InputError(f"derived {name} = {format_scalar(value)} lies in {{0, 1}}")
    if scalars_equal(l21, l11):
        raise InputError("derived lambda21 equals lambda11")
    if scalars_equal(l22, l12):
        raise InputError("derived lambda22 equals lambda12")


def search_rho_identity(mus: Sequence[Scalar]) -> Tuple[RhoIdentity, Tuple[Scalar, ...]]:
    """
    Try the 16 sign choices of (mu_11, mu_21, mu_12, mu_22).

    Returns:
        The identity outcome and the six rho values of the first passing
        choice (or of the all-plus choice when none passes)
    """
    fallback: Optional[Tuple[Scalar, ...]] = None
    tried = 0
    for signs in cartesian((1, -1), repeat=4):
        m11, m21, m12, m22 = (s * m for s, m in zip(signs, mus))
        if is_zero(m21 - m11) or is_zero(m21 + m11) or is_zero(m22 - m12) or is_zero(m22 + m12):
            continue
        tried += 1
        rho1 = rho_values(m11, m21)
        rho2 = rho_values(m12, m22)
        rhos = rho1 + rho2
        if fallback is None:
            fallback = rhos
        if scalars_equal(rho1[0], rho2[1]) and scalars_equal(rho1[1], rho2[0]):
            return RhoIdentity(True, signs, tried), rhos
    if fallback is None:
        raise InputError("every sign choice makes a rho value singular")
    return RhoIdentity(False, None, tried), fallback


def genus4_family(
    lambda11,
    lambda12,
    allow_numeric: bool = True,
    precision: int = DEFAULT_PRECISION,
) -> Genus4Family:
    """
    The genus-4 curve attached to (lambda11, lambda12) and its four elliptic factors.

    Args:
        lambda11: First parameter, outside {0, 1}
        lambda12: Second parameter, outside {0, 1}, != lambda11 and != 1/lambda11
        allow_numeric: Use BigComplex square roots when no exact ones exist
        precision: Bits for the BigComplex fallback

    Returns:
        Genus4Family with C11: (x-l12), C12: (x-l11), C21: (x-l22), C22: (x-l21)
    """
    l11, l12 = as_scalar(lambda11), as_scalar(lambda12)
    _check_parameters(l11, l12)
    l21, l22 = second_pair(l11, l12)
    _check_derived(l11, l12, l21, l22)

    factors = (
        HyperellipticModel((0, 1, l12), "C11"),
        HyperellipticModel((0, 1, l11), "C12"),
        HyperellipticModel((0, 1, l22), "C21"),
        HyperellipticModel((0, 1, l21), "C22"),
    )

    m11, m21 = _pair_mu_squares(l11, l21)
    m12, m22 = _pair_mu_squares(l12, l22)
    mu_squares = [m11, m21, m12, m22]
    mus = exact_square_roots(mu_squares)
    numeric = mus is None
    if mus is None:
        if not allow_numeric:
            raise SquareRootError("mu_ij have no exact square roots; rerun with BigComplex parameters")
        log.warning(f"genus-4 square roots are not exact; switching to BigComplex at {precision} bits")
        mus = [to_big_complex(m, precision).sqrt() for m in mu_squares]

    identity, rhos = search_rho_identity(mus)
    if identity.holds:
        log.info(f"rho identity holds with signs {identity.signs}")
    else:
        log.warning(f"rho identity fails for all {identity.tried} sign choices")

    # lambda_1..4 = rho_11, rho_21, rho_31, rho_32
    big_lambdas = (rhos[0], rhos[1], rhos[2], rhos[5])
    big_curve: Optional[HyperellipticSplit] = None
    try:
        big_curve = hyperelliptic_split_params(big_lambdas, allow_numeric=allow_numeric, precision=precision)
    except InputError as e:
        log.warning(f"ambient genus-4 curve is degenerate: {e}")

    return Genus4Family(
        l11, l12, l21, l22, factors, tuple(mus), rhos, identity, big_lambdas, big_curve, numeric
    )
