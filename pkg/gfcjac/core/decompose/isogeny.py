"""
Grouping elliptic factors by j-invariant and the special-parameter loci
where the (2,4) factors collapse to a single class.

Equal j means the curves are isomorphic over the algebraic closure; no
isogeny between curves with different j is looked for.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from gfcjac.core.curves import HyperellipticModel, PGonalCurve
from gfcjac.core.errors import InputError
from gfcjac.core.models import Decomposition, DecompositionFactor
from gfcjac.core.scalars import (
    INFINITY,
    BigComplex,
    BranchSet,
    Scalar,
    ScalarMode,
    anharmonic_orbit,
    as_scalar,
    cross_ratio,
    format_scalar,
    is_zero,
    j_invariant,
    mobius_from_triple,
    mobius_order,
    mode_of,
    root_of_unity,
    scalars_equal,
    symmetries_of_branch_set,
)
from gfcjac.core.scalars.numeric import DEFAULT_PRECISION
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class IsogenyClass:
    """Genus-1 factors sharing one j value."""

    representative: DecompositionFactor
    j_value: Optional[Scalar]
    members: Tuple[DecompositionFactor, ...]

    @property
    def exponent(self) -> int:
        return sum(f.multiplicity for f in self.members)

    @property
    def labels(self) -> List[str]:
        return [f.subgroup_label for f in self.members]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "representative": self.representative.subgroup_label,
            "equation": self.representative.equation,
            "j": format_scalar(self.j_value) if self.j_value is not None else None,
            "exponent": self.exponent,
            "members": self.labels,
        }


@dataclass(frozen=True, eq=False)
class IsogenyReport:
    classes: Tuple[IsogenyClass, ...]
    higher_genus: Tuple[DecompositionFactor, ...] = field(default_factory=tuple)

    @property
    def exponents(self) -> List[int]:
        return sorted((c.exponent for c in self.classes), reverse=True)

    def statement(self) -> str:
        """E.g. "JS ~ (C1)^5" or "JS ~ (C11)^3 x C22 x JC16" (isomorphic over the closure)."""
        parts = []
        for c in self.classes:
            name = c.representative.subgroup_label or c.representative.equation
            parts.append(f"({name})^{c.exponent}" if c.exponent > 1 else name)
        for f in self.higher_genus:
            name = f"J{f.subgroup_label}" if f.subgroup_label else f"J[{f.equation}]"
            parts.append(f"({name})^{f.multiplicity}" if f.multiplicity > 1 else name)
        return "JS ~ " + " x ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "classes": [c.to_dict() for c in self.classes],
            "higher_genus": [f.to_dict() for f in self.higher_genus],
            "statement": self.statement(),
            "note": "equal j: isomorphic over the algebraic closure",
        }


def _legendre_parameter(curve: Union[PGonalCurve, HyperellipticModel]) -> Scalar:
    if isinstance(curve, HyperellipticModel):
        return cross_ratio(*curve.branch_points[:4])
    return curve.legendre_parameter()


def _same_class(a: DecompositionFactor, b: DecompositionFactor) -> bool:
    if a.j_value is not None and b.j_value is not None:
        return scalars_equal(a.j_value, b.j_value)
    # symbolic parameters: compare anharmonic orbits of the Legendre parameters
    la, lb = _legendre_parameter(a.curve), _legendre_parameter(b.curve)
    return any(scalars_equal(la, x) for x in anharmonic_orbit(lb))


def _with_j(factor: DecompositionFactor) -> DecompositionFactor:
    if factor.j_value is not None or factor.genus != 1:
        return factor
    j = factor.curve.j_invariant()
    if j is None:
        return factor
    return DecompositionFactor(factor.curve, factor.genus, factor.multiplicity, factor.subgroup_label, j,
                               factor.signature)


def group_by_j(factors: Union[Decomposition, Sequence[DecompositionFactor]]) -> IsogenyReport:
    """
    Bucket the genus-1 factors by j-invariant.

    Args:
        factors: A Decomposition or a list of factors

    Returns:
        IsogenyReport; factors of genus >= 2 are listed unmerged
    """
    if isinstance(factors, Decomposition):
        factors = factors.factors
    factors = [_with_j(f) for f in factors]
    buckets: List[List[DecompositionFactor]] = []
    for f in factors:
        if f.genus != 1:
            continue
        if not _is_comparable(f):
            buckets.append([f])
            continue
        for bucket in buckets:
            if _is_comparable(bucket[0]) and _same_class(bucket[0], f):
                bucket.append(f)
                break
        else:
            buckets.append([f])
    classes = tuple(IsogenyClass(b[0], b[0].j_value, tuple(b)) for b in buckets)
    higher = tuple(f for f in factors if f.genus != 1)
    log.info(f"{len(classes)} j classes with exponents {sorted((c.exponent for c in classes), reverse=True)}")
    return IsogenyReport(classes, higher)


def _is_comparable(f: DecompositionFactor) -> bool:
    if f.j_value is not None:
        return True
    return isinstance(f.curve, HyperellipticModel) or (f.curve.k == 2 and len(f.curve.branches) == 4)


def hyperelliptic_factors(models: Sequence[HyperellipticModel]) -> List[DecompositionFactor]:
    """Wrap hyperelliptic models (e.g. genus-4 family factors) as decomposition factors."""
    return [DecompositionFactor(m, m.genus, subgroup_label=m.label, j_value=m.j_invariant()) for m in models]


def _horner(coefficients: Sequence[int], x: Scalar) -> Scalar:
    """coefficients from the leading term down."""
    value: Scalar = as_scalar(0)
    for c in coefficients:
        value = value * x + c
    return value


# name -> (target expression, ((printed factor, coefficients), ...)) on the locus lambda_2 = 1/lambda_1
_POLYNOMIALS = {
    "l2(1-l1)/(l2-l1)": (
        ("1+l^2", (1, 0, 1)),
        ("l^2-l-1", (1, -1, -1)),
        ("l^2+l-1", (1, 1, -1)),
    ),
    "l2/l1": (
        ("l^2-l-1", (1, -1, -1)),
        ("l^2+l-1", (1, 1, -1)),
        ("l^2+l+1", (1, 1, 1)),
        ("l^3-l+1", (1, 0, -1, 1)),
        ("l^3-l^2+1", (1, -1, 0, 1)),
    ),
    "(l2-1)/(l1-1)": (
        ("1+l^2", (1, 0, 1)),
        ("l^2-l-1", (1, -1, -1)),
        ("l^2+l-1", (1, 1, -1)),
    ),
}


def _target(name: str, l1: Scalar, l2: Scalar) -> Scalar:
    if name == "l2(1-l1)/(l2-l1)":
        return l2 * (1 - l1) / (l2 - l1)
    if name == "l2/l1":
        return l2 / l1
    return (l2 - 1) / (l1 - 1)


@dataclass(frozen=True)
class SpecialCondition:
    """One j(target) = j(lambda_1) condition evaluated at a parameter."""

    target: str
    factor_values: Tuple[Tuple[str, str], ...]
    holds: bool
    j_equal: Optional[bool]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": self.target,
            "factors": {name: value for name, value in self.factor_values},
            "holds": self.holds,
            "j_equal": self.j_equal,
        }


def special_parameter_conditions(lambda1) -> List[SpecialCondition]:
    """
    Evaluate the three coincidence loci at lambda_2 = 1/lambda_1.

    Each condition j(target) = j(lambda_1) is equivalent to the vanishing
    of a product of small polynomials in lambda_1. The direct comparison of
    the two j values is reported next to it, or None when the target is
    degenerate.

    Args:
        lambda1: Concrete parameter outside {0, 1, -1}

    Returns:
        Three SpecialCondition records
    """
    l1 = as_scalar(lambda1)
    if l1 is INFINITY or is_zero(l1) or is_zero(l1 - 1) or is_zero(l1 + 1):
        raise InputError(f"lambda1 = {format_scalar(l1)} must avoid 0, 1, -1 and inf")
    if mode_of([l1]) is ScalarMode.SYMBOLIC:
        raise InputError("special parameter conditions need a concrete lambda1")
    l2 = 1 / l1
    j1 = j_invariant(l1)
    conditions = []
    for name, factors in _POLYNOMIALS.items():
        values = [(text, _horner(coeffs, l1)) for text, coeffs in factors]
        holds = any(is_zero(v) for _, v in values)
        target = _target(name, l1, l2)
        try:
            j_equal: Optional[bool] = scalars_equal(j_invariant(target), j1)
        except InputError:
            j_equal = None
        conditions.append(
            SpecialCondition(name, tuple((t, format_scalar(v)) for t, v in values), holds, j_equal)
        )
        log.debug(f"j({name}) = j(l1): polynomial {holds}, direct {j_equal}")
    return conditions


@dataclass(frozen=True, eq=False)
class PentagonalSetup:
    """
    Type (3,4) branched over the fifth roots of unity.

    T(x) = (x - w^4)(1 - w) / ((x - w)(1 - w^4)) sends w, w^4, 1 to inf, 0, 1;
    the remaining roots give lambda_1 = T(w^2) and lambda_2 = T(w^3).
    """

    omega: BigComplex
    lambdas: Tuple[BigComplex, BigComplex]
    closed_forms: Tuple[BigComplex, BigComplex]
    branch_set: BranchSet
    symmetry_order: int
    mu: BigComplex

    @property
    def agrees(self) -> bool:
        return all(scalars_equal(a, b) for a, b in zip(self.lambdas, self.closed_forms))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda1": format_scalar(self.lambdas[0]),
            "lambda2": format_scalar(self.lambdas[1]),
            "closed_forms_agree": self.agrees,
            "symmetry_order": self.symmetry_order,
            "sextic_mu": format_scalar(self.mu),
        }


def pentagonal_parameters(precision: int = DEFAULT_PRECISION) -> PentagonalSetup:
    """
    lambda_1 = -w/(1+w^2) and lambda_2 = -w^2/((1+w^2)(1+w)^2), w = exp(2 pi i/5),
    checked against T(w^2) and T(w^3).

    mu = (w^2+1)^2/(w+1)^4 is the parameter of the sextic model
    y^6 = x^3 (x-1)^2 (x-mu)^2 of the genus-3 quotient; documentation only.
    """
    w = root_of_unity(5, 1, precision)
    T = mobius_from_triple((w, w ** 4, 1), (INFINITY, 0, 1))
    lambdas = (T(w ** 2), T(w ** 3))
    closed = (-w / (1 + w ** 2), -(w ** 2) / ((1 + w ** 2) * (1 + w) ** 2))
    B = BranchSet.standard(lambdas)
    order = max(mobius_order(S, B.points) for S in symmetries_of_branch_set(B))
    mu = (w ** 2 + 1) ** 2 / (w + 1) ** 4
    setup = PentagonalSetup(w, lambdas, closed, B, order, mu)
    if not setup.agrees:
        log.warning("pentagonal closed forms disagree with T(w^2), T(w^3)")
    return setup
