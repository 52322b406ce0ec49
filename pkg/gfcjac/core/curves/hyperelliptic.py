"""
Hyperelliptic curves with an extra involution and their two quotients.

A genus-g hyperelliptic curve with an extra involution tau has a model
y^2 = (x^2 - 1) prod_j (x^2 - mu_j^2) with tau(x, y) = (-x, y). In the
coordinate t = x^2 the quotient map is

    P(t) = c (t - mu_1^2) / (t - mu_2^2),   c = (1 - mu_2^2) / (1 - mu_1^2),

so that P(1) = 1, P(mu_1^2) = 0 and P(mu_2^2) = inf. The lambdas are the
remaining images: lambda_{j-2} = P(mu_j^2), lambda_{g-1} = P(inf) and
lambda_g = P(0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gfcjac.core.curves.pgonal import PGonalCurve, linear_factor
from gfcjac.core.errors import ConsistencyError, InputError, MixedFieldError, SquareRootError
from gfcjac.core.scalars import (
    INFINITY,
    Mobius,
    QuadraticNumber,
    Scalar,
    ScalarMode,
    as_scalar,
    cross_ratio,
    field_discriminant,
    format_scalar,
    is_zero,
    j_invariant,
    mode_of,
    scalars_equal,
    sqrt_in_field,
    squarefree_part,
    to_big_complex,
)
from gfcjac.core.scalars.numeric import DEFAULT_PRECISION
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)

TAU_INVOLUTION_DOC = """\
In the model C: y^2 = x(x-1)(x + (1-mu1)^2/(4 mu1)) prod_{j=2}^{g} (x^2 - b_j x + c_j),
with b_j = (1-mu1)(mu_j^2+mu1)/(mu_j^2-mu1^2) and c_j = (1-mu1)^2 (mu_j^2-1)/(4(mu_j^2-mu1^2)),
the hyperelliptic involution is (x, y) -> (x, -y) and the extra involution is

  x -> (mu1-1)^2 (1-x) / (4 mu1 x + (mu1-1)^2)
  y -> y * 2 sqrt(mu1) (1-mu1^2)^2 / (4 mu1 x + (1-mu1)^2)^(g+1)
        * prod_{j=2}^{g} (1-mu1) / sqrt(mu_j^2-mu1^2)
        * sqrt((mu_j^2-mu1^2)(1-mu1)^2 + 4 mu1^2 (1-mu_j^2) + 4 mu1 (1-mu1)(mu1+mu_j^2))

The nested square roots carry unspecified branches; the x-part is what the
branch-point checks use.
"""


def _check_distinct(values: Sequence[Scalar], what: str):
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if scalars_equal(values[i], values[j]):
                raise InputError(f"{what} {i + 1} and {j + 1} coincide ({format_scalar(values[i])})")


@dataclass(frozen=True, eq=False)
class HyperellipticModel:
    """y^2 = prod (x - root); infinity is a branch point when the root count is odd."""

    roots: Tuple[Scalar, ...]
    label: str = ""

    def __post_init__(self):
        roots = tuple(as_scalar(r) for r in self.roots)
        if any(r is INFINITY for r in roots):
            raise InputError("roots must be finite; infinity is implied by an odd root count")
        if len(roots) < 3:
            raise InputError(f"a hyperelliptic model needs at least 3 roots, got {len(roots)}")
        _check_distinct(roots, "roots")
        object.__setattr__(self, "roots", roots)

    @property
    def genus(self) -> int:
        # ceil((#roots - 2) / 2)
        return (len(self.roots) - 1) // 2

    @property
    def branch_points(self) -> List[Scalar]:
        points = list(self.roots)
        if len(points) % 2:
            points.insert(0, INFINITY)
        return points

    @property
    def equation(self) -> str:
        return "y^2 = " + "*".join(f"({linear_factor(r)})" for r in self.roots)

    def as_pgonal(self) -> PGonalCurve:
        return PGonalCurve(2, tuple((pt, 1) for pt in self.branch_points))

    def j_invariant(self) -> Optional[Scalar]:
        """j of an elliptic model with concrete roots, else None."""
        if self.genus != 1 or mode_of(self.roots) is ScalarMode.SYMBOLIC:
            return None
        return j_invariant(cross_ratio(*self.branch_points[:4]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "equation": self.equation,
            "genus": self.genus,
            "roots": [format_scalar(r) for r in self.roots],
        }

    def __str__(self):
        return f"{self.label}: {self.equation}" if self.label else self.equation


def _split_coordinate(mu_squares: Sequence[Scalar]) -> Mobius:
    m1, m2 = mu_squares[0], mu_squares[1]
    c = (1 - m2) / (1 - m1)
    return Mobius(c, -c * m1, 1, -m2)


def _check_mu_squares(mu_squares: Sequence[Scalar]):
    if len(mu_squares) < 2:
        raise InputError(f"need at least two mu^2 values, got {len(mu_squares)}")
    for m in mu_squares:
        if m is INFINITY or is_zero(m) or is_zero(m - 1):
            raise InputError(f"mu^2 = {format_scalar(m)} must avoid 0, 1 and inf")
    _check_distinct(list(mu_squares), "mu^2 values")


def lambdas_from_mu_squares(mu_squares: Sequence) -> List[Scalar]:
    """
    Images of the branch data under P.

    Args:
        mu_squares: mu_1^2, ..., mu_g^2, pairwise distinct and outside {0, 1}

    Returns:
        [lambda_1, ..., lambda_g]
    """
    mu_squares = [as_scalar(m) for m in mu_squares]
    _check_mu_squares(mu_squares)
    P = _split_coordinate(mu_squares)
    lambdas = [P(m) for m in mu_squares[2:]]
    lambdas.append(P(INFINITY))
    lambdas.append(P(Fraction(0)))
    return lambdas


def mu_squares_from_lambdas(lambdas: Sequence) -> List[Scalar]:
    """
    Closed-form inverse of lambdas_from_mu_squares.

    mu_2^2 = (lambda_{g-1} - 1)/(lambda_g - 1), mu_1^2 = (lambda_g/lambda_{g-1}) mu_2^2 and
    mu_j^2 = mu_2^2 (lambda_{j-2} - lambda_g)/(lambda_{j-2} - lambda_{g-1}) for j >= 3.
    """
    lambdas = [as_scalar(lam) for lam in lambdas]
    g = len(lambdas)
    if g < 2:
        raise InputError(f"need g >= 2 parameters, got {g}")
    for lam in lambdas:
        if lam is INFINITY or is_zero(lam) or is_zero(lam - 1):
            raise InputError(f"parameter {format_scalar(lam)} must avoid 0, 1 and inf")
    _check_distinct(lambdas, "parameters")
    penultimate, last = lambdas[-2], lambdas[-1]
    m2 = (penultimate - 1) / (last - 1)
    m1 = (last / penultimate) * m2
    rest = [m2 * (lam - last) / (lam - penultimate) for lam in lambdas[:-2]]
    mu_squares = [m1, m2] + rest
    _check_mu_squares(mu_squares)
    return mu_squares


def verify_split(lambdas: Sequence, mu_squares: Sequence) -> bool:
    """
    Check that P sends {1, mu_j^2, 0, inf} onto {1, 0, inf, lambda_1, ..., lambda_g}.

    Exact for exact scalars, tolerance-based for BigComplex.
    """
    lambdas = [as_scalar(lam) for lam in lambdas]
    mu_squares = [as_scalar(m) for m in mu_squares]
    if len(lambdas) != len(mu_squares):
        return False
    P = _split_coordinate(mu_squares)
    images = [P(t) for t in [Fraction(1), *mu_squares, Fraction(0), INFINITY]]
    expected = [Fraction(1), Fraction(0), INFINITY, *lambdas]
    unmatched = list(expected)
    for image in images:
        hit = next((i for i, e in enumerate(unmatched) if scalars_equal(image, e)), None)
        if hit is None:
            return False
        unmatched.pop(hit)
    return not unmatched


def exact_square_roots(mu_squares: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """Square roots inside one quadratic field, or None."""
    if mode_of(mu_squares) is ScalarMode.NUMERIC:
        return None
    d = field_discriminant(mu_squares)
    if d is None:
        # the first rational non-square picks the field
        for m in mu_squares:
            if sqrt_in_field(m) is None:
                num, den = Fraction(m).numerator, Fraction(m).denominator
                d = squarefree_part(num * den)[1]
                break
    roots = []
    for m in mu_squares:
        if isinstance(m, QuadraticNumber) or d is None:
            root = sqrt_in_field(m)
        else:
            root = sqrt_in_field(m, d)
        if root is None:
            return None
        roots.append(root)
    try:
        field_discriminant(roots)
    except MixedFieldError:
        return None
    return roots


@dataclass(frozen=True, eq=False)
class HyperellipticSplit:
    """The genus-g curve, its two quotients and the data linking them."""

    lambdas: Tuple[Scalar, ...]
    mu_squares: Tuple[Scalar, ...]
    mus: Tuple[Scalar, ...]
    symmetric_model: HyperellipticModel
    model_c: HyperellipticModel
    c1: HyperellipticModel
    c2: HyperellipticModel
    numeric: bool

    @property
    def genus(self) -> int:
        return len(self.lambdas)

    def __iter__(self):
        return iter((self.mus, self.model_c, self.c1, self.c2))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "genus": self.genus,
            "lambdas": [format_scalar(v) for v in self.lambdas],
            "mu_squares": [format_scalar(v) for v in self.mu_squares],
            "mus": [format_scalar(v) for v in self.mus],
            "numeric": self.numeric,
            "C": self.model_c.to_dict(),
            "C1": self.c1.to_dict(),
            "C2": self.c2.to_dict(),
        }


def quotient_models(lambdas: Sequence[Scalar]) -> Tuple[HyperellipticModel, HyperellipticModel]:
    """C1 = S/<tau> and C2 = S/<tau iota> in the lambda coordinate."""
    g = len(lambdas)
    head = [Fraction(0), Fraction(1)]
    if g % 2 == 0:
        c1 = head + [lambdas[g - 1]] + list(lambdas[: g - 2])
        c2 = head + [lambdas[g - 2]] + list(lambdas[: g - 2])
    else:
        c1 = head + list(lambdas[: g - 2])
        c2 = head + list(lambdas)
    return HyperellipticModel(tuple(c1), "C1"), HyperellipticModel(tuple(c2), "C2")


def hyperelliptic_split_params(
    lambdas: Sequence,
    allow_numeric: bool = True,
    precision: int = DEFAULT_PRECISION,
) -> HyperellipticSplit:
    """
    Build the curve C with an extra involution and its quotients C1, C2.

    Args:
        lambdas: lambda_1, ..., lambda_g (g >= 2), distinct, outside {0, 1}
        allow_numeric: Fall back to BigComplex when a square root is not exact
        precision: Bits used for the BigComplex fallback

    Returns:
        HyperellipticSplit; iterating it yields (mus, model_c, c1, c2)
    """
    lambdas = [as_scalar(lam) for lam in lambdas]
    mu_squares = mu_squares_from_lambdas(lambdas)
    mode = mode_of(mu_squares)
    if mode is ScalarMode.SYMBOLIC:
        mus = [m.sqrt() for m in mu_squares]
        numeric = False
    elif mode is ScalarMode.NUMERIC:
        mus = [to_big_complex(m, precision).sqrt() for m in mu_squares]
        numeric = True
    else:
        mus = exact_square_roots(mu_squares)
        numeric = mus is None
        if mus is None:
            if not allow_numeric:
                raise SquareRootError(
                    "mu values have no exact square roots in one quadratic field; "
                    "rerun with BigComplex parameters such as c(re,im)"
                )
            log.warning(f"mu values are not exact; switching to BigComplex at {precision} bits")
            mus = [to_big_complex(m, precision).sqrt() for m in mu_squares]

    if not verify_split(lambdas, mu_squares):
        raise ConsistencyError("quotient map does not reproduce the parameters")

    mu1 = mus[0]
    symmetric_roots = [Fraction(1), Fraction(-1)]
    for mu in mus:
        symmetric_roots += [mu, -mu]
    symmetric = HyperellipticModel(tuple(symmetric_roots), "C0")

    # T(1) = 1, T(-1) = 0, T(mu1) = inf
    half = (1 - mu1) / 2
    T = Mobius(half, half, 1, -mu1)
    c_roots = [T(Fraction(-1)), T(Fraction(1)), T(-mu1)]
    for mu in mus[1:]:
        c_roots += [T(mu), T(-mu)]
    model_c = HyperellipticModel(tuple(c_roots), "C")

    c1, c2 = quotient_models(lambdas)
    if c1.genus + c2.genus != model_c.genus:
        raise ConsistencyError(f"quotient genera {c1.genus} + {c2.genus} do not add up to {model_c.genus}")
    log.debug(f"genus {model_c.genus} split into {c1.genus} + {c2.genus}")
    return HyperellipticSplit(
        tuple(lambdas), tuple(mu_squares), tuple(mus), symmetric, model_c, c1, c2, numeric
    )
