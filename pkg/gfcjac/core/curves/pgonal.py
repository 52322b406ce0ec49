"""
Cyclic k-gonal curves y^k = prod (x - mu_j)^alpha_j.

The exponent at infinity is kept so that the sum of all exponents can be
checked to vanish mod k; printed equations omit it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

import sympy

from gfcjac.core.errors import DomainError, InputError
from gfcjac.core.group import Character
from gfcjac.core.orbifold import cyclic_cover_genus
from gfcjac.core.scalars import (
    INFINITY,
    BranchSet,
    Mobius,
    Scalar,
    Symbolic,
    as_scalar,
    format_scalar,
    j_invariant,
    mobius_from_triple,
    scalars_equal,
)
from gfcjac.core.scalars.field import mode_of, ScalarMode

Branch = Tuple[Scalar, int]


def point_text(point: Scalar) -> str:
    """Scalar as it appears inside an equation."""
    if isinstance(point, Symbolic):
        return sympy.sstr(point.simplified().expr)
    return format_scalar(point)


_PLAIN_RATIONAL = re.compile(r"^-?\d+(?:/\d+)?$")


def linear_factor(point: Scalar) -> str:
    """"x", "x-7/3", "x+1/5" or "x-(1/2+1/2*sqrt(5))"."""
    text = point_text(point)
    if text == "0":
        return "x"
    if _PLAIN_RATIONAL.match(text):
        return f"x+{text[1:]}" if text.startswith("-") else f"x-{text}"
    return f"x-({text})"


@dataclass(frozen=True, eq=False)
class PGonalCurve:
    """
    Cyclic cover of the sphere branched at the listed points.

    Attributes:
        k: Degree of the cyclic cover
        branches: (point, exponent) pairs in branch-set order, exponents in [1, k)
    """

    k: int
    branches: Tuple[Branch, ...]

    def __post_init__(self):
        if self.k < 2:
            raise InputError(f"cyclic covers need k >= 2, got {self.k}")
        branches = tuple((as_scalar(pt), int(alpha)) for pt, alpha in self.branches)
        for pt, alpha in branches:
            if not 1 <= alpha < self.k:
                raise InputError(f"exponent {alpha} at {format_scalar(pt)} is not in [1, {self.k})")
        if sum(alpha for _, alpha in branches) % self.k:
            raise InputError(
                f"exponents {[a for _, a in branches]} do not sum to 0 mod {self.k}"
            )
        if sum(1 for pt, _ in branches if pt is INFINITY) > 1:
            raise InputError("infinity listed twice")
        object.__setattr__(self, "branches", branches)

    @property
    def terms(self) -> Tuple[Branch, ...]:
        """Finite branched points with their exponents."""
        return tuple((pt, a) for pt, a in self.branches if pt is not INFINITY)

    @property
    def infinity_exponent(self) -> int:
        """Exponent at infinity, 0 when infinity is not branched."""
        return next((a for pt, a in self.branches if pt is INFINITY), 0)

    @property
    def infinity_branched(self) -> bool:
        return self.infinity_exponent != 0

    @property
    def points(self) -> List[Scalar]:
        return [pt for pt, _ in self.branches]

    @property
    def exponents(self) -> List[int]:
        return [a for _, a in self.branches]

    @cached_property
    def genus(self) -> int:
        """Genus of one irreducible component (Riemann-Hurwitz)."""
        return cyclic_cover_genus(self.k, self.exponents)

    @property
    def is_irreducible(self) -> bool:
        return math.gcd(self.k, *self.exponents) == 1

    @property
    def equation(self) -> str:
        if not self.terms:
            return f"y^{self.k} = 1"
        body = "*".join(f"({linear_factor(pt)})^{a}" for pt, a in self.terms)
        return f"y^{self.k} = {body}"

    def scaled(self, unit: int) -> "PGonalCurve":
        """Same curve with every exponent multiplied by a unit of Z_k."""
        if math.gcd(unit, self.k) != 1:
            raise InputError(f"{unit} is not a unit mod {self.k}")
        return PGonalCurve(self.k, tuple((pt, (a * unit) % self.k) for pt, a in self.branches))

    def normalized(self) -> "PGonalCurve":
        """Exponent 1 at infinity when branched, else at the first finite point."""
        if not self.branches:
            return self
        pivot = self.infinity_exponent or self.branches[0][1]
        if math.gcd(pivot, self.k) != 1:
            return self
        return self.scaled(pow(pivot, -1, self.k))

    def unit_class_key(self) -> Tuple:
        """Key identifying the curve up to rescaling exponents by units."""
        labels = [format_scalar(pt) for pt in self.points]
        candidates = []
        for u in range(1, self.k):
            if math.gcd(u, self.k) != 1:
                continue
            candidates.append(tuple(sorted(zip(labels, ((a * u) % self.k for a in self.exponents)))))
        return (self.k, min(candidates))

    def normal_form(self) -> "PGonalCurve":
        """Move the first three branch points to (inf, 0, 1)."""
        if len(self.branches) < 3:
            return self
        T = mobius_from_triple(self.points[:3], (INFINITY, 0, 1))
        return renormalize_branches(self, T)

    def legendre_parameter(self) -> Scalar:
        """Fourth branch point after normal_form (k = 2, four branch points)."""
        if self.k != 2 or len(self.branches) != 4:
            raise DomainError("Legendre parameter needs a double cover with four branch points")
        return self.normal_form().points[3]

    def j_invariant(self) -> Optional[Scalar]:
        """
        j of a genus-1 factor with concrete parameters.

        Double covers use the Legendre parameter. A genus-1 cyclic trigonal
        curve has three branch points and is y^2 = x^3 - 1, j = 0.
        """
        if self.genus != 1:
            return None
        if self.k == 3 and len(self.branches) == 3:
            return Fraction(0)
        if mode_of(self.points) is ScalarMode.SYMBOLIC:
            return None
        if self.k == 2 and len(self.branches) == 4:
            return j_invariant(self.legendre_parameter())
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "terms": [{"point": format_scalar(pt), "exponent": a} for pt, a in self.terms],
            "infinity_exponent": self.infinity_exponent,
        }

    def __str__(self):
        return self.equation


def pgonal_from_character(chi: Character, B: BranchSet) -> PGonalCurve:
    """
    The p-gonal curve S/ker(chi).

    It is branched at the b_j with chi(a_j) != 0, with exponents u*chi(a_j)
    where the unit u makes the exponent at infinity 1 (if branched) or the
    exponent at the first branched point 1.

    Args:
        chi: Character of Z_p^n
        B: Branch set with n+1 points

    Returns:
        PGonalCurve of genus (r-2)(p-1)/2 >= 1
    """
    if not isinstance(B, BranchSet):
        B = BranchSet(tuple(B))
    if len(B) != chi.n + 1:
        raise InputError(f"type ({chi.p},{chi.n}) needs {chi.n + 1} branch points, got {len(B)}")
    p = chi.p
    branched = [(B[j], v) for j, v in enumerate(chi.values()) if v]
    if (len(branched) - 2) * (p - 1) < 2:
        raise DomainError(f"{chi} has a genus-0 quotient")
    pivot = next((v for pt, v in branched if pt is INFINITY), branched[0][1])
    u = pow(pivot, -1, p)
    return PGonalCurve(p, tuple((pt, (v * u) % p) for pt, v in branched))


def renormalize_branches(curve: PGonalCurve, T: Mobius) -> PGonalCurve:
    """
    Move every branch point by T, keeping its exponent.

    Args:
        curve: Curve to transform
        T: Möbius map injective on the branch points

    Returns:
        The isomorphic curve with transformed branch data
    """
    moved = [(T(pt), a) for pt, a in curve.branches]
    for i in range(len(moved)):
        for j in range(i + 1, len(moved)):
            if scalars_equal(moved[i][0], moved[j][0]):
                raise InputError("Möbius map collapses two branch points")
    return PGonalCurve(curve.k, tuple(moved))


def classical_fermat_factors(p: int) -> List[PGonalCurve]:
    """The factors y^p = x (x-1)^alpha, alpha = 1, ..., p-2, of the Fermat curve of degree p."""
    if p < 3:
        raise InputError(f"classical Fermat factors need p >= 3, got {p}")
    return [
        PGonalCurve(p, ((0, 1), (1, alpha), (INFINITY, p - 1 - alpha)))
        for alpha in range(1, p - 1)
    ]
