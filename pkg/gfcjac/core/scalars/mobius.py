"""
Möbius transformations acting on the Riemann sphere, and branch sets.

Maps are 2x2 matrices of Scalars acting projectively; the point at
infinity is the INFINITY singleton.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Tuple

from gfcjac.core.errors import InputError, UnsupportedModeError
from gfcjac.core.scalars.field import (
    INFINITY,
    Scalar,
    ScalarMode,
    as_scalar,
    format_scalar,
    is_zero,
    mode_of,
    scalars_equal,
)
from gfcjac.core.scalars.numeric import DEFAULT_PRECISION, BigComplex, root_of_unity
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Mobius:
    """x -> (a*x + b) / (c*x + d) with nonzero determinant."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = as_scalar(getattr(self, name))
            if value is INFINITY:
                raise InputError("Möbius matrix entries must be finite")
            object.__setattr__(self, name, value)
        if is_zero(self.determinant()):
            raise InputError("Möbius matrix is singular")

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def determinant(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def __call__(self, x: Scalar) -> Scalar:
        if x is INFINITY:
            if is_zero(self.c):
                return INFINITY
            return self.a / self.c
        denominator = self.c * x + self.d
        if is_zero(denominator):
            return INFINITY
        return (self.a * x + self.b) / denominator

    def compose(self, other: "Mobius") -> "Mobius":
        """self ∘ other."""
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def equals(self, other: "Mobius") -> bool:
        """Projective equality: the two matrices are proportional."""
        m1 = (self.a, self.b, self.c, self.d)
        m2 = (other.a, other.b, other.c, other.d)
        return all(
            is_zero(m1[i] * m2[j] - m1[j] * m2[i])
            for i in range(4)
            for j in range(i + 1, 4)
        )

    def is_identity(self) -> bool:
        return is_zero(self.b) and is_zero(self.c) and is_zero(self.a - self.d)

    def __str__(self):
        a, b, c, d = (format_scalar(v) for v in (self.a, self.b, self.c, self.d))
        return f"x -> (({a})*x + ({b}))/(({c})*x + ({d}))"


def _to_infinity_zero_one(z1: Scalar, z2: Scalar, z3: Scalar) -> Mobius:
    """The map sending z1 -> inf, z2 -> 0, z3 -> 1."""
    if z1 is INFINITY:
        return Mobius(1, -z2, 0, z3 - z2)
    if z2 is INFINITY:
        return Mobius(0, z3 - z1, 1, -z1)
    if z3 is INFINITY:
        return Mobius(1, -z2, 1, -z1)
    return Mobius(z3 - z1, -z2 * (z3 - z1), z3 - z2, -z1 * (z3 - z2))


def _check_distinct(points: Sequence[Scalar], what: str):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if scalars_equal(points[i], points[j]):
                raise InputError(f"{what} repeats the point {format_scalar(points[i])}")


def mobius_from_triple(src: Sequence, dst: Sequence) -> Mobius:
    """
    The unique Möbius map sending src[i] to dst[i].

    Args:
        src: Three distinct points
        dst: Three distinct points

    Returns:
        Mobius transformation
    """
    if len(src) != 3 or len(dst) != 3:
        raise InputError("mobius_from_triple needs exactly three source and three target points")
    src = [as_scalar(v) for v in src]
    dst = [as_scalar(v) for v in dst]
    _check_distinct(src, "source triple")
    _check_distinct(dst, "target triple")
    return _to_infinity_zero_one(*dst).inverse() @ _to_infinity_zero_one(*src)


def cross_ratio(z1: Scalar, z2: Scalar, z3: Scalar, z4: Scalar) -> Scalar:
    """Image of z4 under the map sending (z1, z2, z3) to (inf, 0, 1)."""
    return mobius_from_triple((z1, z2, z3), (INFINITY, 0, 1))(as_scalar(z4))


@dataclass(frozen=True, eq=False)
class BranchSet:
    """
    Ordered cone points b_1, ..., b_{n+1} of the quotient sphere.

    The conventional order is (inf, 0, 1, lambda_1, ..., lambda_{n-2});
    the fixed points of a_j lie over b_j.
    """

    points: Tuple[Scalar, ...]

    def __post_init__(self):
        points = tuple(as_scalar(p) for p in self.points)
        object.__setattr__(self, "points", points)
        if len(points) < 3:
            raise InputError(f"a branch set needs at least 3 points, got {len(points)}")
        if self.mode is ScalarMode.SYMBOLIC:
            # Distinctness of symbolic parameters is assumed.
            return
        _check_distinct(points, "branch set")

    @classmethod
    def standard(cls, lambdas: Iterable) -> "BranchSet":
        """(inf, 0, 1, lambda_1, ..., lambda_{n-2})."""
        return cls((INFINITY, 0, 1, *lambdas))

    @property
    def mode(self) -> ScalarMode:
        return mode_of(self.points)

    @property
    def lambdas(self) -> Tuple[Scalar, ...]:
        return self.points[3:]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def index_of(self, point: Scalar) -> Optional[int]:
        for i, q in enumerate(self.points):
            if scalars_equal(point, q):
                return i
        return None

    def __str__(self):
        return "{" + ", ".join(format_scalar(p) for p in self.points) + "}"


def branch_permutation(T: Mobius, points: Sequence[Scalar]) -> Optional[Tuple[int, ...]]:
    """Permutation of point indices induced by T, or None if T does not preserve the set."""
    image = []
    used = set()
    for p in points:
        q = T(p)
        match = None
        for j, r in enumerate(points):
            if j not in used and scalars_equal(q, r):
                match = j
                break
        if match is None:
            return None
        used.add(match)
        image.append(match)
    return tuple(image)


def symmetries_of_branch_set(B) -> List[Mobius]:
    """
    All Möbius maps permuting the branch set.

    The first three points are sent to every ordered triple of distinct
    points; a candidate is kept when it maps the whole set onto itself.
    BigComplex points are matched within their tolerance.

    Args:
        B: BranchSet (or a sequence of at least three distinct points)

    Returns:
        The symmetry group as a list, identity first
    """
    points = list(B.points if isinstance(B, BranchSet) else (as_scalar(p) for p in B))
    if len(points) < 3:
        raise InputError("symmetry search needs at least 3 points")
    if mode_of(points) is ScalarMode.SYMBOLIC:
        raise UnsupportedModeError("symmetries of a symbolic branch set are not decidable")

    src = points[:3]
    found: List[Mobius] = []
    for i, j, k in permutations(range(len(points)), 3):
        T = mobius_from_triple(src, (points[i], points[j], points[k]))
        if branch_permutation(T, points) is not None:
            found.append(T)
    log.debug(f"branch set of size {len(points)} has {len(found)} symmetries")
    return found


def mobius_order(T: Mobius, points: Sequence[Scalar]) -> int:
    """
    Order of a branch-set symmetry.

    A Möbius map fixing three points is the identity, so the order equals
    the order of the permutation it induces on a set of three or more points.
    """
    perm = branch_permutation(T, list(points))
    if perm is None:
        raise InputError("map does not preserve the point set")
    seen = set()
    order = 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def roots_of_unity_branch_set(m: int, precision: int = DEFAULT_PRECISION) -> BranchSet:
    """
    The m-th roots of unity moved so that 1, zeta, zeta^2 land on inf, 0, 1.

    The rotation x -> zeta*x becomes a symmetry of order m of the result.
    """
    if m < 3:
        raise InputError("need at least three roots of unity")
    roots = [root_of_unity(m, k, precision) for k in range(m)]
    T = mobius_from_triple(roots[:3], (INFINITY, 0, 1))
    points = [INFINITY, 0, 1] + [T(z) for z in roots[3:]]
    return BranchSet(tuple(points))
