"""
Quotient orbifold signatures S/K for subgroups K of H0.

Every point of S over the cone point b_j has stabilizer exactly <a_j>. With
d_j = |K ∩ <a_j>| the quotient S/K has k^(n-1) d_j / |K| cone points of
order d_j over b_j, and its genus follows from multiplicativity of the
orbifold Euler characteristic.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from gfcjac.core.errors import ConsistencyError, InputError
from gfcjac.core.group import Character, GroupType, Subgroup, intersect_with_cyclic


@dataclass(frozen=True)
class Signature:
    """Genus and cone data (order, count) of a quotient orbifold."""

    genus: int
    cones: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise InputError(f"genus must be non-negative, got {self.genus}")
        merged: Counter = Counter()
        for order, count in self.cones:
            if order < 2:
                raise InputError(f"cone orders must be >= 2, got {order}")
            if count < 0:
                raise InputError(f"cone counts must be >= 0, got {count}")
            merged[int(order)] += int(count)
        object.__setattr__(
            self, "cones", tuple(sorted((o, c) for o, c in merged.items() if c > 0))
        )

    @classmethod
    def of(cls, genus: int, cones: Union[Dict[int, int], Iterable[int]] = ()) -> "Signature":
        """Build from {order: count} or from a flat list of cone orders."""
        if isinstance(cones, dict):
            return cls(genus, tuple(cones.items()))
        return cls(genus, tuple(Counter(cones).items()))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse "(g; o^c, o, ...)" or "(g; -)"."""
        match = re.match(r"^\s*\(\s*(\d+)\s*;\s*(.*?)\s*\)\s*$", text)
        if not match:
            raise InputError(f"malformed signature {text!r}")
        genus, body = int(match.group(1)), match.group(2)
        cones: Counter = Counter()
        if body not in ("", "-", "–"):
            for item in body.split(","):
                order, _, count = item.strip().partition("^")
                cones[int(order)] += int(count) if count else 1
        return cls.of(genus, dict(cones))

    @property
    def cone_orders(self) -> List[int]:
        return [o for o, c in self.cones for _ in range(c)]

    @property
    def cone_count(self) -> int:
        return sum(c for _, c in self.cones)

    def euler_characteristic(self) -> Fraction:
        """2 - 2g - sum count (1 - 1/order)."""
        return 2 - 2 * self.genus - sum(c * (1 - Fraction(1, o)) for o, c in self.cones)

    def __str__(self):
        if not self.cones:
            return f"({self.genus}; -)"
        return f"({self.genus}; " + ", ".join(f"{o}^{c}" for o, c in self.cones) + ")"


def base_euler_characteristic(gt: GroupType) -> Fraction:
    """Euler characteristic of S/H0, signature (0; k^(n+1))."""
    return 2 - (gt.n + 1) * (1 - Fraction(1, gt.k))


def quotient_signature(K: Subgroup, gt: Optional[GroupType] = None) -> Signature:
    """
    Signature of S/K.

    Args:
        K: Subgroup of H0
        gt: Optional group type, must match K's

    Returns:
        Signature with integral non-negative genus
    """
    gt = gt or K.gt
    if gt != K.gt:
        raise InputError(f"subgroup lives in {K.gt}, not {gt}")
    cones: Counter = Counter()
    for j in range(1, gt.n + 2):
        d = intersect_with_cyclic(K, j)
        if d > 1:
            count = Fraction(gt.k ** (gt.n - 1) * d, K.order)
            if count.denominator != 1:
                raise ConsistencyError(f"non-integral cone count {count} over b_{j} for {K}")
            cones[d] += int(count)
    chi = K.index * base_euler_characteristic(gt)
    two_minus_2g = chi + sum(c * (1 - Fraction(1, o)) for o, c in cones.items())
    genus = (2 - two_minus_2g) / 2
    if genus.denominator != 1 or genus < 0:
        raise ConsistencyError(f"quotient genus {genus} of {K} is not a non-negative integer")
    return Signature.of(int(genus), dict(cones))


def hyperplane_signature(chi: Character, gt: Optional[GroupType] = None) -> Signature:
    """
    Fast path for ker(chi): r nonzero values give ((r-2)(p-1)/2; p^(p(n+1-r))).
    """
    gt = gt or chi.group_type
    if gt != chi.group_type:
        raise InputError(f"character of {chi.group_type} used with {gt}")
    p, r = gt.k, chi.branching
    return Signature.of((r - 2) * (p - 1) // 2, {p: p * (gt.n + 1 - r)})
