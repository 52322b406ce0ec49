"""
Characters Z_p^n -> Z_p and their kernels, the index-p subgroups of H0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import List, Tuple

import sympy

from gfcjac.core.errors import InputError, UnsupportedModeError
from gfcjac.core.group.abelian import GroupType, Subgroup, filter_elements


@dataclass(frozen=True)
class Character:
    """
    chi(a_j) = coeffs[j-1] for j <= n, chi(a_{n+1}) = -sum(coeffs) mod p.

    Unit multiples define the same hyperplane; canonical() scales the first
    nonzero coefficient to 1.
    """

    p: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise UnsupportedModeError(f"characters need a prime modulus, got k = {self.p}")
        coeffs = tuple(int(c) % self.p for c in self.coeffs)
        if not any(coeffs):
            raise InputError("the zero character has no hyperplane kernel")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def group_type(self) -> GroupType:
        return GroupType(self.p, self.n)

    def value(self, j: int) -> int:
        if not 1 <= j <= self.n + 1:
            raise InputError(f"generator index must be in 1..{self.n + 1}, got {j}")
        if j == self.n + 1:
            return (-sum(self.coeffs)) % self.p
        return self.coeffs[j - 1]

    def values(self) -> Tuple[int, ...]:
        """Values on a_1, ..., a_{n+1}."""
        return self.coeffs + ((-sum(self.coeffs)) % self.p,)

    @property
    def branching(self) -> int:
        """r = number of standard generators not in the kernel."""
        return sum(1 for v in self.values() if v)

    def canonical(self) -> "Character":
        lead = next(c for c in self.coeffs if c)
        inv = pow(lead, -1, self.p)
        return Character(self.p, tuple(c * inv for c in self.coeffs))

    def same_hyperplane(self, other: "Character") -> bool:
        return self.p == other.p and self.canonical().coeffs == other.canonical().coeffs

    def kernel(self) -> Subgroup:
        """ker(chi), of order p^(n-1), with a basis e_j - c_j e_i as generators."""
        gt = self.group_type
        chi = self.canonical()
        lead = next(i for i, c in enumerate(chi.coeffs) if c)
        basis = []
        for j in range(self.n):
            if j == lead:
                continue
            g = [0] * self.n
            g[j] = 1
            g[lead] = (-chi.coeffs[j]) % self.p
            basis.append(tuple(g))
        return Subgroup._from_array(gt, basis, filter_elements(gt, chi.coeffs, self.p), chi.label)

    @property
    def label(self) -> str:
        return "chi(" + ",".join(str(c) for c in self.coeffs) + ")"

    def __str__(self):
        return self.label


def enumerate_hyperplanes(gt: GroupType) -> List[Character]:
    """
    One canonical character per index-p subgroup of Z_p^n.

    Args:
        gt: Group type with prime k

    Returns:
        (p^n - 1)/(p - 1) characters in lexicographic order of coefficients
    """
    if not gt.is_prime:
        raise UnsupportedModeError(
            f"k = {gt.k} is composite; hyperplane enumeration needs a prime. "
            f"Supply explicit subgroups instead (verify --subgroup ...)"
        )
    gt.check_order()
    result = []
    for coeffs in cartesian(range(gt.k), repeat=gt.n):
        first = next((c for c in coeffs if c), 0)
        if first == 1:
            result.append(Character(gt.k, coeffs))
    return result


def character_of_kernel(K: Subgroup) -> Character:
    """The canonical character whose kernel is K (K must be a hyperplane)."""
    gt = K.gt
    if K.order * gt.k != gt.order:
        raise InputError(f"{K} is not an index-{gt.k} subgroup")
    for chi in enumerate_hyperplanes(gt):
        if all(sum(c * x for c, x in zip(chi.coeffs, g)) % gt.k == 0 for g in K.generators or K.elements):
            return chi
    raise InputError(f"{K} is not a hyperplane of {gt}")
