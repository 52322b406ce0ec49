"""
The generalized Fermat group H0 = Z_k^n and its subgroups.

Elements are exponent vectors with respect to a_1, ..., a_n. The extra
standard generator a_{n+1} = (a_1 ... a_n)^{-1} is the all-(k-1) vector.
Subgroups carry their full, lexicographically sorted element set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from gfcjac.core.errors import InputError, ResourceLimitError
from gfcjac.utils.config import max_group_order

GroupElement = Tuple[int, ...]


@dataclass(frozen=True)
class GroupType:
    """Type (k, n): H0 = Z_k^n acting with quotient a sphere with n+1 cone points."""

    k: int
    n: int

    def __post_init__(self):
        if not isinstance(self.k, int) or not isinstance(self.n, int):
            raise InputError("group type (k, n) must be integers")
        if self.k < 2:
            raise InputError(f"k must be at least 2, got {self.k}")
        if self.n < 2:
            raise InputError(f"n must be at least 2, got {self.n}")

    @property
    def order(self) -> int:
        return self.k ** self.n

    @property
    def is_prime(self) -> bool:
        return bool(sympy.isprime(self.k))

    def check_order(self, limit: Optional[int] = None):
        """Refuse groups larger than the configured guard."""
        limit = limit if limit is not None else max_group_order()
        if self.order > limit:
            raise ResourceLimitError(
                f"|H0| = {self.k}^{self.n} = {self.order} exceeds the limit {limit} "
                f"(raise GFC_MAX_GROUP_ORDER to override)"
            )

    def identity(self) -> GroupElement:
        return (0,) * self.n

    def generator(self, j: int) -> GroupElement:
        """Standard generator a_j, 1 <= j <= n+1."""
        if not 1 <= j <= self.n + 1:
            raise InputError(f"generator index must be in 1..{self.n + 1}, got {j}")
        if j == self.n + 1:
            return (self.k - 1,) * self.n
        return tuple(1 if i == j - 1 else 0 for i in range(self.n))

    def generators(self) -> List[GroupElement]:
        return [self.generator(j) for j in range(1, self.n + 2)]

    def normalize(self, vector: Sequence[int]) -> GroupElement:
        if len(vector) != self.n:
            raise InputError(f"element needs {self.n} coordinates, got {len(vector)}")
        return tuple(int(v) % self.k for v in vector)

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return tuple((a + b) % self.k for a, b in zip(x, y))

    def scale(self, m: int, x: GroupElement) -> GroupElement:
        return tuple((m * a) % self.k for a in x)

    def element_order(self, x: GroupElement) -> int:
        return self.k // math.gcd(self.k, *x)

    def __str__(self):
        return f"({self.k},{self.n})"


def format_element(x: GroupElement) -> str:
    """Canonical text "a1^e1*a2^e2*...*an^en"."""
    return "*".join(f"a{i + 1}^{e}" for i, e in enumerate(x))


_TOKEN_RE = re.compile(r"^a(\d+)(?:\^\(?(-?\d+)\)?)?$")


def parse_element(text: str, gt: GroupType) -> GroupElement:
    """
    Parse a word in the standard generators, e.g. "a1*a2^-1", "a3^2" or "1".

    A comma separated exponent vector ("1,5") is accepted as well.
    """
    raw = text.replace(" ", "")
    if raw in ("", "1", "e"):
        return gt.identity()
    if "," in raw:
        try:
            return gt.normalize([int(v) for v in raw.strip("()").split(",")])
        except ValueError as e:
            raise InputError(f"malformed exponent vector {text!r}") from e
    result = gt.identity()
    for token in raw.split("*"):
        match = _TOKEN_RE.match(token)
        if not match:
            raise InputError(f"malformed generator word {text!r} at {token!r}")
        j = int(match.group(1))
        e = int(match.group(2)) if match.group(2) is not None else 1
        result = gt.add(result, gt.scale(e, gt.generator(j)))
    return result


def _rows(array: np.ndarray) -> Tuple[GroupElement, ...]:
    return tuple(tuple(row) for row in array.tolist())


@lru_cache(maxsize=32)
def _all_elements(gt: GroupType) -> np.ndarray:
    gt.check_order()
    grids = np.meshgrid(*([np.arange(gt.k)] * gt.n), indexing="ij")
    array = np.stack(grids, axis=-1).reshape(-1, gt.n).astype(np.int64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Subgroup:
    """
    A subgroup of H0 with its enumerated, sorted element set.

    Equality and hashing use the element set only; generators and label
    are presentation.
    """

    gt: GroupType
    generators: Tuple[GroupElement, ...]
    elements: Tuple[GroupElement, ...]
    label: str = field(default="", compare=False)

    @classmethod
    def _from_array(cls, gt: GroupType, generators: Iterable[GroupElement], array: np.ndarray,
                    label: str = "") -> "Subgroup":
        return cls(gt, tuple(tuple(g) for g in generators), _rows(array), label)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        """[H0 : K]."""
        return self.gt.order // self.order

    @cached_property
    def members(self) -> FrozenSet[GroupElement]:
        return frozenset(self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        array = np.array(self.elements, dtype=np.int64).reshape(-1, self.gt.n)
        array.setflags(write=False)
        return array

    def __contains__(self, x) -> bool:
        return tuple(x) in self.members

    def contains(self, x: GroupElement) -> bool:
        return tuple(x) in self.members

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.gt == other.gt and self.members <= other.members

    def with_label(self, label: str) -> "Subgroup":
        return Subgroup(self.gt, self.generators, self.elements, label)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.gt == other.gt and self.elements == other.elements

    def __hash__(self):
        return hash((self.gt, self.elements))

    def __str__(self):
        gens = ", ".join(format_element(g) for g in self.generators) or "1"
        name = f"{self.label} = " if self.label else ""
        return f"{name}<{gens}> (order {self.order})"


def span(gens: Iterable[Sequence[int]], gt: GroupType, label: str = "") -> Subgroup:
    """
    Subgroup generated by gens: closure under addition mod k.

    Args:
        gens: Exponent vectors with n coordinates
        gt: Group type
        label: Optional display label

    Returns:
        Subgroup with sorted element set
    """
    gt.check_order()
    generators = [gt.normalize(g) for g in gens]
    current = np.zeros((1, gt.n), dtype=np.int64)
    members = {gt.identity()}
    for g in generators:
        if g in members:
            continue
        g_arr = np.array(g, dtype=np.int64)
        multiples = (np.arange(gt.element_order(g), dtype=np.int64)[:, None] * g_arr[None, :]) % gt.k
        current = np.unique((current[:, None, :] + multiples[None, :, :]).reshape(-1, gt.n) % gt.k, axis=0)
        members = set(_rows(current))
    return Subgroup._from_array(gt, generators, current, label)


def product(A: Subgroup, B: Subgroup) -> Subgroup:
    """The subgroup AB = {ab} generated by A and B."""
    if A.gt != B.gt:
        raise InputError(f"cannot multiply subgroups of {A.gt} and {B.gt}")
    gt = A.gt
    sums = (A.array[:, None, :] + B.array[None, :, :]).reshape(-1, gt.n) % gt.k
    return Subgroup._from_array(gt, A.generators + B.generators, np.unique(sums, axis=0))


def intersect_with_cyclic(K: Subgroup, j: int) -> int:
    """d_j = |K ∩ <a_j>|, a divisor of k."""
    gt = K.gt
    a_j = gt.generator(j)
    return sum(1 for m in range(gt.k) if gt.scale(m, a_j) in K.members)


def trivial_subgroup(gt: GroupType) -> Subgroup:
    return Subgroup(gt, (), (gt.identity(),), "1")


def full_group(gt: GroupType) -> Subgroup:
    return Subgroup._from_array(gt, [gt.generator(j) for j in range(1, gt.n + 1)], _all_elements(gt), "H0")


def filter_elements(gt: GroupType, coeffs: Sequence[int], modulus: int) -> np.ndarray:
    """Rows x of H0 with sum(coeffs * x) = 0 mod modulus."""
    array = _all_elements(gt)
    mask = (array @ np.array(coeffs, dtype=np.int64)) % modulus == 0
    return array[mask]


def cyclic_subgroups(gt: GroupType, order: int) -> List[Subgroup]:
    """
    All cyclic subgroups of the given order, in order of their
    lexicographically smallest generator.
    """
    if order < 1 or gt.k % order:
        raise InputError(f"cyclic subgroups of Z_{gt.k}^{gt.n} have order dividing {gt.k}, got {order}")
    seen = set()
    result = []
    for row in _rows(_all_elements(gt)):
        if gt.element_order(row) != order:
            continue
        H = span([row], gt)
        if H.elements in seen:
            continue
        seen.add(H.elements)
        result.append(H)
    return result
