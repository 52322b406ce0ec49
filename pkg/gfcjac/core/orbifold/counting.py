"""
Genus bookkeeping for generalized Fermat curves of type (p, n).

phi(p, n) = p^(n-1) ((n-1) p - n - 1) and g = 1 + phi/2. psi_q(r) counts
exponent tuples (alpha_2, ..., alpha_r) in {1, ..., q-1} with sum = -1 mod q,
i.e. the normalized cyclic q-gonal factors with r branch points.
"""

import math
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

import numpy as np

from gfcjac.core.errors import ConsistencyError, InputError, ResourceLimitError
from gfcjac.utils.config import Config


def _check_pn(p: int, n: int):
    if p < 2 or n < 2:
        raise InputError(f"need p >= 2 and n >= 2, got ({p}, {n})")


def phi(p: int, n: int) -> int:
    _check_pn(p, n)
    return p ** (n - 1) * ((n - 1) * p - n - 1)


def total_genus(p: int, n: int) -> int:
    """Genus of the generalized Fermat curve of type (p, n)."""
    value = phi(p, n)
    if value % 2:
        raise ConsistencyError(f"phi({p},{n}) = {value} is odd")
    return 1 + value // 2


def r_q(q: int) -> int:
    """Smallest branch count giving positive genus: 4 for q = 2, else 3."""
    return 4 if q == 2 else 3


def psi_closed(q: int, r: int) -> int:
    """(-1)^(r+1) ((1-q)^(r-1) - 1) / q."""
    if q < 2 or r < 2:
        raise InputError(f"need q >= 2 and r >= 2, got ({q}, {r})")
    numerator = (-1) ** (r + 1) * ((1 - q) ** (r - 1) - 1)
    if numerator % q:
        raise ConsistencyError(f"psi closed form is not integral at ({q}, {r})")
    return numerator // q


def psi_small_closed(q: int, r: int) -> int:
    """Expanded forms for r = 3, 4, 5."""
    if r == 3:
        return q - 2
    if r == 4:
        return q * q - 3 * q + 3
    if r == 5:
        return (q - 2) * (q * q - 2 * q + 2)
    raise InputError(f"expanded psi form only for r in 3..5, got {r}")


def psi_bruteforce(q: int, r: int, max_tuples: Optional[int] = None) -> int:
    """
    Exhaustive count of the tuples counted by psi_q(r).

    All (q-1)^(r-1) residue sums are materialized with numpy.

    Args:
        q: Modulus >= 2
        r: Tuple length + 1 (>= 2)
        max_tuples: Resource guard, default from Config (MAX_TUPLES)

    Returns:
        Number of tuples
    """
    if q < 2 or r < 2:
        raise InputError(f"need q >= 2 and r >= 2, got ({q}, {r})")
    limit = max_tuples if max_tuples is not None else int(Config().get("MAX_TUPLES"))
    count = (q - 1) ** (r - 1)
    if count > limit:
        raise ResourceLimitError(f"psi_bruteforce({q},{r}) would enumerate {count} tuples (limit {limit})")
    residues = np.arange(1, q, dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    for _ in range(r - 1):
        sums = (sums[:, None] + residues[None, :]).ravel() % q
    return int(np.count_nonzero(sums == q - 1))


class GenusIdentity(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def genus_sum_identity(q: int, n: int) -> GenusIdentity:
    """
    Compare 1 + phi(q, n)/2 with sum_{r=r_q}^{n+1} C(n+1, r) (r-2)(q-1)/2 psi_q(r).
    """
    if n + 1 < r_q(q):
        raise InputError(f"genus identity needs n + 1 >= {r_q(q)}, got n = {n}")
    lhs = total_genus(q, n)
    rhs = sum(
        math.comb(n + 1, r) * Fraction((r - 2) * (q - 1), 2) * psi_closed(q, r)
        for r in range(r_q(q), n + 2)
    )
    if rhs.denominator != 1:
        raise ConsistencyError(f"genus sum at ({q},{n}) is not integral: {rhs}")
    return GenusIdentity(lhs, int(rhs), lhs == rhs)


def hyperplane_count_with_positive_genus(p: int, n: int) -> int:
    """Number of index-p subgroups whose quotient has genus >= 1."""
    return sum(
        math.comb(n + 1, r) * psi_closed(p, r)
        for r in range(2, n + 2)
        if (r - 2) * (p - 1) >= 2
    )


def cyclic_cover_genus(k: int, exponents: Sequence[int]) -> int:
    """
    Genus of one irreducible component of y^k = prod (x - mu_j)^alpha_j.

    exponents lists alpha_j for every branch point, infinity included, so
    that their sum is 0 mod k. Each component is a k'-gonal cover with
    k' = k / gcd(k, alpha_1, ..., alpha_r).
    """
    if sum(exponents) % k:
        raise InputError(f"exponents {list(exponents)} do not sum to 0 mod {k}")
    e = math.gcd(k, *exponents)
    k1 = k // e
    reduced = [a // e for a in exponents]
    two_g_minus_two = -2 * k1 + sum(k1 - math.gcd(a, k1) for a in reduced)
    if two_g_minus_two % 2:
        raise ConsistencyError(f"Riemann-Hurwitz parity failure for exponents {list(exponents)} mod {k}")
    return two_g_minus_two // 2 + 1
