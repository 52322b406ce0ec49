"""
Composite exponents: candidate factor lists and the subgroup criterion search.

Candidates are the curves y^k = prod (x - a_j)^alpha_j with a an r-subset
of the branch set (up to its Möbius symmetries) and alpha an exponent tuple
up to units of Z_k. They carry no isogeny claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product as cartesian
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gfcjac.core.curves import PGonalCurve
from gfcjac.core.errors import InputError, ResourceLimitError
from gfcjac.core.group import GroupType, Subgroup, cyclic_subgroups, format_element
from gfcjac.core.models import Certificate, ReportMode
from gfcjac.core.orbifold import Signature, cyclic_cover_genus, quotient_signature, total_genus
from gfcjac.core.scalars import BranchSet, ScalarMode, branch_permutation, format_scalar, symmetries_of_branch_set
from gfcjac.core.decompose.kani_rosen import check_corollary
from gfcjac.utils.config import Config
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)


def units(k: int) -> List[int]:
    return [u for u in range(1, k) if math.gcd(u, k) == 1]


def exponent_classes(k: int, r: int, max_tuples: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    U_{r,k}: tuples in {1, ..., k-1}^r summing to 0 mod k, one per unit orbit.

    Each orbit is represented by its lexicographically smallest member.
    """
    if k < 2 or r < 1:
        raise InputError(f"need k >= 2 and r >= 1, got ({k}, {r})")
    limit = max_tuples if max_tuples is not None else int(Config().get("MAX_TUPLES"))
    count = (k - 1) ** r
    if count > limit:
        raise ResourceLimitError(f"U_{{{r},{k}}} would scan {count} tuples (limit {limit})")
    unit_list = units(k)
    seen = set()
    result = []
    for alpha in cartesian(range(1, k), repeat=r):
        if sum(alpha) % k:
            continue
        rep = min(tuple((u * a) % k for a in alpha) for u in unit_list)
        if rep not in seen:
            seen.add(rep)
            result.append(rep)
    return sorted(result)


def point_subsets(B: BranchSet, r: int, reduce_by_symmetry: bool = True) -> List[Tuple[int, ...]]:
    """
    A_r: r-subsets of branch-point indices, one per orbit of the symmetry
    group of B when reduce_by_symmetry is set.
    """
    subsets = list(combinations(range(len(B)), r))
    if not reduce_by_symmetry:
        return subsets
    if B.mode is ScalarMode.SYMBOLIC:
        log.info("symbolic branch set: subsets are not reduced by symmetry")
        return subsets
    perms = [branch_permutation(T, B.points) for T in symmetries_of_branch_set(B)]
    seen = set()
    result = []
    for subset in subsets:
        if subset in seen:
            continue
        result.append(subset)
        for perm in perms:
            seen.add(tuple(sorted(perm[i] for i in subset)))
    return result


@dataclass(frozen=True, eq=False)
class CandidateFactor:
    """One (a, alpha) pair and its curve."""

    indices: Tuple[int, ...]
    alpha: Tuple[int, ...]
    curve: PGonalCurve

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def reducible(self) -> bool:
        return not self.curve.is_irreducible

    @property
    def label(self) -> str:
        points = ",".join(str(i + 1) for i in self.indices)
        return f"a({points})|alpha(" + ",".join(str(a) for a in self.alpha) + ")"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "equation": self.curve.equation,
            "genus": self.genus,
            "reducible": self.reducible,
        }


@dataclass(frozen=True, eq=False)
class ConjecturalReport:
    gfc_type: GroupType
    parameters: BranchSet
    candidates: Tuple[CandidateFactor, ...]
    genus_total: int
    reduced: bool
    mode: ReportMode = ReportMode.CONJECTURAL

    @property
    def reducible(self) -> List[CandidateFactor]:
        return [c for c in self.candidates if c.reducible]

    @property
    def candidate_genus_sum(self) -> int:
        return sum(c.genus for c in self.candidates if not c.reducible)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": {"p": self.gfc_type.k, "n": self.gfc_type.n},
            "genus": self.genus_total,
            "parameters": [format_scalar(b) for b in self.parameters],
            "factors": [c.to_dict() for c in self.candidates],
            "reduced_by_symmetry": self.reduced,
            "mode": self.mode.value,
        }


def conjectural_enumeration(
    k: int,
    n: int,
    B: BranchSet,
    reduce_by_symmetry: bool = True,
    max_tuples: Optional[int] = None,
) -> ConjecturalReport:
    """
    Candidate factors (a, alpha), a in A_r, alpha in U_{r,k}, of positive genus.

    Reducible equations (gcd(k, alpha) > 1) are kept and flagged; no
    irreducible component is chosen for them.

    Args:
        k: Exponent >= 2, composite allowed
        n: Rank
        B: Branch set with n + 1 points
        reduce_by_symmetry: Reduce point subsets by the Möbius symmetries of B
        max_tuples: Guard on the exponent-tuple scan (default from Config)

    Returns:
        ConjecturalReport in CONJECTURAL mode
    """
    gt = GroupType(k, n)
    if not isinstance(B, BranchSet):
        B = BranchSet(tuple(B))
    if len(B) != n + 1:
        raise InputError(f"type ({k},{n}) needs {n + 1} branch points, got {len(B)}")
    candidates: List[CandidateFactor] = []
    for r in range(3, n + 2):
        alphas = [a for a in exponent_classes(k, r, max_tuples) if cyclic_cover_genus(k, a) >= 1]
        if not alphas:
            continue
        for subset in point_subsets(B, r, reduce_by_symmetry):
            for alpha in alphas:
                curve = PGonalCurve(k, tuple((B[i], a) for i, a in zip(subset, alpha)))
                candidates.append(CandidateFactor(subset, alpha, curve))
    flagged = sum(1 for c in candidates if c.reducible)
    log.info(f"type {gt}: {len(candidates)} candidates, {flagged} reducible")
    return ConjecturalReport(gt, B, tuple(candidates), total_genus(k, n), reduce_by_symmetry)


def scan_cyclic_subgroups(gt: GroupType, order: int) -> Dict[Signature, List[Subgroup]]:
    """
    Cyclic subgroups of one order grouped by the signature of S/K.

    Args:
        gt: Group type, any k
        order: Divisor of k

    Returns:
        {signature: subgroups} in order of first appearance
    """
    gt.check_order()
    classes: Dict[Signature, List[Subgroup]] = {}
    for H in cyclic_subgroups(gt, order):
        labeled = H.with_label("<" + format_element(H.generators[0]) + ">")
        classes.setdefault(quotient_signature(labeled), []).append(labeled)
    log.debug(f"{gt}, order {order}: " + ", ".join(f"{s} x{len(v)}" for s, v in classes.items()))
    return classes


@dataclass(frozen=True, eq=False)
class CriterionResult:
    """Outcome of the criterion search over signature classes."""

    gfc_type: GroupType
    mode: ReportMode
    signature: Optional[Signature]
    subgroups: Tuple[Subgroup, ...]
    certificate: Optional[Certificate]
    tried: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": {"p": self.gfc_type.k, "n": self.gfc_type.n},
            "mode": self.mode.value,
            "signature": str(self.signature) if self.signature else None,
            "subgroups": [H.label for H in self.subgroups],
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "tried": self.tried,
        }


def criterion_search(gt: GroupType, orders: Optional[Sequence[int]] = None,
                     progress: bool = False) -> CriterionResult:
    """
    Look for a signature class of cyclic subgroups passing the corollary check.

    Orders default to the divisors of k above 1, largest first; within an
    order, classes are tried one at a time in scan order.
    """
    orders = list(orders) if orders else sorted((d for d in range(2, gt.k + 1) if gt.k % d == 0), reverse=True)
    tried = 0
    for order in orders:
        for signature, subgroups in scan_cyclic_subgroups(gt, order).items():
            if signature.genus < 1:
                continue
            tried += 1
            certificate = check_corollary(subgroups, gt, progress=progress)
            if certificate.passed:
                log.info(f"{gt}: {len(subgroups)} cyclic subgroups of order {order} with {signature} pass")
                return CriterionResult(gt, ReportMode.VERIFIED_CRITERION, signature, tuple(subgroups),
                                       certificate, tried)
    log.info(f"{gt}: no signature class passes after {tried} tries")
    return CriterionResult(gt, ReportMode.CONJECTURAL, None, (), None, tried)
