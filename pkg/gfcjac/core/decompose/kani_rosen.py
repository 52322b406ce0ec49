"""
Kani-Rosen certificates for families of subgroups of H0.

H0 is abelian, so the commuting condition H_i H_j = H_j H_i always holds;
everything reduces to genera of quotients S/H_i H_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from gfcjac.core.errors import InputError
from gfcjac.core.group import GroupType, Subgroup, product, trivial_subgroup
from gfcjac.core.models import Certificate
from gfcjac.core.orbifold import quotient_signature, total_genus
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)


class _GenusCache:
    """Memoized genus of S/K, keyed by the element set of K."""

    def __init__(self):
        self._cache: Dict[Subgroup, int] = {}

    def __call__(self, K: Subgroup) -> int:
        genus = self._cache.get(K)
        if genus is None:
            genus = quotient_signature(K).genus
            self._cache[K] = genus
        return genus


def _labels(subgroups: Sequence[Subgroup]) -> Tuple[str, ...]:
    return tuple(H.label or f"H{i}" for i, H in enumerate(subgroups, start=1))


def _common_type(subgroups: Sequence[Subgroup]) -> Optional[GroupType]:
    types = {H.gt for H in subgroups}
    if len(types) > 1:
        raise InputError(f"subgroups live in different groups: {sorted(str(t) for t in types)}")
    return next(iter(types), None)


@dataclass(frozen=True, eq=False)
class KaniRosenInstance:
    """
    Subgroups H_1, ..., H_s of one H0 with integer weights n_1, ..., n_s.

    The quotient-genus matrix has entries g_ij = genus of S/H_i H_j, so the
    diagonal holds the genera of the S/H_i.
    """

    subgroups: Tuple[Subgroup, ...]
    weights: Tuple[int, ...] = ()
    _cache: _GenusCache = field(default_factory=_GenusCache, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "subgroups", tuple(self.subgroups))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.subgroups:
            raise InputError("a Kani-Rosen instance needs at least one subgroup")
        _common_type(self.subgroups)
        if self.weights and len(self.weights) != len(self.subgroups):
            raise InputError(f"{len(self.weights)} weights for {len(self.subgroups)} subgroups")

    @classmethod
    def from_corollary(cls, subgroups: Sequence[Subgroup], gt: Optional[GroupType] = None) -> "KaniRosenInstance":
        """Append the trivial subgroup with weight 1; every H_i gets weight -1."""
        gt = gt or _common_type(subgroups)
        if gt is None:
            raise InputError("group type is needed when no subgroups are given")
        subgroups = list(subgroups) + [trivial_subgroup(gt)]
        weights = [-1] * (len(subgroups) - 1) + [1]
        return cls(tuple(subgroups), tuple(weights))

    @property
    def gt(self) -> GroupType:
        return self.subgroups[0].gt

    @property
    def labels(self) -> Tuple[str, ...]:
        return _labels(self.subgroups)

    def genus_matrix(self, progress: bool = False) -> np.ndarray:
        s = len(self.subgroups)
        matrix = np.zeros((s, s), dtype=np.int64)
        pairs = [(i, j) for i in range(s) for j in range(i, s)]
        for i, j in tqdm(pairs, desc="quotient genera", disable=not progress, leave=False):
            H = self.subgroups[i] if i == j else product(self.subgroups[i], self.subgroups[j])
            matrix[i, j] = matrix[j, i] = self._cache(H)
        return matrix


def check_corollary(
    subgroups: Sequence[Subgroup],
    gt: Optional[GroupType] = None,
    progress: bool = False,
) -> Certificate:
    """
    Check g_{H_i H_j} = 0 for i < j and sum g_{H_j} = g.

    Args:
        subgroups: Subgroups of one H0
        gt: Group type, required only for an empty list
        progress: Show a tqdm bar over the pairs

    Returns:
        Certificate; failure is reported, never raised
    """
    subgroups = list(subgroups)
    gt = _common_type(subgroups) or gt
    if gt is None:
        raise InputError("group type is needed when no subgroups are given")
    genus = _GenusCache()
    labels = _labels(subgroups)
    genera = tuple(genus(H) for H in subgroups)
    target = total_genus(gt.k, gt.n)

    failing: Optional[Tuple[str, str]] = None
    failing_genus: Optional[int] = None
    pairs = list(combinations(range(len(subgroups)), 2))
    for i, j in tqdm(pairs, desc="pairwise quotients", disable=not progress, leave=False):
        g_ij = genus(product(subgroups[i], subgroups[j]))
        if g_ij:
            failing, failing_genus = (labels[i], labels[j]), g_ij
            log.debug(f"S/{labels[i]}{labels[j]} has genus {g_ij}")
            break

    genus_sum = sum(genera)
    passed = failing is None and genus_sum == target
    log.info(
        f"corollary check on {gt}: {len(subgroups)} subgroups, genus sum {genus_sum}/{target}, "
        f"{'pass' if passed else 'fail'}"
    )
    return Certificate(
        passed=passed,
        pairwise_zero=failing is None,
        genus_sum=genus_sum,
        total_genus=target,
        labels=labels,
        quotient_genera=genera,
        failing_pair=failing,
        failing_pair_genus=failing_genus,
    )


def _isogeny_statement(labels: Sequence[str], weights: Sequence[int]) -> str:
    def side(sign: int) -> str:
        parts = []
        for label, w in zip(labels, weights):
            if w * sign > 0:
                name = "JS" if label == "1" else f"JS/{label}"
                parts.append(name if abs(w) == 1 else f"({name})^{abs(w)}")
        return " x ".join(parts) or "0"

    return f"{side(1)} ~ {side(-1)}"


def check_general(instance: KaniRosenInstance, progress: bool = False) -> Certificate:
    """
    Evaluate sum n_i n_j g_ij = 0 and, for every i, sum_j n_j g_ij = 0.

    When both hold, the product of the JS/H_i with positive weight is
    isogenous to the product of those with negative weight.
    """
    if not instance.weights:
        raise InputError("general Kani-Rosen check needs weights")
    G = instance.genus_matrix(progress)
    w = np.array(instance.weights, dtype=np.int64)
    rows = G @ w
    condition_a = int(w @ rows) == 0
    condition_b = not rows.any()
    diagonal = np.diag(G)
    off_diagonal = G - np.diag(diagonal)
    # the trivial subgroup pairs with H_i to give g_{H_i} itself
    proper = np.array([H.order > 1 and w_i != 0 for H, w_i in zip(instance.subgroups, w)])
    positive = int(sum(int(x) * int(g) for x, g in zip(w, diagonal) if x > 0))
    negative = int(sum(-int(x) * int(g) for x, g in zip(w, diagonal) if x < 0))
    labels = instance.labels
    passed = condition_a and condition_b
    log.info(f"general check on {instance.gt}: (a) {condition_a}, (b) {condition_b}")
    return Certificate(
        passed=passed,
        pairwise_zero=not off_diagonal[np.ix_(proper, proper)].any(),
        genus_sum=negative,
        total_genus=positive,
        labels=labels,
        quotient_genera=tuple(int(g) for g in diagonal),
        weights=instance.weights,
        isogeny=_isogeny_statement(labels, instance.weights),
    )


def corollary_via_general(subgroups: Sequence[Subgroup], progress: bool = False) -> Certificate:
    """check_general on the weighted instance built by KaniRosenInstance.from_corollary."""
    return check_general(KaniRosenInstance.from_corollary(subgroups), progress)


def positive_genus(subgroups: Sequence[Subgroup]) -> List[Subgroup]:
    cache = _GenusCache()
    return [H for H in subgroups if cache(H) > 0]
