"""
Named subgroup families: the K_j / H_sigma families of type (2, n) and
the worked subgroup tables for small types.

For an index set I of {1, ..., n+1} with complement C = (c_1, ..., c_m),

    K_I = < a_i (i in I), a_{c_1} a_{c_2}, ..., a_{c_1} a_{c_{m-1}} >

is the kernel of the character that is 1 on C and 0 on I, and S/K_I is the
hyperelliptic curve branched over the b_c, c in C, of genus (m - 2)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from gfcjac.core.errors import ConsistencyError, InputError
from gfcjac.core.group import (
    Character,
    GroupType,
    Subgroup,
    enumerate_hyperplanes,
    parse_element,
    span,
)
from gfcjac.core.orbifold import hyperplane_signature, total_genus
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FamilySubgroup:
    """One member K_I of a named family."""

    j: int
    index_set: Tuple[int, ...]
    complement: Tuple[int, ...]
    subgroup: Subgroup
    character: Character

    @property
    def genus(self) -> int:
        return (len(self.complement) - 2) // 2

    @property
    def label(self) -> str:
        return self.subgroup.label


def _family_member(gt: GroupType, j: int, index_set: Sequence[int]) -> FamilySubgroup:
    n = gt.n
    complement = tuple(c for c in range(1, n + 2) if c not in index_set)
    gens = [gt.generator(i) for i in index_set]
    head = gt.generator(complement[0])
    gens += [gt.add(head, gt.generator(c)) for c in complement[1:-1]]
    values = [0 if j_ in index_set else 1 for j_ in range(1, n + 1)]
    label = f"K{j}{{" + ",".join(str(i) for i in index_set) + "}"
    return FamilySubgroup(j, tuple(index_set), complement, span(gens, gt, label), Character(2, tuple(values)))


def family_sizes(n: int) -> Dict[int, int]:
    """{genus: number of family members} from the binomial counts."""
    sizes: Dict[int, int] = {}
    for size in _index_sizes(n):
        genus = (n + 1 - size - 2) // 2
        sizes[genus] = sizes.get(genus, 0) + math.comb(n + 1, size)
    return dict(sorted(sizes.items()))


def _index_sizes(n: int) -> List[int]:
    if n % 2 == 0:
        return [2 * j - 1 for j in range(1, (n - 2) // 2 + 1)]
    return [2 * j for j in range(0, (n - 3) // 2 + 1)]


def named_family_subgroups(n: int, parity: Optional[str] = None, check: bool = True) -> List[FamilySubgroup]:
    """
    The K_j families of type (2, n).

    Even n uses index sets of size 2j - 1, j = 1, ..., (n-2)/2; odd n uses
    size 2j, j = 0, ..., (n-3)/2. Members with the same j share a genus.

    Args:
        n: Rank, n >= 6
        parity: Optional "even" or "odd"; must agree with n
        check: Verify that the family is exactly the positive-genus hyperplane set

    Returns:
        FamilySubgroup records ordered by j, then index set
    """
    if n < 6:
        raise InputError(f"named families start at n = 6, got {n}")
    actual = "even" if n % 2 == 0 else "odd"
    if parity is not None and parity not in ("even", "odd"):
        raise InputError(f"parity must be 'even' or 'odd', got {parity!r}")
    if parity is not None and parity != actual:
        raise InputError(f"n = {n} is {actual}; the {parity} family does not apply")

    gt = GroupType(2, n)
    gt.check_order()
    members: List[FamilySubgroup] = []
    for size in _index_sizes(n):
        j = (size + 1) // 2 if actual == "even" else size // 2
        for index_set in combinations(range(1, n + 2), size):
            members.append(_family_member(gt, j, index_set))
    log.info(f"type (2,{n}): {len(members)} family subgroups, sizes by genus {family_sizes(n)}")
    if check:
        check_family_coverage(members, gt)
    return members


def check_family_coverage(members: Sequence[FamilySubgroup], gt: GroupType):
    """
    Each member must be the kernel of its character, and together they must
    be exactly the hyperplanes with positive-genus quotient.
    """
    expected = {chi.canonical().coeffs for chi in enumerate_hyperplanes(gt) if hyperplane_signature(chi).genus > 0}
    seen = set()
    for member in members:
        if member.subgroup != member.character.kernel():
            raise ConsistencyError(f"{member.label} is not the kernel of {member.character}")
        if hyperplane_signature(member.character).genus != member.genus:
            raise ConsistencyError(f"{member.label} has the wrong genus")
        key = member.character.canonical().coeffs
        if key in seen:
            raise ConsistencyError(f"{member.label} repeats a hyperplane")
        seen.add(key)
    if seen != expected:
        raise ConsistencyError(
            f"family covers {len(seen)} hyperplanes, {len(expected)} have positive genus"
        )
    genus = sum(m.genus for m in members)
    if genus != total_genus(gt.k, gt.n):
        raise ConsistencyError(f"family genera sum to {genus}, not {total_genus(gt.k, gt.n)}")


# name -> (k, n, ((label, generator words), ...))
SUBGROUP_TABLES: Dict[str, Tuple[int, int, Tuple[Tuple[str, Tuple[str, ...]], ...]]] = {
    "t24": (2, 4, (
        ("H1", ("a1", "a2*a3", "a2*a4")),
        ("H2", ("a2", "a1*a3", "a1*a4")),
        ("H3", ("a3", "a1*a2", "a2*a4")),
        ("H4", ("a4", "a2*a3", "a1*a2")),
        ("H5", ("a5", "a2*a3", "a2*a4")),
    )),
    "t33": (3, 3, (
        ("H1", ("a1", "a2*a3^-1")),
        ("H2", ("a2", "a1*a3^-1")),
        ("H3", ("a3", "a2*a1^-1")),
        ("H4", ("a4", "a2*a3^-1")),
        ("H5", ("a1*a2", "a1*a3")),
        ("H6", ("a1*a2", "a2*a3")),
        ("H7", ("a2*a3", "a1*a3")),
    )),
    "t34": (3, 4, (
        ("H1", ("a1", "a2", "a3*a4^-1")),
        ("H2", ("a1", "a3", "a2*a4^-1")),
        ("H3", ("a1", "a4", "a2*a3^-1")),
        ("H4", ("a1", "a5", "a2*a3^-1")),
        ("H5", ("a2", "a3", "a1*a4^-1")),
        ("H6", ("a2", "a4", "a1*a3^-1")),
        ("H7", ("a2", "a5", "a1*a3^-1")),
        ("H8", ("a3", "a4", "a1*a2^-1")),
        ("H9", ("a3", "a5", "a1*a2^-1")),
        ("H10", ("a4", "a5", "a1*a2^-1")),
        ("L1", ("a1", "a2*a3", "a2*a4")),
        ("L2", ("a1", "a2*a3", "a2*a5")),
        ("L3", ("a1", "a2*a4", "a2*a5")),
        ("L4", ("a2", "a3*a4", "a3*a5")),
        ("L5", ("a2", "a3*a4", "a3*a1")),
        ("L6", ("a2", "a3*a5", "a3*a1")),
        ("L7", ("a3", "a4*a5", "a4*a1")),
        ("L8", ("a3", "a4*a5", "a4*a2")),
        ("L9", ("a3", "a4*a1", "a4*a2")),
        ("L10", ("a4", "a5*a1", "a5*a2")),
        ("L11", ("a4", "a5*a1", "a5*a3")),
        ("L12", ("a4", "a5*a2", "a5*a3")),
        ("L13", ("a5", "a1*a2", "a1*a3")),
        ("L14", ("a5", "a1*a2", "a1*a4")),
        ("L15", ("a5", "a1*a3", "a1*a4")),
        ("R1", ("a1*a2", "a1*a3", "a1*a4")),
        ("R2", ("a1*a2", "a2*a3", "a2*a4")),
        ("R3", ("a3*a2", "a1*a3", "a3*a4")),
        ("R4", ("a4*a2", "a4*a3", "a1*a4")),
        ("R5", ("a5*a2", "a5*a3", "a5*a4")),
    )),
    "u34": (3, 4, (
        ("U1", ("a1", "a2*a3")),
        ("U2", ("a1", "a2*a4")),
    )),
    "f4": (4, 2, (
        ("H1", ("a1*a2^2",)),
        ("H2", ("a2*a1^2",)),
        ("H3", ("a3*a2^2",)),
    )),
    "f6": (6, 2, (
        ("H1", ("1,5", "3,0")),
        ("H2", ("3,0", "0,2")),
        ("H3", ("3,0", "4,4")),
        ("H4", ("2,0", "0,3")),
        ("H5", ("2,0", "3,3")),
        ("H6", ("0,3", "4,4")),
        ("H7", ("0,2", "3,3")),
        ("H8", ("1,5",)),
        ("H9", ("2,1",)),
        ("H10", ("1,2",)),
    )),
    "f8": (8, 2, (
        ("H3", ("a1^-1*a2",)),
        ("H4", ("a1^2*a2^-1",)),
        ("H5", ("a1*a2^-2",)),
        ("H6", ("a1^-3*a2^-1",)),
        ("H7", ("a1^-3*a2",)),
        ("H8", ("a1*a2^2",)),
        ("H9", ("a1^2*a2",)),
    )),
    "f8-quartic": (8, 2, (
        ("H1", ("a1^-2", "a1*a2^4")),
        ("H2", ("a2^-2", "a1^4*a2^-1")),
    )),
}


def subgroup_table(name: str) -> Tuple[GroupType, List[Subgroup]]:
    """
    A named subgroup table, spanned in its group.

    Args:
        name: One of SUBGROUP_TABLES

    Returns:
        (group type, labeled subgroups)
    """
    if name not in SUBGROUP_TABLES:
        raise InputError(f"unknown subgroup table {name!r}; choose from {', '.join(sorted(SUBGROUP_TABLES))}")
    k, n, rows = SUBGROUP_TABLES[name]
    gt = GroupType(k, n)
    return gt, [span([parse_element(w, gt) for w in words], gt, label) for label, words in rows]


def parse_subgroup(text: str, gt: GroupType, label: str = "") -> Subgroup:
    """Subgroup from ";"-separated generator words, e.g. "a1*a2^2;a3"."""
    words = [w for w in text.split(";") if w.strip()]
    if not words:
        raise InputError(f"subgroup {text!r} has no generators")
    return span([parse_element(w, gt) for w in words], gt, label)
