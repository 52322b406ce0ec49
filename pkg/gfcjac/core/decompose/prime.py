"""
Isogeny decomposition of JS for generalized Fermat curves of prime type.

Every index-p subgroup H_r = ker(chi) with a positive-genus quotient gives
a cyclic p-gonal factor; the pairwise products of distinct hyperplanes are
all of H0, so the Kani-Rosen corollary applies to the whole family.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from gfcjac.core.curves import pgonal_from_character
from gfcjac.core.errors import CertificateError, ConsistencyError, InputError, UnsupportedModeError
from gfcjac.core.group import Character, GroupType, enumerate_hyperplanes
from gfcjac.core.models import Decomposition, DecompositionFactor, ReportMode
from gfcjac.core.orbifold import hyperplane_signature, quotient_signature, r_q, total_genus
from gfcjac.core.scalars import BranchSet
from gfcjac.core.decompose.kani_rosen import check_corollary
from gfcjac.utils.config import Config
from gfcjac.utils.logger import get_logger

log = get_logger(__name__)


def branch_set_for(n: int, lambdas: Sequence) -> BranchSet:
    """The standard branch set (inf, 0, 1, lambda_1, ..., lambda_{n-2})."""
    lambdas = list(lambdas)
    if len(lambdas) != n - 2:
        raise InputError(f"n = {n} needs {n - 2} lambda values, got {len(lambdas)}")
    return BranchSet.standard(lambdas)


def _factor(chi: Character, B: BranchSet, normalize: bool) -> Optional[DecompositionFactor]:
    fast = hyperplane_signature(chi)
    if fast.genus < 1:
        return None
    kernel = chi.kernel()
    slow = quotient_signature(kernel)
    if slow != fast:
        raise ConsistencyError(f"signature engines disagree on {chi}: {slow} vs {fast}")
    curve = pgonal_from_character(chi, B)
    if curve.genus != fast.genus:
        raise ConsistencyError(f"{chi}: curve genus {curve.genus} but quotient genus {fast.genus}")
    if normalize:
        curve = curve.normal_form().normalized()
    log.debug(f"{chi}: {fast} -> {curve.equation}")
    return DecompositionFactor(
        curve=curve,
        genus=fast.genus,
        subgroup_label=chi.label,
        j_value=curve.j_invariant(),
        signature=str(fast),
    )


def decompose_prime(
    p: int,
    n: int,
    B: BranchSet,
    normalize: bool = True,
    progress: bool = False,
    max_workers: Optional[int] = None,
) -> Decomposition:
    """
    Decompose JS into Jacobians of cyclic p-gonal curves.

    Args:
        p: Prime exponent
        n: Rank, with n + 1 >= r_p
        B: Branch set with n + 1 points
        normalize: Move the first three branch points of each factor to (inf, 0, 1)
        progress: Show tqdm bars during certification
        max_workers: Threads for the per-character work (default from Config)

    Returns:
        Decomposition with a passing certificate
    """
    gt = GroupType(p, n)
    if not gt.is_prime:
        raise UnsupportedModeError(f"decompose needs a prime exponent, got {p}; use conjecture for composite k")
    if not isinstance(B, BranchSet):
        B = BranchSet(tuple(B))
    if len(B) != n + 1:
        raise InputError(f"type ({p},{n}) needs {n + 1} branch points, got {len(B)}")
    if n + 1 < r_q(p):
        raise InputError(f"type ({p},{n}) has genus 0; need n + 1 >= {r_q(p)}")
    gt.check_order()

    characters = enumerate_hyperplanes(gt)
    log.info(f"type {gt}: {len(characters)} hyperplanes")
    workers = max_workers if max_workers is not None else int(Config().get("MAX_WORKERS"))

    def build(chi: Character) -> Optional[DecompositionFactor]:
        return _factor(chi, B, normalize)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            built = list(pool.map(build, characters))
    else:
        built = [build(chi) for chi in characters]

    kept = [(chi, f) for chi, f in zip(characters, built) if f is not None]
    kernels = [chi.kernel() for chi, _ in kept]
    certificate = check_corollary(kernels, gt, progress=progress)
    if not certificate.passed:
        raise CertificateError(f"certificate failed for type {gt}: {certificate.reason()}", certificate)

    factors: List[DecompositionFactor] = sorted((f for _, f in kept), key=lambda f: f.sort_key)
    genus = total_genus(p, n)
    if sum(f.genus for f in factors) != genus:
        raise ConsistencyError(f"factor genera do not add up to {genus}")
    log.info(f"type {gt}: {len(factors)} factors, genus {genus}")
    return Decomposition(gt, B, tuple(factors), certificate, genus, ReportMode.THEOREM)
