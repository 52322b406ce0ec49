"""
Fiber-product model of a generalized Fermat curve of type (p, n).
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from gfcjac.core.errors import InputError
from gfcjac.core.orbifold import total_genus
from gfcjac.core.scalars import INFINITY, BranchSet, Scalar, as_scalar, format_scalar, is_zero, scalars_equal


@dataclass(frozen=True, eq=False)
class FermatModel:
    """
    The curve in P^n cut out by x1^p + x2^p + x3^p = 0 and
    lambda_i x1^p + x2^p + x_{i+3}^p = 0 for i = 1, ..., n-2.
    """

    p: int
    n: int
    lambdas: Tuple[Scalar, ...]
    equations: Tuple[str, ...]
    genus: int

    @property
    def branch_set(self) -> BranchSet:
        return BranchSet.standard(self.lambdas)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": {"p": self.p, "n": self.n},
            "lambdas": [format_scalar(lam) for lam in self.lambdas],
            "equations": list(self.equations),
            "genus": self.genus,
        }

    def __str__(self):
        return "\n".join(self.equations)


def _coefficient(lam: Scalar) -> str:
    text = format_scalar(lam)
    if text.startswith("sym:"):
        text = text[4:]
    return f"({text})"


def build_fermat_model(p: int, n: int, lambdas: Sequence) -> FermatModel:
    """
    Build the fiber-product equations.

    Args:
        p: Exponent >= 2
        n: Rank >= 2
        lambdas: n-2 pairwise distinct parameters outside {0, 1, inf}

    Returns:
        FermatModel with its genus
    """
    lambdas = tuple(as_scalar(lam) for lam in lambdas)
    if len(lambdas) != n - 2:
        raise InputError(f"type ({p},{n}) needs {n - 2} parameters, got {len(lambdas)}")
    for lam in lambdas:
        if lam is INFINITY or is_zero(lam) or is_zero(lam - 1):
            raise InputError(f"parameter {format_scalar(lam)} must avoid 0, 1 and inf")
    for i in range(len(lambdas)):
        for j in range(i + 1, len(lambdas)):
            if scalars_equal(lambdas[i], lambdas[j]):
                raise InputError(f"parameters {i + 1} and {j + 1} coincide")
    equations = [f"x1^{p} + x2^{p} + x3^{p} = 0"]
    for i, lam in enumerate(lambdas, start=1):
        equations.append(f"{_coefficient(lam)}*x1^{p} + x2^{p} + x{i + 3}^{p} = 0")
    return FermatModel(p, n, lambdas, tuple(equations), total_genus(p, n))
