"""
Core data models for GFC-Jac

Contains data classes and enums shared by the decomposition pipelines,
the report writers and the CLI.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from gfcjac.core.curves import HyperellipticModel, PGonalCurve
from gfcjac.core.errors import InputError
from gfcjac.core.group import GroupType
from gfcjac.core.scalars import BranchSet, Scalar, format_scalar


class ReportMode(Enum):
    """How much a factor list is backed by proof."""
    THEOREM = "THEOREM"
    VERIFIED_CRITERION = "VERIFIED-CRITERION"
    CONJECTURAL = "CONJECTURAL"


class OutputFormat(Enum):
    """Report format"""
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class Certificate:
    """
    Verdict of a Kani-Rosen check.

    For the weighted check, genus_sum holds the genus of the negative-weight
    side and total_genus the genus of the positive-weight side; to_dict()
    reports them as negative_weight_genus and positive_weight_genus.
    """
    passed: bool
    pairwise_zero: bool
    genus_sum: int
    total_genus: int
    labels: Tuple[str, ...] = ()
    quotient_genera: Tuple[int, ...] = ()
    failing_pair: Optional[Tuple[str, str]] = None
    failing_pair_genus: Optional[int] = None
    # general mode only
    weights: Tuple[int, ...] = ()
    isogeny: str = ""

    @property
    def genus_balanced(self) -> bool:
        return self.genus_sum == self.total_genus

    def reason(self) -> str:
        """One-line explanation of a failure, empty when passed."""
        if self.passed:
            return ""
        if self.weights:
            return "weighted genus conditions do not vanish"
        if self.failing_pair is not None:
            a, b = self.failing_pair
            return f"S/{a}{b} has genus {self.failing_pair_genus}, not 0"
        return f"quotient genera sum to {self.genus_sum}, not {self.total_genus}"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"passed": self.passed, "pairwise_zero": self.pairwise_zero}
        if self.weights:
            data["negative_weight_genus"] = self.genus_sum
            data["positive_weight_genus"] = self.total_genus
            data["weights"] = list(self.weights)
            data["isogeny"] = self.isogeny
        else:
            data["genus_sum"] = self.genus_sum
            data["total_genus"] = self.total_genus
        if self.failing_pair is not None:
            data["failing_pair"] = list(self.failing_pair)
        return data


Curve = Union[PGonalCurve, HyperellipticModel]


@dataclass(frozen=True, eq=False)
class DecompositionFactor:
    """One isogeny factor JS/H of a decomposition."""
    curve: Curve
    genus: int
    multiplicity: int = 1
    subgroup_label: str = ""
    j_value: Optional[Scalar] = None
    signature: str = ""

    def __post_init__(self):
        if self.multiplicity < 1:
            raise InputError(f"multiplicity must be >= 1, got {self.multiplicity}")
        if self.genus < 1:
            raise InputError(f"factors have genus >= 1, got {self.genus}")

    @property
    def equation(self) -> str:
        return self.curve.equation

    @property
    def sort_key(self) -> Tuple[int, str]:
        return (self.genus, self.equation)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.subgroup_label,
            "equation": self.equation,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "j": format_scalar(self.j_value) if self.j_value is not None else None,
        }


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Isogeny decomposition of JS for a generalized Fermat curve S."""
    gfc_type: GroupType
    parameters: BranchSet
    factors: Tuple[DecompositionFactor, ...]
    certificate: Certificate
    genus_total: int
    mode: ReportMode = ReportMode.THEOREM
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def factor_genus_sum(self) -> int:
        return sum(f.genus * f.multiplicity for f in self.factors)

    def genus_census(self) -> Dict[int, int]:
        """{genus: number of factors}"""
        census: Dict[int, int] = {}
        for f in self.factors:
            census[f.genus] = census.get(f.genus, 0) + f.multiplicity
        return dict(sorted(census.items()))

    def factors_of_genus(self, genus: int) -> List[DecompositionFactor]:
        return [f for f in self.factors if f.genus == genus]
