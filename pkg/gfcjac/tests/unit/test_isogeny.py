"""
Unit tests for j-classes, special parameters and the pentagonal setup
"""

from fractions import Fraction

import pytest

from gfcjac.core.curves import HyperellipticModel, genus4_family
from gfcjac.core.decompose import (
    branch_set_for,
    decompose_prime,
    group_by_j,
    hyperelliptic_factors,
    pentagonal_parameters,
    special_parameter_conditions,
)
from gfcjac.core.errors import InputError
from gfcjac.core.scalars import QuadraticNumber, Symbolic


@pytest.fixture
def golden_lambdas():
    """lambda_1 = (1 - sqrt(5))/2 and lambda_2 = 1/lambda_1 = -(1 + sqrt(5))/2"""
    return [QuadraticNumber(Fraction(1, 2), Fraction(-1, 2), 5), QuadraticNumber(Fraction(-1, 2), Fraction(-1, 2), 5)]


class TestGroupByJ:
    """Test group_by_j"""

    def test_golden_ratio_single_class(self, golden_lambdas):
        """Test all five (2,4) factors share one j value"""
        dec = decompose_prime(2, 4, branch_set_for(4, golden_lambdas))
        report = group_by_j(dec)
        assert report.exponents == [5]
        assert report.statement().endswith("^5")

    def test_generic_five_classes(self):
        """Test lambda = 2, 7 gives five distinct j values"""
        dec = decompose_prime(2, 4, branch_set_for(4, [Fraction(2), Fraction(7)]))
        report = group_by_j(dec)
        assert report.exponents == [1, 1, 1, 1, 1]
        assert report.higher_genus == ()

    def test_symbolic_orbits(self):
        """Test symbolic factors are compared through anharmonic orbits"""
        dec = decompose_prime(2, 4, branch_set_for(4, [Symbolic("l1"), Symbolic("l2")]))
        assert len(group_by_j(dec).classes) == 5

    def test_higher_genus_kept(self):
        """Test genus-2 factors are listed unmerged"""
        dec = decompose_prime(2, 5, branch_set_for(5, [Fraction(2), Fraction(3), Fraction(4)]))
        report = group_by_j(dec)
        assert len(report.higher_genus) == 1
        assert sum(report.exponents) == 15

    def test_genus4_family(self):
        """Test the sqrt(11) family gives exponents 3 and 1"""
        family = genus4_family(QuadraticNumber(4, 1, 11), QuadraticNumber(-3, -1, 11))
        report = group_by_j(hyperelliptic_factors(family.factors))
        assert report.exponents == [3, 1]
        data = report.to_dict()
        assert data["note"].startswith("equal j")
        assert sorted(c["exponent"] for c in data["classes"]) == [1, 3]

    def test_hyperelliptic_factors(self):
        """Test models are wrapped with their label and j"""
        (factor,) = hyperelliptic_factors([HyperellipticModel((0, 1, -1), "E")])
        assert factor.subgroup_label == "E"
        assert factor.j_value == Fraction(27, 4)


class TestSpecialParameters:
    """Test special_parameter_conditions"""

    def test_generic_parameter(self):
        """Test lambda_1 = 2 satisfies none of the conditions"""
        conditions = special_parameter_conditions(Fraction(2))
        assert [c.holds for c in conditions] == [False, False, False]
        assert [c.j_equal for c in conditions] == [False, False, False]
        first = dict(conditions[0].factor_values)
        assert first == {"1+l^2": "5", "l^2-l-1": "1", "l^2+l-1": "5"}

    def test_golden_parameter(self, golden_lambdas):
        """Test the golden-ratio parameter satisfies all three"""
        conditions = special_parameter_conditions(golden_lambdas[0])
        assert all(c.holds for c in conditions)
        assert all(c.j_equal for c in conditions)

    def test_imaginary_unit(self):
        """Test 1 + l^2 = 0 triggers the first and third conditions only"""
        conditions = special_parameter_conditions(QuadraticNumber(0, 1, -1))
        assert [c.holds for c in conditions] == [True, False, True]

    def test_agrees_with_direct_comparison(self):
        """Test polynomial and direct j comparisons agree on sample rationals"""
        for lam in (Fraction(3), Fraction(-2), Fraction(1, 3), Fraction(5, 7)):
            for c in special_parameter_conditions(lam):
                assert c.j_equal is None or c.j_equal == c.holds

    @pytest.mark.parametrize("value", [Fraction(0), Fraction(1), Fraction(-1)])
    def test_forbidden(self, value):
        """Test excluded parameters"""
        with pytest.raises(InputError, match="must avoid"):
            special_parameter_conditions(value)

    def test_symbolic_refused(self):
        """Test a concrete parameter is needed"""
        with pytest.raises(InputError, match="concrete"):
            special_parameter_conditions(Symbolic("l"))


class TestPentagonal:
    """Test the fifth-roots-of-unity branch set"""

    def test_closed_forms(self):
        """Test closed forms match T(w^2), T(w^3)"""
        setup = pentagonal_parameters(precision=128)
        assert setup.agrees
        assert setup.symmetry_order == 5

    def test_to_dict(self):
        """Test the report fields"""
        data = pentagonal_parameters(precision=128).to_dict()
        assert data["closed_forms_agree"] is True
        assert data["symmetry_order"] == 5
        assert data["lambda1"].startswith("c(")
