"""
Unit tests for hyperelliptic curves with an extra involution and the genus-4 family
"""

from fractions import Fraction

import pytest

from gfcjac.core.curves import (
    HyperellipticModel,
    genus4_family,
    hyperelliptic_split_params,
    lambdas_from_mu_squares,
    mu_squares_from_lambdas,
    quotient_models,
    rho_values,
    second_pair,
    verify_split,
)
from gfcjac.core.errors import InputError, SquareRootError
from gfcjac.core.scalars import INFINITY, BigComplex, QuadraticNumber, j_invariant


class TestHyperellipticModel:
    """Test HyperellipticModel"""

    def test_genus_and_branch_points(self):
        """Test odd root counts branch at infinity"""
        model = HyperellipticModel((0, 1, 2))
        assert model.genus == 1
        assert model.branch_points[0] is INFINITY
        assert HyperellipticModel((0, 1, 2, 3, 4, 5)).genus == 2

    def test_equation(self):
        """Test the printed equation"""
        model = HyperellipticModel((0, 1, Fraction(-1, 5)), "E")
        assert model.equation == "y^2 = (x)*(x-1)*(x+1/5)"
        assert str(model) == "E: y^2 = (x)*(x-1)*(x+1/5)"

    def test_j_invariant(self):
        """Test j of an elliptic model"""
        assert HyperellipticModel((0, 1, -1)).j_invariant() == Fraction(27, 4)
        assert HyperellipticModel((0, 1, 2, 3, 4)).j_invariant() is None

    def test_invalid_roots(self):
        """Test too few, repeated and infinite roots"""
        with pytest.raises(InputError):
            HyperellipticModel((0, 1))
        with pytest.raises(InputError, match="coincide"):
            HyperellipticModel((0, 1, 1))
        with pytest.raises(InputError, match="finite"):
            HyperellipticModel((0, 1, INFINITY))


class TestSplit:
    """Test the quotient map for a curve with an extra involution"""

    def test_lambdas_from_mu_squares(self):
        """Test P(t) = c (t - 4)/(t - 9) images"""
        assert lambdas_from_mu_squares([4, 9]) == [Fraction(8, 3), Fraction(32, 27)]

    def test_round_trip(self):
        """Test the closed-form inverse"""
        mu_squares = [Fraction(4), Fraction(9), Fraction(1, 4), Fraction(-3)]
        lambdas = lambdas_from_mu_squares(mu_squares)
        assert mu_squares_from_lambdas(lambdas) == mu_squares
        assert verify_split(lambdas, mu_squares)

    def test_verify_split_rejects(self):
        """Test wrong parameters fail verification"""
        assert not verify_split([Fraction(8, 3), Fraction(5)], [4, 9])
        assert not verify_split([Fraction(8, 3)], [4, 9])

    def test_invalid_mu_squares(self):
        """Test mu^2 values avoid 0 and 1"""
        with pytest.raises(InputError, match="must avoid"):
            lambdas_from_mu_squares([1, 9])
        with pytest.raises(InputError, match="coincide"):
            lambdas_from_mu_squares([4, 4])

    def test_invalid_lambdas(self):
        """Test parameter validation"""
        with pytest.raises(InputError, match="g >= 2"):
            mu_squares_from_lambdas([Fraction(3)])
        with pytest.raises(InputError, match="must avoid"):
            mu_squares_from_lambdas([Fraction(3), Fraction(0)])

    def test_genus_two_exact(self):
        """Test mu = 2, 3 gives exact models"""
        split = hyperelliptic_split_params([Fraction(8, 3), Fraction(32, 27)])
        assert not split.numeric
        assert list(split.mus) == [2, 3]
        mus, model_c, c1, c2 = split
        assert model_c.genus == 2
        assert set(model_c.roots) == {0, 1, Fraction(-1, 8), -2, Fraction(-1, 5)}
        assert c1.roots == (0, 1, Fraction(32, 27))
        assert c2.roots == (0, 1, Fraction(8, 3))
        assert c1.genus + c2.genus == 2

    def test_numeric_fallback(self):
        """Test non-square mu^2 switch to BigComplex"""
        split = hyperelliptic_split_params([Fraction(2), Fraction(3)])
        assert split.numeric
        assert all(isinstance(m, BigComplex) for m in split.mus)
        assert split.model_c.genus == 2

    def test_numeric_fallback_disabled(self):
        """Test SquareRootError when exact roots are required"""
        with pytest.raises(SquareRootError):
            hyperelliptic_split_params([Fraction(2), Fraction(3)], allow_numeric=False)

    @pytest.mark.parametrize("g", [2, 3, 4, 5])
    def test_quotient_genera(self, g):
        """Test g = g1 + g2 for the quotient pair"""
        lambdas = [Fraction(i + 2) for i in range(g)]
        c1, c2 = quotient_models(lambdas)
        assert c1.genus + c2.genus == g


class TestGenus4:
    """Test the genus-4 family with four elliptic factors"""

    def test_second_pair_sqrt11(self):
        """Test lambda_21, lambda_22 in Q(sqrt(11))"""
        l21, l22 = second_pair(QuadraticNumber(4, 1, 11), QuadraticNumber(-3, -1, 11))
        assert l21 == QuadraticNumber(Fraction(3, 2), Fraction(-1, 2), 11)
        assert l22 == QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 11)

    def test_second_pair_rational(self):
        """Test (-1, 1/5) gives lambda_21 = 1/2 and lambda_22 = -1/7"""
        l21, l22 = second_pair(Fraction(-1), Fraction(1, 5))
        assert l21 == Fraction(1, 2)
        assert l22 == Fraction(-1, 7)
        assert j_invariant(l21) == j_invariant(Fraction(-1))
        assert j_invariant(l22) != j_invariant(Fraction(1, 5))

    def test_family_sqrt11(self):
        """Test the family at lambda_11 = 4 + sqrt(11)"""
        family = genus4_family(QuadraticNumber(4, 1, 11), QuadraticNumber(-3, -1, 11))
        assert [f.label for f in family.factors] == ["C11", "C12", "C21", "C22"]
        assert all(f.genus == 1 for f in family.factors)
        values = list(family.j_values().values())
        assert sorted(sum(1 for w in values if w == v) for v in values) == [1, 3, 3, 3]
        # lambda_11 and lambda_12 = 1 - lambda_11 share a j-invariant
        assert values[0] == values[1]

    def test_family_to_dict(self):
        """Test the report dictionary"""
        data = genus4_family(Fraction(-1), Fraction(1, 5)).to_dict()
        assert data["lambda21"] == "1/2"
        assert data["lambda22"] == "-1/7"
        assert [f["j"] for f in data["factors"]][:2] == ["9261/400", "27/4"]

    def test_rho_values(self):
        """Test rho_1 = -(1 - mu1)^2 / (4 mu1)"""
        rho1, rho2, rho3 = rho_values(Fraction(2), Fraction(3))
        assert rho1 == Fraction(-1, 8)
        assert rho2 == Fraction(-2)
        assert rho3 == Fraction(-1, 5)

    def test_invalid_parameters(self):
        """Test forbidden parameter pairs"""
        with pytest.raises(InputError, match="must avoid"):
            genus4_family(Fraction(1), Fraction(3))
        with pytest.raises(InputError, match="lambda11 = lambda12"):
            genus4_family(Fraction(3), Fraction(3))
        with pytest.raises(InputError, match="= 1"):
            genus4_family(Fraction(2), Fraction(1, 2))
