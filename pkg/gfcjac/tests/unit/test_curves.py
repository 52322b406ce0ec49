"""
Unit tests for Fermat models and cyclic p-gonal curves
"""

from fractions import Fraction

import pytest

from gfcjac.core.curves import (
    PGonalCurve,
    build_fermat_model,
    classical_fermat_factors,
    pgonal_from_character,
    renormalize_branches,
)
from gfcjac.core.errors import DomainError, InputError
from gfcjac.core.group import Character
from gfcjac.core.scalars import INFINITY, BranchSet, Mobius, Symbolic


class TestFermatModel:
    """Test the fiber-product equations"""

    def test_equations(self):
        """Test type (2,4) with lambdas 2, 7"""
        model = build_fermat_model(2, 4, [2, 7])
        assert model.equations == (
            "x1^2 + x2^2 + x3^2 = 0",
            "(2)*x1^2 + x2^2 + x4^2 = 0",
            "(7)*x1^2 + x2^2 + x5^2 = 0",
        )
        assert model.genus == 5
        assert len(model.branch_set) == 5

    def test_symbolic_coefficients(self):
        """Test symbolic labels print without their prefix"""
        model = build_fermat_model(3, 3, [Symbolic("lambda1")])
        assert model.equations[1] == "(lambda1)*x1^3 + x2^3 + x4^3 = 0"
        assert model.genus == 10

    def test_parameter_count(self):
        """Test n - 2 parameters are required"""
        with pytest.raises(InputError, match="needs 2 parameters"):
            build_fermat_model(2, 4, [2])

    def test_forbidden_parameters(self):
        """Test 0, 1, inf and repeats are rejected"""
        with pytest.raises(InputError, match="must avoid"):
            build_fermat_model(2, 4, [2, 1])
        with pytest.raises(InputError, match="coincide"):
            build_fermat_model(2, 4, [3, 3])


class TestPGonalCurve:
    """Test PGonalCurve"""

    def test_trigonal_elliptic(self):
        """Test y^3 = x(x-1) is elliptic with j = 0"""
        curve = PGonalCurve(3, ((INFINITY, 1), (0, 1), (1, 1)))
        assert curve.equation == "y^3 = (x)^1*(x-1)^1"
        assert curve.genus == 1
        assert curve.j_invariant() == 0

    def test_invalid_exponents(self):
        """Test exponent range and sum"""
        with pytest.raises(InputError, match="not in"):
            PGonalCurve(3, ((0, 3), (1, 0)))
        with pytest.raises(InputError, match="do not sum"):
            PGonalCurve(3, ((0, 1), (1, 1)))

    def test_scaling(self):
        """Test unit rescaling and normalization"""
        curve = PGonalCurve(5, ((INFINITY, 1), (0, 1), (1, 3)))
        scaled = curve.scaled(2)
        assert scaled.exponents == [2, 2, 1]
        assert scaled.normalized().exponents == [1, 1, 3]
        assert scaled.unit_class_key() == curve.unit_class_key()
        with pytest.raises(InputError, match="not a unit"):
            curve.scaled(5)

    def test_reducible(self):
        """Test gcd(k, alpha) > 1 marks a reducible equation"""
        curve = PGonalCurve(4, ((0, 2), (1, 2)))
        assert not curve.is_irreducible
        assert PGonalCurve(4, ((INFINITY, 1), (0, 1), (1, 2))).is_irreducible

    def test_from_character(self):
        """Test S/ker(chi) for chi = (1,0,1,1) in Z_2^4"""
        B = BranchSet.standard([Fraction(2), Fraction(7)])
        curve = pgonal_from_character(Character(2, (1, 0, 1, 1)), B)
        assert curve.points == [INFINITY, 1, 2, 7]
        assert curve.genus == 1
        assert curve.legendre_parameter() == 6
        assert curve.j_invariant() == Fraction(29791, 900)

    def test_from_character_genus_zero(self):
        """Test characters with two branch points are refused"""
        B = BranchSet.standard([Fraction(2), Fraction(7)])
        with pytest.raises(DomainError, match="genus-0"):
            pgonal_from_character(Character(2, (1, 1, 0, 0)), B)

    def test_from_character_wrong_size(self):
        """Test branch-set size must be n + 1"""
        with pytest.raises(InputError, match="needs 5 branch points"):
            pgonal_from_character(Character(2, (1, 0, 1, 1)), BranchSet.standard([Fraction(2)]))

    def test_exponent_at_infinity_normalized(self):
        """Test the exponent at infinity is 1 after construction"""
        B = BranchSet.standard([Fraction(3)])
        curve = pgonal_from_character(Character(5, (2, 1, 4)), B)
        assert curve.infinity_exponent == 1
        assert sum(curve.exponents) % 5 == 0

    def test_renormalize(self):
        """Test moving branch points keeps exponents"""
        curve = PGonalCurve(2, ((INFINITY, 1), (0, 1), (1, 1), (Fraction(-1), 1)))
        moved = renormalize_branches(curve, Mobius(0, 1, 1, 0))
        assert moved.points == [0, INFINITY, 1, -1]
        assert moved.j_invariant() == curve.j_invariant() == Fraction(27, 4)

    def test_legendre_parameter_domain(self):
        """Test only double covers with four branch points have one"""
        with pytest.raises(DomainError):
            PGonalCurve(3, ((INFINITY, 1), (0, 1), (1, 1))).legendre_parameter()

    def test_classical_fermat_factors(self):
        """Test y^p = x(x-1)^alpha for p = 5"""
        factors = classical_fermat_factors(5)
        assert len(factors) == 3
        assert all(f.genus == 2 for f in factors)
        assert factors[0].equation == "y^5 = (x)^1*(x-1)^1"
