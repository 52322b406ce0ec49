"""
Unit tests for scalar tiers, parsing and the j-function
"""

from fractions import Fraction

import pytest

from gfcjac.core.errors import DomainError, InputError, MixedFieldError, UnsupportedModeError
from gfcjac.core.scalars import (
    INFINITY,
    BigComplex,
    QuadraticNumber,
    ScalarMode,
    Symbolic,
    anharmonic_orbit,
    as_scalar,
    field_discriminant,
    format_scalar,
    j_invariant,
    mode_of,
    parse_scalar,
    rational_sqrt,
    root_of_unity,
    scalars_equal,
    sqrt_in_field,
    squarefree_part,
)


class TestQuadraticNumber:
    """Test exact arithmetic in Q(sqrt(d))"""

    def test_squarefree_part(self):
        """Test d = s^2 * d0"""
        assert squarefree_part(12) == (2, 3)
        assert squarefree_part(-20) == (2, -5)
        assert squarefree_part(11) == (1, 11)

    def test_make_normalizes(self):
        """Test make pulls squares out and collapses to Q"""
        x = QuadraticNumber.make(1, 1, 12)
        assert x == QuadraticNumber(1, 2, 3)
        assert QuadraticNumber.make(3, 0, 5) == Fraction(3)
        assert QuadraticNumber.make(1, 1, 4) == Fraction(3)

    def test_golden_ratio(self):
        """Test phi^2 = phi + 1"""
        phi = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
        assert phi * phi == phi + 1
        assert phi * (phi - 1) == 1

    def test_rational_results(self):
        """Test products landing in Q are Fractions"""
        r = QuadraticNumber(0, 1, 11)
        assert r * r == 11
        assert isinstance(r * r, Fraction)
        x = QuadraticNumber(3, 1, 11)
        assert isinstance(x * x.conjugate(), Fraction)
        assert x.norm() == -2

    def test_inverse_and_power(self):
        """Test division and negative powers"""
        x = QuadraticNumber(1, 1, 2)
        assert x * x.inverse() == 1
        assert x ** -2 * x ** 2 == 1
        assert (1 / x) == x.inverse()

    def test_sqrt(self):
        """Test square roots inside the field"""
        phi = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
        root = (phi * phi).sqrt()
        assert root is not None and root * root == phi * phi
        assert QuadraticNumber(0, 1, 5).sqrt() is None

    def test_mixed_fields(self):
        """Test two fields are never combined"""
        with pytest.raises(MixedFieldError):
            QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3)

    def test_invalid_discriminant(self):
        """Test d must be square-free"""
        with pytest.raises(InputError, match="square-free"):
            QuadraticNumber(0, 1, 8)

    def test_rational_sqrt(self):
        """Test exact rational roots"""
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(2) is None
        assert rational_sqrt(-1) is None


class TestBigComplex:
    """Test the numeric tier"""

    def test_arithmetic(self):
        """Test mixed-tier arithmetic and approximate equality"""
        x = BigComplex(Fraction(1, 3))
        assert x * 3 == 1
        assert 1 - x == BigComplex(Fraction(2, 3))
        assert BigComplex(QuadraticNumber(0, 1, 2)) ** 2 == 2

    def test_root_of_unity(self):
        """Test zeta^m = 1"""
        zeta = root_of_unity(5)
        assert (zeta ** 5 - 1).is_zero()
        assert not (zeta - 1).is_zero()

    @pytest.mark.parametrize("precision", [128, 256, 512])
    def test_negation_keeps_precision(self, precision):
        """Test -(-x) == x to the full working precision"""
        x = BigComplex(Fraction(1, 3), precision)
        assert (-(-x) - x).is_zero()
        assert (x + (-x)).is_zero()
        assert (-x).precision == precision

    @pytest.mark.parametrize("m", [5, 7])
    def test_root_of_unity_full_precision(self, m):
        """Test zeta^m = 1 within 2^-128 at 256 bits, for every k"""
        for k in range(1, m):
            zeta = root_of_unity(m, k, 256)
            assert (zeta ** m - 1).is_zero()
            assert abs((zeta ** m - 1).value) < BigComplex(0, 256).tolerance

    def test_from_parts(self):
        """Test decimal literals"""
        z = BigComplex.from_parts("0.5", "-1.25")
        assert z == BigComplex(complex(0.5, -1.25))

    def test_low_precision_rejected(self):
        """Test precision floor"""
        with pytest.raises(InputError, match="precision"):
            BigComplex(1, precision=16)

    def test_unhashable(self):
        """Test approximate values cannot be dict keys"""
        with pytest.raises(TypeError):
            hash(BigComplex(1))


class TestSymbolic:
    """Test symbolic tags"""

    def test_parse_label(self):
        """Test labels become sympy symbols"""
        s = Symbolic.parse("lambda1")
        assert str(s.expr) == "lambda1"

    def test_zero_testing(self):
        """Test simplification decides zero"""
        l = Symbolic("l")
        assert ((l + 1) ** 2 - l * l - 2 * l - 1).is_zero()
        assert (l / l) == 1

    def test_bigcomplex_mixing_refused(self):
        """Test symbolic and numeric tiers do not mix"""
        with pytest.raises(UnsupportedModeError):
            Symbolic("l") + BigComplex(1)


class TestField:
    """Test tier detection, parsing and formatting"""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-2", Fraction(-2)),
            ("1/2+3/2*sqrt(5)", QuadraticNumber(Fraction(1, 2), Fraction(3, 2), 5)),
            ("sqrt(-3)", QuadraticNumber(0, 1, -3)),
            ("3-sqrt(11)", QuadraticNumber(3, -1, 11)),
        ],
    )
    def test_parse_exact(self, text, expected):
        """Test exact literals"""
        assert parse_scalar(text) == expected

    def test_parse_special(self):
        """Test infinity, complex and symbolic literals"""
        assert parse_scalar("inf") is INFINITY
        assert isinstance(parse_scalar("c(0.25,-1.1)"), BigComplex)
        assert isinstance(parse_scalar("sym:lambda1"), Symbolic)

    @pytest.mark.parametrize("text", ["", "1/0", "abc", "2 sqrt(5)", "c(1)"])
    def test_parse_malformed(self, text):
        """Test malformed literals raise InputError"""
        with pytest.raises(InputError):
            parse_scalar(text)

    def test_format_round_trip(self):
        """Test exact values survive format and parse"""
        for value in (Fraction(-7, 3), QuadraticNumber(Fraction(1, 2), Fraction(-1, 2), 5), INFINITY):
            assert parse_scalar(format_scalar(value)) == value

    def test_floats_rejected(self):
        """Test floats are refused as ambiguous"""
        with pytest.raises(InputError, match="ambiguous"):
            as_scalar(0.5)

    def test_mode_of(self):
        """Test the highest tier wins"""
        assert mode_of([Fraction(1), 2]) is ScalarMode.RATIONAL
        assert mode_of([Fraction(1), QuadraticNumber(0, 1, 5)]) is ScalarMode.QUADRATIC
        assert mode_of([QuadraticNumber(0, 1, 5), BigComplex(1)]) is ScalarMode.NUMERIC
        assert mode_of([BigComplex(1), Symbolic("l")]) is ScalarMode.SYMBOLIC

    def test_field_discriminant(self):
        """Test the common quadratic field"""
        assert field_discriminant([Fraction(2), QuadraticNumber(1, 1, 11)]) == 11
        assert field_discriminant([Fraction(2)]) is None
        with pytest.raises(MixedFieldError):
            field_discriminant([QuadraticNumber(0, 1, 2), QuadraticNumber(0, 1, 3)])

    def test_sqrt_in_field(self):
        """Test exact square roots with an ambient field"""
        assert sqrt_in_field(Fraction(4, 9)) == Fraction(2, 3)
        assert sqrt_in_field(Fraction(11)) is None
        assert sqrt_in_field(Fraction(44), d=11) == QuadraticNumber(0, 2, 11)
        with pytest.raises(InputError):
            sqrt_in_field(INFINITY)

    def test_equality_on_sphere(self):
        """Test infinity equals only itself"""
        assert scalars_equal(INFINITY, INFINITY)
        assert not scalars_equal(INFINITY, Fraction(0))
        assert scalars_equal(Fraction(1, 2), BigComplex(Fraction(1, 2)))


class TestKlein:
    """Test the j-function"""

    @pytest.mark.parametrize(
        "lam,j",
        [
            (Fraction(-1), Fraction(27, 4)),
            (Fraction(2), Fraction(27, 4)),
            (Fraction(1, 2), Fraction(27, 4)),
            (Fraction(1, 5), Fraction(9261, 400)),
            (Fraction(-1, 7), Fraction(185193, 3136)),
            (Fraction(1, 3), Fraction(343, 36)),
        ],
    )
    def test_values(self, lam, j):
        """Test exact j values"""
        assert j_invariant(lam) == j

    def test_orbit_invariance(self):
        """Test j is constant on anharmonic orbits"""
        for lam in (Fraction(7), QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)):
            values = [j_invariant(mu) for mu in anharmonic_orbit(lam)]
            assert all(v == values[0] for v in values)

    def test_numeric(self):
        """Test the numeric tier agrees with the exact one"""
        assert j_invariant(BigComplex(Fraction(1, 5))) == Fraction(9261, 400)

    def test_singular(self):
        """Test 0, 1 and infinity"""
        for lam in (Fraction(0), Fraction(1), INFINITY):
            with pytest.raises(DomainError):
                j_invariant(lam)

    def test_symbolic_refused(self):
        """Test symbolic j is not computed"""
        with pytest.raises(UnsupportedModeError):
            j_invariant(Symbolic("l"))
