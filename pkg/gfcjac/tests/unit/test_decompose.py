"""
Unit tests for the prime-exponent decomposition and the named families
"""

from fractions import Fraction

import pytest

from gfcjac.core.decompose import (
    branch_set_for,
    decompose_prime,
    decomposition_to_dict,
    family_sizes,
    format_decomposition_text,
    format_json,
    named_family_subgroups,
)
from gfcjac.core.errors import CertificateError, InputError, UnsupportedModeError
from gfcjac.core.models import Certificate, ReportMode
from gfcjac.core.scalars import INFINITY, QuadraticNumber, Symbolic, roots_of_unity_branch_set


def decompose(p, n, lambdas, **kwargs):
    return decompose_prime(p, n, branch_set_for(n, [Fraction(x) for x in lambdas]), **kwargs)


class TestDecomposePrime:
    """Test decompose_prime"""

    @pytest.mark.parametrize(
        "p,n,lambdas,census",
        [
            (2, 4, (2, 7), {1: 5}),
            (2, 5, (2, 3, 4), {1: 15, 2: 1}),
            (2, 6, (2, 3, 4, 5), {1: 35, 2: 7}),
            (3, 3, (2,), {1: 4, 2: 3}),
            (3, 4, (2, 3), {1: 10, 2: 15, 3: 5}),
            (5, 2, (), {2: 3}),
        ],
    )
    def test_census(self, p, n, lambdas, census):
        """Test factor genera and the certificate"""
        dec = decompose(p, n, lambdas)
        assert dec.genus_census() == census
        assert dec.factor_genus_sum == dec.genus_total
        assert dec.certificate.passed
        assert dec.mode is ReportMode.THEOREM

    def test_legendre_factors(self):
        """Test (2,4) factors are elliptic with the right j values"""
        dec = decompose(2, 4, (-1, 2))
        assert all(f.genus == 1 and f.j_value is not None for f in dec.factors)
        assert Fraction(27, 4) in [f.j_value for f in dec.factors]

    def test_normal_form(self):
        """Test normalized factors are branched over inf, 0, 1"""
        dec = decompose(2, 4, (2, 7))
        for f in dec.factors:
            assert f.curve.points[:3] == [INFINITY, 0, 1]

    def test_without_normalization(self):
        """Test raw factors keep branch-set points"""
        dec = decompose(2, 4, (2, 7), normalize=False)
        points = {pt for f in dec.factors for pt in f.curve.points if pt is not INFINITY}
        assert points <= {0, 1, 2, 7}

    def test_quadratic_parameters(self):
        """Test the golden-ratio branch set stays exact"""
        phi = QuadraticNumber(Fraction(1, 2), Fraction(1, 2), 5)
        dec = decompose_prime(2, 4, branch_set_for(4, [phi, phi + 1]))
        assert all(isinstance(f.j_value, (Fraction, QuadraticNumber)) for f in dec.factors)

    def test_symbolic_parameters(self):
        """Test symbolic labels give equations without j values"""
        dec = decompose_prime(2, 4, branch_set_for(4, [Symbolic("l1"), Symbolic("l2")]))
        assert len(dec.factors) == 5
        assert all(f.j_value is None for f in dec.factors)

    def test_heptagonal_branch_set(self):
        """Test (2,6) over the seventh roots of unity in BigComplex mode"""
        dec = decompose_prime(2, 6, roots_of_unity_branch_set(7, precision=256))
        assert dec.genus_census() == {1: 35, 2: 7}
        assert dec.factor_genus_sum == 49
        assert dec.certificate.passed

    def test_threads(self):
        """Test the thread pool gives the same factors"""
        serial = decompose(3, 3, (2,), max_workers=1)
        pooled = decompose(3, 3, (2,), max_workers=4)
        assert [f.equation for f in serial.factors] == [f.equation for f in pooled.factors]

    def test_composite_refused(self):
        """Test composite exponents point to the conjecture command"""
        with pytest.raises(UnsupportedModeError, match="conjecture"):
            decompose(4, 2, ())

    def test_genus_zero_type(self):
        """Test (2,2) has too few branch points"""
        with pytest.raises(InputError, match="genus 0"):
            decompose(2, 2, ())

    def test_lambda_count(self):
        """Test n - 2 parameters"""
        with pytest.raises(InputError, match="needs 2 lambda"):
            branch_set_for(4, [Fraction(2)])

    def test_certificate_failure_raises(self, mocker):
        """Test a failing certificate is raised with its data"""
        failing = Certificate(passed=False, pairwise_zero=True, genus_sum=4, total_genus=5)
        mocker.patch("gfcjac.core.decompose.prime.check_corollary", return_value=failing)
        with pytest.raises(CertificateError) as excinfo:
            decompose(2, 4, (2, 7))
        assert excinfo.value.certificate is failing


class TestReport:
    """Test report formatting"""

    def test_dict_schema(self):
        """Test the JSON field set"""
        data = decomposition_to_dict(decompose(2, 4, (2, 7)))
        assert set(data) == {"type", "genus", "parameters", "factors", "certificate", "mode"}
        assert data["type"] == {"p": 2, "n": 4}
        assert data["parameters"] == ["inf", "0", "1", "2", "7"]
        assert data["mode"] == "THEOREM"
        assert data["certificate"]["passed"] is True

    def test_json_deterministic(self):
        """Test identical inputs give identical bytes"""
        a = format_json(decomposition_to_dict(decompose(3, 3, (2,))))
        b = format_json(decomposition_to_dict(decompose(3, 3, (2,))))
        assert a == b
        assert a.endswith("\n")

    def test_text(self):
        """Test the text report header and certificate"""
        text = format_decomposition_text(decompose(2, 4, (2, 7)))
        assert text.startswith("GFC type (2,4), genus 5 [THEOREM]")
        assert "certificate: PASS" in text
        assert "5 of genus 1" in text


class TestFamilies:
    """Test the named K_j families of type (2, n)"""

    def test_sizes(self):
        """Test binomial counts by genus"""
        assert family_sizes(6) == {1: 35, 2: 7}
        assert family_sizes(7) == {1: 70, 2: 28, 3: 1}
        assert family_sizes(8) == {1: 126, 2: 84, 3: 9}

    def test_even_family(self):
        """Test n = 6 covers every positive-genus hyperplane"""
        members = named_family_subgroups(6)
        assert len(members) == 42
        assert sum(m.genus for m in members) == 49
        assert members[0].label == "K1{1}"
        assert members[0].subgroup.order == 32

    @pytest.mark.slow
    def test_odd_family(self):
        """Test n = 7 sums to genus 129"""
        members = named_family_subgroups(7, parity="odd")
        assert len(members) == 99
        assert sum(m.genus for m in members) == 129
        assert members[0].complement == tuple(range(1, 9))

    def test_small_n(self):
        """Test the families start at n = 6"""
        with pytest.raises(InputError, match="n = 6"):
            named_family_subgroups(5)

    def test_parity_mismatch(self):
        """Test parity must agree with n"""
        with pytest.raises(InputError, match="is even"):
            named_family_subgroups(6, parity="odd")
        with pytest.raises(InputError, match="parity must be"):
            named_family_subgroups(6, parity="both")
