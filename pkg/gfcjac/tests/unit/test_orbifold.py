"""
Unit tests for genus counting and quotient signatures
"""

import pytest

from gfcjac.core.errors import InputError, ResourceLimitError
from gfcjac.core.group import GroupType, enumerate_hyperplanes, full_group, span, trivial_subgroup
from gfcjac.core.orbifold import (
    Signature,
    cyclic_cover_genus,
    genus_sum_identity,
    hyperplane_count_with_positive_genus,
    hyperplane_signature,
    psi_bruteforce,
    psi_closed,
    psi_small_closed,
    quotient_signature,
    r_q,
    total_genus,
)


class TestCounting:
    """Test the closed forms against exhaustive counts"""

    @pytest.mark.parametrize(
        "p,n,genus",
        [
            (2, 4, 5), (2, 5, 17), (2, 6, 49), (2, 7, 129), (3, 3, 10),
            (3, 4, 55), (5, 2, 6), (4, 2, 3), (6, 2, 10), (8, 2, 21),
        ],
    )
    def test_total_genus(self, p, n, genus):
        """Test genus of the generalized Fermat curve"""
        assert total_genus(p, n) == genus

    def test_r_q(self):
        """Test the minimal branch count"""
        assert r_q(2) == 4
        assert r_q(3) == 3
        assert r_q(7) == 3

    def test_psi_closed_matches_bruteforce(self):
        """Test psi closed form on 2 <= q <= 7, 2 <= r <= 9"""
        for q in range(2, 8):
            for r in range(2, 10):
                assert psi_closed(q, r) == psi_bruteforce(q, r), (q, r)

    def test_psi_small_forms(self):
        """Test the expanded r = 3, 4, 5 forms"""
        for q in range(2, 10):
            for r in (3, 4, 5):
                assert psi_small_closed(q, r) == psi_closed(q, r)

    def test_psi_small_out_of_range(self):
        """Test expanded forms stop at r = 5"""
        with pytest.raises(InputError):
            psi_small_closed(3, 6)

    def test_psi_guard(self):
        """Test the tuple guard"""
        with pytest.raises(ResourceLimitError, match="limit"):
            psi_bruteforce(7, 9, max_tuples=1000)

    def test_genus_identity(self):
        """Test the genus identity on 2 <= q <= 7, r_q <= n + 1 <= 8"""
        for q in range(2, 8):
            for n in range(max(2, r_q(q) - 1), 8):
                identity = genus_sum_identity(q, n)
                assert identity.holds, (q, n, identity)

    def test_genus_identity_needs_branching(self):
        """Test the identity refuses n + 1 < r_q"""
        with pytest.raises(InputError):
            genus_sum_identity(2, 2)

    @pytest.mark.parametrize("p,n,count", [(2, 4, 5), (2, 5, 16), (2, 6, 42), (3, 3, 7), (3, 4, 30), (5, 2, 3)])
    def test_positive_genus_hyperplanes(self, p, n, count):
        """Test the number of positive-genus hyperplanes"""
        assert hyperplane_count_with_positive_genus(p, n) == count

    def test_cyclic_cover_genus(self):
        """Test Riemann-Hurwitz for cyclic covers"""
        assert cyclic_cover_genus(2, [1, 1, 1, 1]) == 1
        assert cyclic_cover_genus(2, [1] * 6) == 2
        assert cyclic_cover_genus(8, [1, 2, 5]) == 3
        assert cyclic_cover_genus(8, [1, 3, 4]) == 2
        assert cyclic_cover_genus(5, [1, 1, 3]) == 2
        # y^4 = x^2 (x-1)^2 splits into two conics
        assert cyclic_cover_genus(4, [2, 2]) == 0

    def test_cyclic_cover_bad_sum(self):
        """Test exponent sums must vanish mod k"""
        with pytest.raises(InputError, match="sum to 0"):
            cyclic_cover_genus(3, [1, 1])


class TestSignature:
    """Test Signature formatting and parsing"""

    def test_str(self):
        """Test the "(g; o^c)" form"""
        assert str(Signature.of(1, [2, 2])) == "(1; 2^2)"
        assert str(Signature.of(5)) == "(5; -)"
        assert str(Signature.of(4, {3: 9})) == "(4; 3^9)"

    def test_parse(self):
        """Test parsing back"""
        assert Signature.parse("(1; 2^2)") == Signature.of(1, [2, 2])
        assert Signature.parse("(2; 4, 4, 4, 4)") == Signature.of(2, {4: 4})
        assert Signature.parse("(3; -)") == Signature.of(3)

    def test_parse_malformed(self):
        """Test malformed signatures"""
        with pytest.raises(InputError, match="malformed"):
            Signature.parse("1; 2, 2")

    def test_invalid(self):
        """Test negative genus and order-1 cones are rejected"""
        with pytest.raises(InputError):
            Signature(-1)
        with pytest.raises(InputError):
            Signature.of(0, [1])

    def test_euler_characteristic(self):
        """Test 2 - 2g - sum (1 - 1/m)"""
        assert Signature.of(0, [2, 2, 2, 2]).euler_characteristic() == 0
        assert Signature.of(1, [2, 2]).euler_characteristic() == -1


class TestQuotientSignature:
    """Test quotient orbifold signatures"""

    def test_trivial_and_full(self):
        """Test S itself and the base orbifold"""
        gt = GroupType(2, 4)
        assert str(quotient_signature(trivial_subgroup(gt))) == "(5; -)"
        assert str(quotient_signature(full_group(gt))) == "(0; 2^5)"

    def test_u1_in_z3_4(self):
        """Test <a1, a2 a3> in Z_3^4"""
        gt = GroupType(3, 4)
        U1 = span([gt.generator(1), gt.add(gt.generator(2), gt.generator(3))], gt)
        assert str(quotient_signature(U1)) == "(4; 3^9)"

    @pytest.mark.parametrize("p,n", [(2, 4), (2, 5), (3, 3), (3, 4), (5, 2), (5, 3)])
    def test_fast_path_agrees(self, p, n):
        """Test hyperplane_signature against the general computation"""
        for chi in enumerate_hyperplanes(GroupType(p, n)):
            assert hyperplane_signature(chi) == quotient_signature(chi.kernel())

    def test_fermat_quartic_cyclic(self):
        """Test <a1 a2^2> in Z_4^2 has signature (1; 2, 2)"""
        gt = GroupType(4, 2)
        assert str(quotient_signature(span([(1, 2)], gt))) == "(1; 2^2)"

    def test_fermat_octic_cyclic(self):
        """Test the two kinds of positive-genus cyclic subgroups of order 8"""
        gt = GroupType(8, 2)
        assert str(quotient_signature(span([(1, 2)], gt))) == "(3; 2^2)"
        assert str(quotient_signature(span([(1, 4)], gt))) == "(2; 4^4)"
        assert str(quotient_signature(span([(1, 5)], gt))) == "(2; 4^4)"
        assert quotient_signature(span([(1, 0)], gt)).genus == 0

    def test_type_mismatch(self):
        """Test a subgroup used with the wrong group type"""
        with pytest.raises(InputError):
            quotient_signature(full_group(GroupType(2, 4)), GroupType(3, 3))
