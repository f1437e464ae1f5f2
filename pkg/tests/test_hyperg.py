import pytest

from qpair.counts import CountTable
from qpair.gaussint import GaussInt
from qpair.hyperg import (
    bailey_lattice_sides,
    bailey_pair_b3,
    bailey_pair_e3,
    jacobi_triple_product,
    multisum_admissible,
    multisum_self_conjugate,
    q_gauss_sides,
    series_H_tilde,
    series_J_tilde,
    series_R,
    series_R_bilateral,
    series_R_tilde,
    series_R_tilde_bilateral,
)
from qpair.overpartitions import count_frequency_pairs, pairs_of
from qpair.series import TruncatedSeries, geometric, mono, pochhammer_inf

C = 10
X = TruncatedSeries.poly([mono(1, x=1)])
ONE_PLUS_X = TruncatedSeries.poly([mono(1), mono(1, x=1)])


class TestSeriesR:
    def test_constant_term(self):
        for k, i in ((2, 1), (3, 3)):
            assert series_R(k, i, 6).coeff(0, 0, 0, 0) == 1
            assert series_R_tilde(k, i, 6).coeff(0, 0, 0, 0) == 1

    def test_rogers_ramanujan_diagonal(self):
        s = series_R(2, 2, 9, x_one=True)
        got = [s.coeff(0, 0, 0, n) for n in range(9)]
        assert got == [1, 1, 1, 1, 2, 2, 3, 3, 4]

    def test_full_table_matches_enumeration(self):
        # Three-statistic refinement: coefficient of a^s b^t x^m q^n counts
        # pairs with m parts.
        s = series_R(2, 1, 7)
        for n in range(7):
            table = {}
            for p in pairs_of(n):
                if p.satisfies_frequency_conditions(2, 1):
                    key = (p.s_stat(), p.t_stat(), p.num_parts())
                    table[key] = table.get(key, 0) + 1
            for (da, db, dx, dq), c in s.terms.items():
                if dq == n:
                    assert table.get((da, db, dx), 0) == c
            for (da, db, dx), c in table.items():
                assert s.coeff(da, db, dx, n) == c

    def test_x_one_matches_specialized_full(self):
        for k, i in ((2, 2), (3, 1)):
            fast = series_R(k, i, 8, x_one=True)
            full = series_R(k, i, 8).specialize(sub_x=(1, 0))
            assert fast.first_mismatch(full) is None

    def test_tilde_table_matches_enumeration(self):
        for k, i in ((2, 2), (3, 3)):
            got = CountTable.from_series(series_R_tilde(k, i, 9, x_one=True), 8)
            want = count_frequency_pairs(k, i, 8, parity=True)
            assert got.first_mismatch(want) is None

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            series_R(2, 3, 6)
        with pytest.raises(ValueError):
            series_R_tilde(1, 1, 6)


class TestAuxiliarySeries:
    def test_h_vanishes_at_index_zero(self):
        for k in (1, 2, 3):
            assert series_H_tilde(k, 0, C).is_zero()

    def test_h_negative_index_reflection(self):
        # The object returned at -i is x^i times the series, so the
        # reflection identity reads as plain negation.
        for k, i in ((1, 1), (2, 1), (2, 2), (3, 2)):
            lhs = series_H_tilde(k, -i, C)
            rhs = -series_H_tilde(k, i, C)
            assert lhs.first_mismatch(rhs) is None

    def test_h_difference_identity(self):
        for k in (2, 3):
            for i in range(1, k + 1):
                j = series_J_tilde(k, k - i + 1, C)
                if i >= 2:
                    lhs = series_H_tilde(k, i, C) - series_H_tilde(k, i - 2, C)
                    rhs = (ONE_PLUS_X * j).times_monomial(mono(1, x=i - 2))
                else:
                    lhs = X * series_H_tilde(k, 1, C) - series_H_tilde(k, -1, C)
                    rhs = ONE_PLUS_X * j
                assert lhs.first_mismatch(rhs) is None, (k, i)

    def test_j_dual_route(self):
        for k in (2, 3):
            for i in range(1, k + 1):
                prod = series_J_tilde(k, i, C)
                diff = series_J_tilde(k, i, C, route="difference")
                assert prod.first_mismatch(diff) is None, (k, i)

    def test_h_rejects_nontruncating_parameters(self):
        with pytest.raises(ValueError, match="truncation"):
            series_H_tilde(1, 3, C)


class TestBilateral:
    def test_matches_x_one_specialization(self):
        for k, i in ((2, 2), (3, 1)):
            bil = series_R_bilateral(k, i, C)
            full = series_R(k, i, C).specialize(sub_x=(1, 0))
            assert bil.first_mismatch(full) is None
            bilt = series_R_tilde_bilateral(k, i, C)
            fullt = series_R_tilde(k, i, C).specialize(sub_x=(1, 0))
            assert bilt.first_mismatch(fullt) is None

    def test_constant_term(self):
        assert series_R_bilateral(2, 2, 6).coeff(0, 0, 0, 0) == 1


class TestJacobiTripleProduct:
    @pytest.mark.parametrize("z", [mono(1), mono(-1), mono(1, q=1), mono(GaussInt(0, 1))])
    def test_sides_agree(self, z):
        lhs, rhs = jacobi_triple_product(z, 16)
        assert lhs.first_mismatch(rhs) is None

    def test_constant_terms(self):
        lhs, rhs = jacobi_triple_product(mono(1), 12)
        assert lhs.coeff_q(0) == 1
        assert rhs.coeff_q(0) == 1

    def test_square_counting(self):
        lhs, _ = jacobi_triple_product(mono(1), 17)
        assert [lhs.coeff_q(n) for n in range(10)] == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]


class TestQGauss:
    @pytest.mark.parametrize("n", [0, 1, 2, -1, -2])
    def test_sides_agree(self, n):
        lhs, rhs = q_gauss_sides(n, C)
        assert lhs.first_mismatch(rhs) is None

    def test_reflection(self):
        lhs_pos, _ = q_gauss_sides(2, C)
        lhs_neg, _ = q_gauss_sides(-2, C)
        assert lhs_pos.first_mismatch(lhs_neg) is None

    def test_rhs_constant_term(self):
        _, rhs = q_gauss_sides(0, 6)
        assert rhs.coeff(0, 0, 0, 0) == 1


class TestBaileyPairs:
    def test_constructors_verify_relation(self):
        b3 = bailey_pair_b3(4, 12)
        e3 = bailey_pair_e3(4, 12)
        assert b3.alphas[0].terms == {(0, 0, 0, 0): 1}
        assert e3.alphas[0].terms == {(0, 0, 0, 0): 1}

    def test_beta_zero_is_one(self):
        # beta_0 = alpha_0 = 1; the constant-in-n form 1/(q)_inf would
        # break the defining relation at n = 0 already.
        b3 = bailey_pair_b3(2, 10)
        assert b3.betas[0].terms == {(0, 0, 0, 0): 1}
        qinf_inv = pochhammer_inf(mono(1, q=1), 10).invert()
        assert b3.betas[0].first_mismatch(qinf_inv) is not None

    def test_beta_one_values(self):
        b3 = bailey_pair_b3(2, 10)
        e3 = bailey_pair_e3(2, 10)
        assert b3.betas[1].first_mismatch(geometric(mono(1, q=1), 10, 10)) is None
        assert e3.betas[1].first_mismatch(geometric(mono(1, q=2), 10, 10)) is None

    def test_corrupted_pair_rejected(self):
        from qpair.hyperg import BaileyPair, _verify_bailey

        b3 = bailey_pair_b3(3, 10)
        bad = BaileyPair("bad", b3.alphas, b3.alphas, 10)
        with pytest.raises(ValueError, match="n="):
            _verify_bailey(bad)


class TestBaileyLattice:
    def test_identity_holds(self):
        b3 = bailey_pair_b3(9, 10)
        e3 = bailey_pair_e3(9, 10)
        for pair in (b3, e3):
            for k in (1, 2, 3):
                for i in range(k + 1):
                    lhs, rhs = bailey_lattice_sides(pair, k, i, 8)
                    assert lhs.first_mismatch(rhs) is None, (pair.label, k, i)

    def test_degenerate_depth_zero(self):
        b3 = bailey_pair_b3(9, 10)
        lhs, rhs = bailey_lattice_sides(b3, 0, 0, 8)
        assert lhs.first_mismatch(rhs) is None

    def test_insufficient_depth_reported(self):
        b3 = bailey_pair_b3(1, 10)
        with pytest.raises(ValueError, match="n_max"):
            bailey_lattice_sides(b3, 2, 1, 10)

    def test_multisums_equal_bilaterals(self):
        for k, i in ((2, 1), (2, 2), (3, 2), (3, 3)):
            d = multisum_admissible(k, i, C)
            assert d.first_mismatch(series_R_bilateral(k, i, C)) is None
            dt = multisum_self_conjugate(k, i, C)
            assert dt.first_mismatch(series_R_tilde_bilateral(k, i, C)) is None

    def test_multisum_constant_terms(self):
        assert multisum_admissible(3, 2, 6).coeff(0, 0, 0, 0) == 1
        assert multisum_self_conjugate(3, 2, 6).coeff(0, 0, 0, 0) == 1
