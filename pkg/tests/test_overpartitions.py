import pytest

from qpair.counts import BoundExceededError
from qpair.overpartitions import (
    Overpartition,
    OverpartitionPair,
    overpartition_identity_sides,
    weighted_pair_identity_sides,
    partition_pair_identity_sides,
    count_frequency_pairs,
    enumerate_pairs,
    overpartitions_of,
    pairs_of,
    partitions_odd_distinct,
)

O = Overpartition


def op(*parts):
    """Parts written as ints, negative meaning overlined: op(-6, 4, 4, 3)."""
    return O([(abs(p), p < 0) for p in parts])


# The running example pair: ((6~,4,4,3), (6,4~,4,2~,2,1)).
LAM = op(-6, 4, 4, 3)
MU = op(6, -4, 4, -2, 2, 1)
PAIR = OverpartitionPair(LAM, MU)


class TestFreq:
    def test_plain_occurrences(self):
        assert LAM.freq(4) == 2

    def test_empty(self):
        assert O.empty().freq(3) == 0
        assert O.empty().freq(3, True) == 0

    def test_overlined_occurrence(self):
        assert LAM.freq(6, True) == 1
        assert LAM.freq(6) == 0


class TestUnattached:
    def test_only_one_unattached_in_example(self):
        attached = [j for j in range(1, 8) if PAIR.unattached(j)]
        assert attached == [1]

    def test_four_not_unattached(self):
        assert not PAIR.unattached(4)

    def test_absent_value(self):
        assert not PAIR.unattached(9)


class TestValuation:
    def test_example_at_one(self):
        assert PAIR.valuation(1) == 1

    def test_absent(self):
        assert PAIR.valuation(9) == 0

    def test_example_at_four(self):
        # f_4(lam) + f_4bar(lam) + f_4bar(mu) = 2 + 0 + 1
        assert PAIR.valuation(4) == 3

    def test_vanishes_beyond_max_part(self):
        for n in range(6):
            for pair in pairs_of(n):
                assert pair.valuation(pair.max_part() + 1) in (0, 1)
                assert pair.valuation(pair.max_part() + 2) == 0


class TestFrequencyConditions:
    def test_empty_pair_always_satisfies(self):
        empty = OverpartitionPair(O.empty(), O.empty())
        for k in (2, 3, 4):
            for i in range(1, k + 1):
                assert empty.satisfies_frequency_conditions(k, i)

    def test_single_one_fails_at_i_one(self):
        pair = OverpartitionPair(op(1), O.empty())
        assert not pair.satisfies_frequency_conditions(2, 1)
        assert pair.satisfies_frequency_conditions(2, 2)

    def test_rogers_ramanujan_column(self):
        # Oracle: s = t = 0 entries are plain partitions with parts
        # differing by at least two and at most one part equal to 1.
        def rr_count(n):
            count = 0
            from qpair.overpartitions import partitions

            for p in partitions(n):
                if all(p[j] - p[j + 1] >= 2 for j in range(len(p) - 1)) and p.count(1) <= 1:
                    count += 1
            return count

        table = count_frequency_pairs(2, 2, 8)
        got = [table.get(0, 0, n) for n in range(9)]
        assert got == [rr_count(n) for n in range(9)]
        assert got == [1, 1, 1, 1, 2, 2, 3, 3, 4]

    def test_monotone_in_i(self):
        for k in (2, 3):
            tables = {i: count_frequency_pairs(k, i, 7) for i in range(1, k + 1)}
            for i in range(1, k):
                lo, hi = tables[i], tables[i + 1]
                for key in set(lo.entries) | set(hi.entries):
                    assert lo.entries.get(key, 0) <= hi.entries.get(key, 0)


class TestParityConditions:
    def test_empty_pair(self):
        empty = OverpartitionPair(O.empty(), O.empty())
        assert empty.satisfies_parity_conditions(2, 2)

    def test_implies_frequency_conditions(self):
        for n in range(7):
            for pair in pairs_of(n):
                for k, i in ((2, 1), (2, 2), (3, 2)):
                    if pair.satisfies_parity_conditions(k, i):
                        assert pair.satisfies_frequency_conditions(k, i)

    def test_refines_counts(self):
        plain = count_frequency_pairs(3, 2, 7)
        refined = count_frequency_pairs(3, 2, 7, parity=True)
        for key, w in refined.entries.items():
            assert w <= plain.entries[key]

    def test_equal_when_no_tight_level(self):
        # Pairs at which no level is tight are counted by both families.
        def never_tight(pair, k):
            top = pair.max_part() + 1
            return all(
                pair.lam.freq(j) + pair.valuation(j + 1) < k - 1
                for j in range(1, top + 1)
            )

        for k, i in ((3, 2), (3, 3)):
            for n in range(7):
                for pair in pairs_of(n):
                    if pair.satisfies_frequency_conditions(k, i) and never_tight(pair, k):
                        assert pair.satisfies_parity_conditions(k, i)


class TestEnumeration:
    def test_weight_zero(self):
        assert list(enumerate_pairs(0)) == [OverpartitionPair(O.empty(), O.empty())]

    def test_weight_one(self):
        pairs = list(enumerate_pairs(1))
        assert len(pairs) == 4
        assert len(set(pairs)) == 4

    def test_overpartition_counts(self):
        assert [len(overpartitions_of(n)) for n in range(9)] == [1, 2, 4, 8, 14, 24, 40, 64, 100]

    def test_pair_count_matches_product_series(self):
        # Oracle: the square of the overpartition generating function.
        from qpair.series import mono, pochhammer_inf

        cutoff = 9
        single = pochhammer_inf(mono(-1, q=1), cutoff) * pochhammer_inf(mono(1, q=1), cutoff).invert()
        squared = single * single
        for n in range(cutoff):
            assert len(pairs_of(n)) == squared.coeff_q(n)

    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            list(enumerate_pairs(15))

    def test_canonical_overline_rules(self):
        with pytest.raises(ValueError):
            O([(3, True), (3, True)])
        with pytest.raises(ValueError):
            O([(0, False)])


class TestOddModulusIdentity:
    def test_sides_agree(self):
        for k in (2, 3):
            a, b = overpartition_identity_sides(k, 10)
            assert a == b

    def test_k2_values(self):
        # Frozen from the enumeration oracle; matches the product
        # (-q)inf (q3;q3)inf / ((q)inf (-q3;q3)inf) expansion.
        a, _ = overpartition_identity_sides(2, 6)
        assert a == [1, 2, 4, 6, 10, 16, 24]


class TestRootOfUnityIdentity:
    def test_sides_agree_and_odd_class_vanishes(self):
        a, even, odd = weighted_pair_identity_sides(3, 9)
        assert even == a
        assert all(w == 0 for w in odd)
        assert all(isinstance(w, int) for w in even)

    def test_weights_are_gaussian_units(self):
        _, even, _ = weighted_pair_identity_sides(3, 5)
        assert even[0] == 1

    def test_small_k_rejected(self):
        with pytest.raises(ValueError):
            weighted_pair_identity_sides(2, 5)


class TestEvenModulusIdentity:
    def test_trivial_weight_zero(self):
        a, b = partition_pair_identity_sides(2, 2, 0)
        assert a == [1] and b == [1]

    def test_sides_agree(self):
        for k, i in ((2, 2), (3, 2), (3, 3)):
            a, b = partition_pair_identity_sides(k, i, 10)
            assert a == b

    def test_odd_distinct_enumeration(self):
        # gf prod (1+q^(2j-1))/(1-q^(2j)) = sum of counts
        from qpair.series import mono, pochhammer_inf

        cutoff = 10
        g = pochhammer_inf(mono(-1, q=1), cutoff, step=2)
        g = g * pochhammer_inf(mono(1, q=2), cutoff, step=2).invert()
        for n in range(cutoff):
            assert len(list(partitions_odd_distinct(n))) == g.coeff_q(n)

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            partition_pair_identity_sides(3, 1, 5)
