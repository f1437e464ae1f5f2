from qpair.durfee import (
    DurfeeDecomposition,
    conjugate,
    conjugation_regions,
    count_admissible,
    count_self_conjugate,
    durfee_size,
    durfee_squares,
    is_ki_admissible,
    is_self_k_conjugate,
    is_self_ki_conjugate,
    k_conjugate,
    successive_sizes,
)
from qpair.frobenius import FrobeniusSymbol, joichi_stanton, symbols_of
from qpair.overpartitions import count_frequency_pairs, partitions


def row(*parts):
    return [(abs(p), p < 0) for p in parts]


PI = FrobeniusSymbol(
    row(12, 12, -8, 7, 6, -3, 2, -1),
    row(14, 12, -10, -8, 6, 5, -3, 2),
)

PI4 = FrobeniusSymbol(
    row(11, 9, -7, 7, 6, -3, 2, -1),
    row(15, 15, -11, -8, 6, 5, -3, 2),
)


class TestPartitionBasics:
    def test_conjugate_involution(self):
        for n in range(11):
            for p in partitions(n):
                assert conjugate(conjugate(p)) == p

    def test_durfee_empty_and_square(self):
        assert durfee_squares(()).sizes == ()
        assert durfee_squares((2, 2)).sizes == (2,)

    def test_worked_conjugates(self):
        assoc1, _ = joichi_stanton(PI.top)
        assoc2, _ = joichi_stanton(PI.bottom)
        assert conjugate(assoc1) == (8, 6, 5, 5, 4, 3, 2, 2, 2)
        assert conjugate(assoc2) == (8, 8, 7, 6, 5, 4, 4, 3, 2, 1, 1)

    def test_worked_successive_sizes(self):
        lam2p = (8, 8, 7, 6, 5, 4, 4, 3, 2, 1, 1)
        assert durfee_squares(lam2p).sizes[:2] == (5, 3)
        assert successive_sizes(lam2p, 2) == (5, 3)

    def test_reassembly(self):
        for n in range(11):
            for p in partitions(n):
                assert durfee_squares(p).reassemble() == p
        dec = DurfeeDecomposition((2,), ((1,),))
        assert dec.reassemble() == (3, 2)

    def test_durfee_size(self):
        assert durfee_size((5, 4, 3, 2)) == 3
        assert durfee_size(()) == 0


class TestKConjugation:
    def test_worked_regions(self):
        g1, g2 = conjugation_regions(PI, 4)
        assert g1 == (3, 2, 2, 2)
        assert g2 == (2, 1, 1)

    def test_worked_four_conjugate(self):
        assert k_conjugate(PI, 4) == PI4

    def test_involution_sweep(self):
        for n in range(9):
            for f in symbols_of(n):
                for k in (2, 3, 4):
                    g = k_conjugate(f, k)
                    assert g.weight() == f.weight()
                    assert g.columns == f.columns
                    assert g.s_stat() == f.s_stat()
                    assert g.t_stat() == f.t_stat()
                    assert k_conjugate(g, k) == f

    def test_identity_when_too_few_squares(self):
        # Bottom partition with fewer than k-2 = 2 squares.
        f = FrobeniusSymbol(row(2, 1, 0), row(1, 1, 0))
        assert conjugation_regions(f, 4) is None
        assert k_conjugate(f, 4) == f

    def test_self_conjugate_iff_regions_match(self):
        for n in range(8):
            for f in symbols_of(n):
                for k in (2, 3):
                    regions = conjugation_regions(f, k)
                    if is_self_k_conjugate(f, k):
                        assert regions is None or regions[0] == regions[1]
                    elif regions is not None and regions[0] != regions[1]:
                        assert k_conjugate(f, k) != f


class TestAdmissibility:
    def test_empty_symbol(self):
        empty = FrobeniusSymbol([], [])
        for k in (2, 3, 4):
            for i in range(1, k + 1):
                assert is_ki_admissible(empty, k, i)
                assert is_self_ki_conjugate(empty, k, i)

    def test_matches_frequency_family(self):
        for k, i in ((2, 1), (2, 2), (3, 2), (3, 3)):
            d = count_admissible(k, i, 8)
            b = count_frequency_pairs(k, i, 8)
            assert d.first_mismatch(b) is None

    def test_self_conjugate_matches_parity_family(self):
        for k, i in ((2, 2), (3, 2), (3, 3)):
            d = count_self_conjugate(k, i, 8)
            b = count_frequency_pairs(k, i, 8, parity=True)
            assert d.first_mismatch(b) is None

    def test_zero_size_insertions_are_neutral(self):
        # With at most i-2 successive squares, the required insertion sizes
        # are all zero and admissibility holds with no actual insertion.
        from qpair.durfee import _lam2_prime

        for n in range(8):
            for f in symbols_of(n):
                squares = durfee_squares(_lam2_prime(f)).sizes
                for k in (3, 4):
                    for i in range(2, k + 1):
                        if len(squares) <= i - 2:
                            assert is_ki_admissible(f, k, i)

    def test_sequential_reading_comparison(self):
        # The one-at-a-time reading agrees with the static reading on the
        # verified range (observational; the static reading is the one
        # validated against the multisum generating function).
        diffs = 0
        for n in range(7):
            for f in symbols_of(n):
                for k, i in ((3, 2), (3, 3)):
                    if is_ki_admissible(f, k, i) != is_ki_admissible(f, k, i, sequential=True):
                        diffs += 1
        assert diffs == 0
