import pytest

from qpair.frobenius import FrobeniusSymbol, successive_ranks
from qpair.overpartitions import count_frequency_pairs
from qpair.paths import (
    LatticePath,
    count_paths,
    enumerate_paths,
    gf_closed,
    gf_gamma_closed,
    gf_gamma_recurrence,
    gf_recurrence,
    path_to_symbol,
    satisfies_even_conditions,
    satisfies_odd_conditions,
    symbol_to_path,
)


def row(*parts):
    return [(abs(p), p < 0) for p in parts]


FIG1 = LatticePath(
    2,
    ["SE", "NE", "S", "SE", "NE", "SE", "NE", "S", "NE", "SW", "NE", "SE"],
    ["a", "one", "b", "ab", "one"],
)

FIG2 = LatticePath(
    1,
    ["NE", "SW", "NE", "SW", "NE", "SE", "NE", "S", "SE", "NE", "NE", "SW", "SE", "NE", "SW"],
    ["ab", "ab", "one", "a", "ab", "ab"],
)

FIG3 = LatticePath(
    2,
    "SE SE NE NE SW SE NE NE NE S NE NE SE SE SE NE SE NE NE S SE SE E NE NE SW NE SE NE NE S SE SE".split(),
    ["ab", "a", "one", "one", "b", "ab", "one", "b"],
)

FIG3_SYMBOL = FrobeniusSymbol(
    row(14, -12, 12, 8, -7, -4, -3, 2),
    row(-9, -8, 8, -7, -5, -4, 3, 1),
)


class TestMajorIndex:
    def test_first_worked_path(self):
        assert FIG1.major_index() == 26
        assert [p.x for p in FIG1.peaks()] == [2, 4, 6, 7, 7]

    def test_second_worked_path(self):
        assert FIG2.major_index() == 19
        assert [p.x for p in FIG2.peaks()] == [1, 1, 1, 3, 6, 7]

    def test_peakless_descent(self):
        p = LatticePath(3, ["SE", "SE", "SE"], [])
        assert p.major_index() == 0

    def test_third_worked_path(self):
        assert FIG3.major_index() == 115
        assert FIG3.marked_a() == 3
        assert FIG3.marked_b() == 4


class TestValidation:
    def test_south_needs_northeast(self):
        with pytest.raises(ValueError, match="follow"):
            LatticePath(1, ["SE", "S"], ["a"])

    def test_east_only_at_zero(self):
        with pytest.raises(ValueError, match="height 0"):
            LatticePath(1, ["E", "SE"], [])

    def test_must_end_on_axis(self):
        with pytest.raises(ValueError, match="x-axis"):
            LatticePath(0, ["NE"], [])

    def test_no_trailing_east(self):
        with pytest.raises(ValueError, match="E step"):
            LatticePath(1, ["SE", "E"], [])

    def test_mark_consistency(self):
        with pytest.raises(ValueError, match="ab"):
            LatticePath(0, ["NE", "SW"], ["a"])
        with pytest.raises(ValueError, match="marked a or b"):
            LatticePath(0, ["NE", "S"], ["one"])

    def test_json_round_trip(self):
        for p in (FIG1, FIG2, FIG3):
            assert LatticePath.from_obj(p.to_obj()) == p


class TestConditions:
    def test_third_path_satisfies_odd(self):
        assert satisfies_odd_conditions(FIG3, 5, 3)

    def test_peakless_path_satisfies(self):
        p = LatticePath(1, ["SE"], [])
        assert satisfies_odd_conditions(p, 3, 2)
        assert satisfies_even_conditions(p, 3, 2)

    def test_wrong_start_height(self):
        p = LatticePath(1, ["SE"], [])
        assert not satisfies_odd_conditions(p, 3, 1)

    def test_even_subset_of_odd(self):
        for n in range(8):
            for p in enumerate_paths(3, 2, n):
                if satisfies_even_conditions(p, 3, 2):
                    assert satisfies_odd_conditions(p, 3, 2)


class TestEnumeration:
    def test_major_zero_unique(self):
        for k, i in ((2, 1), (2, 2), (3, 2), (4, 4)):
            paths = list(enumerate_paths(k, i, 0))
            assert len(paths) == 1
            assert paths[0].major_index() == 0
            assert not paths[0].marks

    def test_matches_frequency_family(self):
        for k, i in ((2, 2), (2, 1), (3, 2)):
            e = count_paths(k, i, 8)
            b = count_frequency_pairs(k, i, 8)
            assert e.first_mismatch(b) is None

    def test_even_matches_parity_family(self):
        for k, i in ((2, 2), (3, 3)):
            e = count_paths(k, i, 8, even=True)
            b = count_frequency_pairs(k, i, 8, parity=True)
            assert e.first_mismatch(b) is None


class TestBijection:
    def test_worked_path_maps_to_symbol(self):
        assert path_to_symbol(FIG3, 5, 3) == FIG3_SYMBOL

    def test_worked_symbol_maps_back(self):
        assert symbol_to_path(FIG3_SYMBOL, 5, 3) == FIG3

    def test_empty(self):
        empty_path = LatticePath(0, [], [])
        assert path_to_symbol(empty_path, 2, 2) == FrobeniusSymbol([], [])
        assert symbol_to_path(FrobeniusSymbol([], []), 2, 2) == empty_path

    def test_round_trip_exhaustive(self):
        for k, i in ((2, 2), (3, 2)):
            for n in range(9):
                for path in enumerate_paths(k, i, n):
                    f = path_to_symbol(path, k, i)
                    assert f.weight() == n
                    assert f.columns == len(path.peaks())
                    assert f.s_stat() == path.marked_a()
                    assert f.t_stat() == path.marked_b()
                    assert symbol_to_path(f, k, i) == path

    def test_even_paths_avoid_top_rank(self):
        k, i = 3, 2
        top_rank = 2 * k - i - 1
        for n in range(9):
            for path in enumerate_paths(k, i, n, even=True):
                ranks = successive_ranks(path_to_symbol(path, k, i))
                assert all(r != top_rank for r in ranks)

    def test_out_of_window_rank_rejected(self):
        bad = FrobeniusSymbol(row(5), row(0))
        with pytest.raises(ValueError, match="outside"):
            symbol_to_path(bad, 2, 2)


class TestGeneratingFunctions:
    def test_zero_peaks_is_one(self):
        for k, i in ((2, 2), (3, 1), (4, 3)):
            for even in (False, True):
                g = gf_recurrence(k, i, 0, 8, even=even)
                assert g.terms == {(0, 0, 0, 0): 1}
                c = gf_closed(k, i, 0, 8, even=even)
                assert c.terms == {(0, 0, 0, 0): 1}

    def test_gamma_at_zero_index(self):
        assert gf_gamma_recurrence(3, 0, 2, 8).is_zero()
        assert gf_gamma_closed(3, 0, 2, 8).is_zero()

    def test_one_peak_matches_enumeration(self):
        # Oracle: brute-force paths with exactly one peak.
        cutoff = 8
        g = gf_recurrence(2, 2, 1, cutoff)
        for n in range(cutoff):
            by_marks = {}
            for p in enumerate_paths(2, 2, n):
                if len(p.peaks()) == 1:
                    key = (p.marked_a(), p.marked_b())
                    by_marks[key] = by_marks.get(key, 0) + 1
            for s in range(2):
                for t in range(2):
                    assert g.coeff(s, t, 0, n) == by_marks.get((s, t), 0)

    def test_closed_equals_recurrence(self):
        for k in (2, 3):
            for i in range(1, k + 1):
                for even in (False, True):
                    for n_peaks in range(4):
                        lhs = gf_recurrence(k, i, n_peaks, 10, even=even)
                        rhs = gf_closed(k, i, n_peaks, 10, even=even)
                        assert lhs.first_mismatch(rhs) is None, (k, i, even, n_peaks)

    def test_peak_count_refines_enumeration(self):
        # Summing the N-peak series over N reproduces the path table.
        cutoff = 8
        k, i = 3, 2
        total = gf_recurrence(k, i, 0, cutoff)
        for n_peaks in range(1, cutoff):
            total = total + gf_recurrence(k, i, n_peaks, cutoff)
        table = count_paths(k, i, cutoff - 1)
        for (s, t, n), w in table.entries.items():
            assert total.coeff(s, t, 0, n) == w
