"""Identity-verification suites with machine-readable reports.

Each suite runs a grid of exact coefficient comparisons and returns a
:class:`VerificationReport`; an empty failure list is the single source of
truth for success.  Reports are deterministic apart from ``wall_time``.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from .counts import CountTable
from .durfee import count_admissible, count_self_conjugate
from .frobenius import count_rank_bounded, rank_interval
from .gaussint import GaussInt
from .hyperg import (
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
from .overpartitions import (
    overpartition_identity_sides,
    weighted_pair_identity_sides,
    partition_pair_identity_sides,
    count_frequency_pairs,
)
from .paths import count_paths, gf_closed, gf_gamma_closed, gf_gamma_recurrence, gf_recurrence
from .series import TruncatedSeries, geometric, mono, one_minus, pochhammer_inf


@dataclass
class CheckFailure:
    identity: str
    params: dict
    key: tuple | None
    lhs: str
    rhs: str

    def sort_key(self):
        return (self.identity, sorted(self.params.items()), self.key or ())

    def to_obj(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(sorted(self.params.items())),
            "key": list(self.key) if self.key is not None else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks_run: int = 0
    identities: set[str] = field(default_factory=set)
    failures: list[CheckFailure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "checks_run": self.checks_run,
            "identities": sorted(self.identities),
            "failures": [f.to_obj() for f in sorted(self.failures, key=CheckFailure.sort_key)],
            "ok": self.ok,
            "wall_time": round(self.wall_time, 3),
        }

    # -- recording helpers -------------------------------------------------

    def series_check(self, identity: str, params: dict, lhs: TruncatedSeries, rhs: TruncatedSeries):
        self.checks_run += 1
        self.identities.add(identity)
        mm = lhs.first_mismatch(rhs)
        if mm is not None:
            key, lv, rv = mm
            self.failures.append(CheckFailure(identity, params, key, str(lv), str(rv)))

    def table_check(self, identity: str, params: dict, lhs: CountTable, rhs: CountTable):
        self.checks_run += 1
        self.identities.add(identity)
        mm = lhs.first_mismatch(rhs)
        if mm is not None:
            key, lv, rv = mm
            self.failures.append(CheckFailure(identity, params, key, str(lv), str(rv)))

    def value_check(self, identity: str, params: dict, key, lhs, rhs):
        self.checks_run += 1
        self.identities.add(identity)
        if lhs != rhs:
            self.failures.append(CheckFailure(identity, params, key, str(lhs), str(rhs)))


@dataclass(frozen=True)
class VerifyConfig:
    k_values: tuple[int, ...] = (2, 3, 4)
    cutoff: int = 12
    n_max: int = 10
    deep: bool = False

    def effective(self) -> "VerifyConfig":
        if not self.deep:
            return self
        return VerifyConfig(self.k_values, 2 * self.cutoff, 2 * self.n_max, False)


def _mutated_interval(k: int, i: int, tilde: bool) -> tuple[int, int] | None:
    """Test hook: QPAIR_SELFTEST_MUTATION=rank-interval widens the window."""
    if os.environ.get("QPAIR_SELFTEST_MUTATION") == "rank-interval":
        lo, hi = rank_interval(k, i, tilde)
        return lo, hi + 1
    return None


# ---------------------------------------------------------------------- suites


def suite_qdiff_R(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = cfg.cutoff
    rep = VerificationReport("qdiff-R", {"k": list(cfg.k_values), "cutoff": c})
    start = time.time()
    inv_abxq = geometric(mono(1, a=1, b=1, x=1, q=1), c, c)
    ab_sum = TruncatedSeries.poly([mono(1, a=1), mono(1, b=1)])
    for k in cfg.k_values:
        r = {i: series_R(k, i, c) for i in range(1, k + 1)}
        shifted = {i: r[i].shift_x(1) for i in range(1, k + 1)}
        rep.series_check("index-1-shift", {"k": k}, r[1], shifted[k])
        rhs = shifted[k - 1].times_monomial(mono(1, x=1, q=1)) + shifted[k] * TruncatedSeries.poly(
            [mono(1, a=1, x=1, q=1), mono(1, b=1, x=1, q=1), mono(1, a=1, b=1, x=1, q=1)]
        )
        rep.series_check("index-2-step", {"k": k}, r[2] - r[1], rhs * inv_abxq)
        for i in range(3, k + 1):
            inner = shifted[k - i + 1] + shifted[k - i + 2] * ab_sum
            inner = inner + shifted[k - i + 3].times_monomial(mono(1, a=1, b=1))
            rhs = inner.times_monomial(mono(1, x=i - 1, q=i - 1)) * inv_abxq
            rep.series_check("index-step", {"k": k, "i": i}, r[i] - r[i - 1], rhs)
    rep.wall_time = time.time() - start
    return rep


def suite_qdiff_R_tilde(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = cfg.cutoff
    rep = VerificationReport("qdiff-Rtilde", {"k": list(cfg.k_values), "cutoff": c})
    start = time.time()
    inv_abxq = geometric(mono(1, a=1, b=1, x=1, q=1), c, c)
    ab_sum = TruncatedSeries.poly([mono(1, a=1), mono(1, b=1)])
    one_plus_xq = TruncatedSeries.poly([mono(1), mono(1, x=1, q=1)])
    for k in cfg.k_values:
        r = {i: series_R_tilde(k, i, c) for i in range(1, k + 1)}
        shifted = {i: r[i].shift_x(1) for i in range(1, k + 1)}
        rep.series_check("index-1-shift", {"k": k}, r[1], shifted[k])
        rhs = shifted[k - 1] * one_plus_xq + shifted[k] * TruncatedSeries.poly(
            [mono(1, a=1, x=1, q=1), mono(1, b=1, x=1, q=1)]
        )
        rep.series_check("index-2-value", {"k": k}, r[2], rhs * inv_abxq)
        for i in range(3, k + 1):
            inner = shifted[k - i + 1] + shifted[k - i + 2] * ab_sum
            inner = inner + shifted[k - i + 3].times_monomial(mono(1, a=1, b=1))
            rhs = (inner * one_plus_xq).times_monomial(mono(1, x=i - 2, q=i - 2)) * inv_abxq
            rep.series_check("index-double-step", {"k": k, "i": i}, r[i] - r[i - 2], rhs)
    rep.wall_time = time.time() - start
    return rep


def suite_htilde(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = cfg.cutoff
    rep = VerificationReport("htilde-identities", {"k": list(cfg.k_values), "cutoff": c})
    start = time.time()
    zero = TruncatedSeries.zero(c, c)
    x_poly = TruncatedSeries.poly([mono(1, x=1)])
    one_plus_x = TruncatedSeries.poly([mono(1), mono(1, x=1)])
    for k in cfg.k_values:
        rep.series_check("h-vanishes-at-0", {"k": k}, series_H_tilde(k, 0, c), zero)
        for i in range(1, k + 1):
            rep.series_check(
                "h-reflection", {"k": k, "i": i},
                series_H_tilde(k, -i, c), -series_H_tilde(k, i, c),
            )
            j = series_J_tilde(k, k - i + 1, c)
            if i >= 2:
                lhs = series_H_tilde(k, i, c) - series_H_tilde(k, i - 2, c)
                rhs = (one_plus_x * j).times_monomial(mono(1, x=i - 2))
            else:
                lhs = x_poly * series_H_tilde(k, 1, c) - series_H_tilde(k, -1, c)
                rhs = one_plus_x * j
            rep.series_check("h-difference", {"k": k, "i": i}, lhs, rhs)
            rep.series_check(
                "j-dual-route", {"k": k, "i": i},
                series_J_tilde(k, i, c), series_J_tilde(k, i, c, route="difference"),
            )
    rep.wall_time = time.time() - start
    return rep


def suite_series_vs_enum(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    n_max = cfg.n_max
    rep = VerificationReport("series-vs-enum", {"k": list(cfg.k_values), "n_max": n_max})
    start = time.time()
    for k in cfg.k_values:
        for i in range(1, k + 1):
            got = CountTable.from_series(series_R(k, i, n_max + 1, x_one=True), n_max)
            rep.table_check("series-counts-pairs", {"k": k, "i": i},
                            got, count_frequency_pairs(k, i, n_max, bound=n_max))
            got_t = CountTable.from_series(series_R_tilde(k, i, n_max + 1, x_one=True), n_max)
            rep.table_check("series-counts-pairs-even", {"k": k, "i": i},
                            got_t, count_frequency_pairs(k, i, n_max, parity=True, bound=n_max))
    rep.wall_time = time.time() - start
    return rep


def _chain_k_values(cfg: VerifyConfig) -> list[int]:
    return [k for k in cfg.k_values if 2 <= k <= 3]


def suite_four_way(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    n_max = cfg.n_max
    ks = _chain_k_values(cfg)
    rep = VerificationReport("four-way", {"k": ks, "n_max": n_max})
    start = time.time()
    for k in ks:
        for i in range(1, k + 1):
            b = count_frequency_pairs(k, i, n_max, bound=n_max)
            c = count_rank_bounded(k, i, n_max, bound=n_max,
                                   interval=_mutated_interval(k, i, False))
            d = count_admissible(k, i, n_max, bound=n_max)
            e = count_paths(k, i, n_max, bound=n_max)
            rep.table_check("ranks-vs-freq", {"k": k, "i": i}, c, b)
            rep.table_check("durfee-vs-freq", {"k": k, "i": i}, d, b)
            rep.table_check("paths-vs-freq", {"k": k, "i": i}, e, b)
    rep.wall_time = time.time() - start
    return rep


def suite_four_way_even(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    n_max = cfg.n_max
    ks = _chain_k_values(cfg)
    rep = VerificationReport("four-way-even", {"k": ks, "n_max": n_max})
    start = time.time()
    for k in ks:
        for i in range(1, k + 1):
            b = count_frequency_pairs(k, i, n_max, parity=True, bound=n_max)
            c = count_rank_bounded(k, i, n_max, tilde=True, bound=n_max,
                                   interval=_mutated_interval(k, i, True))
            d = count_self_conjugate(k, i, n_max, bound=n_max)
            e = count_paths(k, i, n_max, even=True, bound=n_max)
            rep.table_check("ranks-vs-freq-even", {"k": k, "i": i}, c, b)
            rep.table_check("durfee-vs-freq-even", {"k": k, "i": i}, d, b)
            rep.table_check("paths-vs-freq-even", {"k": k, "i": i}, e, b)
    rep.wall_time = time.time() - start
    return rep


def suite_gf_paths(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = cfg.cutoff
    rep = VerificationReport("gf-paths", {"k": list(cfg.k_values), "cutoff": c})
    start = time.time()
    for k in cfg.k_values:
        for even in (False, True):
            tag = "even" if even else "odd"
            for i in range(1, k + 1):
                for n_peaks in range(5):
                    rep.series_check(
                        f"gf-dual-route-{tag}", {"k": k, "i": i, "peaks": n_peaks},
                        gf_recurrence(k, i, n_peaks, c, even=even),
                        gf_closed(k, i, n_peaks, c, even=even),
                    )
            for i in range(0, k):
                for n_peaks in range(5):
                    rep.series_check(
                        f"gf-companion-dual-route-{tag}", {"k": k, "i": i, "peaks": n_peaks},
                        gf_gamma_recurrence(k, i, n_peaks, c, even=even),
                        gf_gamma_closed(k, i, n_peaks, c, even=even),
                    )
            for i in range(1, k + 1):
                total = TruncatedSeries.zero(c, c)
                for n_peaks in range(c):
                    total = total + gf_closed(k, i, n_peaks, c, even=even)
                bilateral = (series_R_tilde_bilateral if even else series_R_bilateral)(k, i, c)
                rep.series_check(f"gf-sum-vs-bilateral-{tag}", {"k": k, "i": i}, total, bilateral)
    rep.wall_time = time.time() - start
    return rep


def suite_q_gauss(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = cfg.cutoff
    rep = VerificationReport("q-gauss", {"cutoff": c})
    start = time.time()
    for n in (-2, -1, 0, 1, 2):
        lhs, rhs = q_gauss_sides(n, c)
        rep.series_check("summation-lemma", {"n": n}, lhs, rhs)
    lp, _ = q_gauss_sides(2, c)
    ln, _ = q_gauss_sides(-2, c)
    rep.series_check("summand-reflection", {"n": 2}, lp, ln)
    rep.wall_time = time.time() - start
    return rep


def suite_jtp(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = max(cfg.cutoff, 20)
    rep = VerificationReport("jtp", {"cutoff": c})
    start = time.time()
    for label, z in (("1", mono(1)), ("-1", mono(-1)), ("i", mono(GaussInt(0, 1))), ("q", mono(1, q=1))):
        lhs, rhs = jacobi_triple_product(z, c)
        rep.series_check("triple-product", {"z": label}, lhs, rhs)
    rep.wall_time = time.time() - start
    return rep


def _dress_lattice_rhs(rhs: TruncatedSeries, c: int, cap: int) -> TruncatedSeries:
    """Multiply by (q)inf (-aq)inf (-bq)inf / (abq)inf."""
    out = rhs
    for j in range(1, c):
        out = out * one_minus(mono(1, q=j))
        out = out * TruncatedSeries.poly([mono(1), mono(1, a=1, q=j)])
        out = out * TruncatedSeries.poly([mono(1), mono(1, b=1, q=j)])
        out = out * geometric(mono(1, a=1, b=1, q=j), c, cap)
    return out


def suite_bailey(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    c = cfg.cutoff
    lattice_c = min(c, 10) if not cfg.deep else c
    n_max = cfg.n_max
    rep = VerificationReport(
        "bailey", {"k": list(cfg.k_values), "cutoff": c, "n_max": n_max}
    )
    start = time.time()
    depth = max(4, c)
    pairs = {"B3": bailey_pair_b3(depth, c), "E3": bailey_pair_e3(depth, c)}
    for label in pairs:
        rep.value_check("pair-relation-verified", {"pair": label}, None, True, True)
    for label, pair in pairs.items():
        for k_lat in range(0, 4):
            for i_lat in range(0, k_lat + 1):
                lhs, rhs = bailey_lattice_sides(pair, k_lat, i_lat, lattice_c)
                rep.series_check("lattice-transform", {"pair": label, "k": k_lat, "i": i_lat},
                                 lhs, rhs)
    for k in _chain_k_values(cfg):
        for i in range(1, k + 1):
            _, rhs = bailey_lattice_sides(pairs["B3"], k - 1, i - 1, c)
            rep.series_check("lattice-reproduces-bilateral", {"k": k, "i": i},
                             _dress_lattice_rhs(rhs, c, c), series_R_bilateral(k, i, c))
            _, rhs_t = bailey_lattice_sides(pairs["E3"], k - 1, i - 1, c)
            rep.series_check("lattice-reproduces-bilateral-even", {"k": k, "i": i},
                             _dress_lattice_rhs(rhs_t, c, c), series_R_tilde_bilateral(k, i, c))
            d_series = multisum_admissible(k, i, n_max + 1)
            rep.table_check("multisum-vs-durfee-enum", {"k": k, "i": i},
                            CountTable.from_series(d_series, n_max),
                            count_admissible(k, i, n_max, bound=n_max))
            dt_series = multisum_self_conjugate(k, i, n_max + 1)
            rep.table_check("multisum-vs-selfconj-enum", {"k": k, "i": i},
                            CountTable.from_series(dt_series, n_max),
                            count_self_conjugate(k, i, n_max, bound=n_max))
            rep.series_check("multisum-vs-bilateral", {"k": k, "i": i},
                             multisum_admissible(k, i, c), series_R_bilateral(k, i, c))
            rep.series_check("multisum-vs-bilateral-even", {"k": k, "i": i},
                             multisum_self_conjugate(k, i, c), series_R_tilde_bilateral(k, i, c))
    rep.wall_time = time.time() - start
    return rep


def _product_odd_modulus(k: int, c: int) -> TruncatedSeries:
    m = 2 * k - 1
    prod = pochhammer_inf(mono(-1, q=1), c)
    prod = prod * pochhammer_inf(mono(1, q=m), c, step=m)
    prod = prod * pochhammer_inf(mono(1, q=1), c).invert()
    return prod * pochhammer_inf(mono(-1, q=m), c, step=m).invert()


def _product_root_of_unity(k: int, c: int) -> TruncatedSeries:
    m = k - 1
    prod = pochhammer_inf(mono(-1, q=1), c)
    prod = prod * pochhammer_inf(mono(-1, q=2), c, step=2)
    prod = prod * pochhammer_inf(mono(1, q=m), c, step=m)
    prod = prod * pochhammer_inf(mono(1, q=1), c).invert()
    prod = prod * pochhammer_inf(mono(1, q=2), c, step=2).invert()
    return prod * pochhammer_inf(mono(-1, q=m), c, step=m).invert()


def _product_even_modulus(k: int, i: int, c: int) -> TruncatedSeries:
    m = 4 * k - 2
    g = pochhammer_inf(mono(-1, q=1), c, step=2)
    g = g * g
    for e in (2 * i - 2, 4 * k - 2 * i, m):
        g = g * pochhammer_inf(mono(1, q=e), c, step=m)
    inv = pochhammer_inf(mono(1, q=2), c, step=2).invert()
    return g * inv * inv


def specialized_odd_modulus_series(k: int, target: int) -> TruncatedSeries:
    """The i = k series at (a, b, x, q) -> (1, 1/q, 1, q^2), provable to ``target``."""

    def depth(cc: int) -> int:
        n = 0
        while k * n * n + n < cc:
            n += 1
        return n

    c = target
    while c - depth(c) < target:
        c += 1
    sig = depth(c)
    s = series_R(k, k, c, var_cap=c + sig, x_one=True)
    return s.specialize(sub_a=(1, 0), sub_b=(1, -1), q_power=2, slack={"b": sig})


def suite_corollaries(cfg: VerifyConfig) -> VerificationReport:
    cfg = cfg.effective()
    n_max = min(cfg.n_max + 2, 12) if not cfg.deep else cfg.n_max
    prod_cutoff = max(cfg.cutoff, 16)
    rep = VerificationReport("corollaries", {"n_max": n_max, "product_cutoff": prod_cutoff})
    start = time.time()
    for k in (2, 3):
        a, b = overpartition_identity_sides(k, n_max, bound=n_max)
        rep.value_check("odd-modulus-sides", {"k": k}, None, a, b)
        spec = specialized_odd_modulus_series(k, prod_cutoff)
        rep.series_check("odd-modulus-product", {"k": k}, spec, _product_odd_modulus(k, prod_cutoff))
        rep.value_check("odd-modulus-series-vs-counts", {"k": k}, None,
                        [spec.coeff_q(n) for n in range(n_max + 1)], a)
    for k in (3, 4):
        a, even, odd = weighted_pair_identity_sides(k, n_max, bound=n_max)
        rep.value_check("root-of-unity-sides", {"k": k}, None, a, even)
        rep.value_check("root-of-unity-odd-class", {"k": k}, None, odd, [0] * (n_max + 1))
        bil = series_R_tilde_bilateral(k, k - 1, prod_cutoff)
        spec = bil.specialize(sub_a=(GaussInt(0, 1), 0), sub_b=(GaussInt(0, -1), 0))
        rep.series_check("root-of-unity-product", {"k": k}, spec, _product_root_of_unity(k, prod_cutoff))
    for k in (2, 3):
        for i in range(2, k + 1):
            a, b = partition_pair_identity_sides(k, i, n_max, bound=n_max)
            rep.value_check("even-modulus-sides", {"k": k, "i": i}, None, a, b)
            a16, _ = partition_pair_identity_sides(k, i, prod_cutoff - 1, bound=prod_cutoff)
            prod = _product_even_modulus(k, i, prod_cutoff)
            rep.value_check("even-modulus-product", {"k": k, "i": i}, None,
                            a16, [prod.coeff_q(n) for n in range(prod_cutoff)])
    rep.wall_time = time.time() - start
    return rep


SUITES = {
    "qdiff-R": suite_qdiff_R,
    "qdiff-Rtilde": suite_qdiff_R_tilde,
    "htilde-identities": suite_htilde,
    "series-vs-enum": suite_series_vs_enum,
    "four-way": suite_four_way,
    "four-way-even": suite_four_way_even,
    "gf-paths": suite_gf_paths,
    "q-gauss": suite_q_gauss,
    "jtp": suite_jtp,
    "bailey": suite_bailey,
    "corollaries": suite_corollaries,
}


def run_suite(name: str, cfg: VerifyConfig) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](cfg)
