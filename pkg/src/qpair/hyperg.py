"""The named basic hypergeometric series and their identity machinery.

Builders for the two four-variable series families (plain and even-moduli),
their auxiliary H/J relatives, the bilateral forms at x = 1, the triple
product, the two-variable summation lemma, Bailey pairs with the lattice
transform, and the Durfee multisums.  Everything returns a
:class:`~qpair.series.TruncatedSeries`; identities are checked by callers
through ``first_mismatch``.

Sign conventions used throughout: ``(-ab)^n (-1/a, -1/b)_n`` is expanded as
``(-1)^n prod_{j<n} (a + q^j)(b + q^j)``, which keeps every numerator a
polynomial; denominators are unrolled into geometric inverse factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussint import Coeff, cneg, is_unit, unit_pow
from .overpartitions import check_ki
from .qtools import f_poly, inv_qfactors, inv_qpoch
from .series import Monomial, TruncatedSeries, geometric, mono, one_minus


def _vm(x_one: bool, coeff: Coeff = 1, a: int = 0, b: int = 0, x: int = 0, q: int = 0) -> Monomial:
    return mono(coeff, a, b, 0 if x_one else x, q)


def _apply_R_prefactor(total: TruncatedSeries, q_cutoff: int, var_cap: int, x_one: bool,
                       with_abx_inverse: bool = True) -> TruncatedSeries:
    """Multiply by (-axq, -bxq)_inf / (xq)_inf, and optionally 1/(abxq)_inf."""
    for j in range(1, q_cutoff):
        total = total * TruncatedSeries.poly([mono(1), _vm(x_one, 1, a=1, x=1, q=j)])
        total = total * TruncatedSeries.poly([mono(1), _vm(x_one, 1, b=1, x=1, q=j)])
        total = total * geometric(_vm(x_one, 1, x=1, q=j), q_cutoff, var_cap)
        if with_abx_inverse:
            total = total * geometric(_vm(x_one, 1, a=1, b=1, x=1, q=j), q_cutoff, var_cap)
    return total


def _bracket_numerator(n: int, i: int, q_cutoff: int, var_cap: int, x_one: bool) -> TruncatedSeries:
    """(1 + axq^(n+1))(1 + bxq^(n+1)) - x^i q^(2n(i-1)+i) (a + q^n)(b + q^n)."""
    g = 2 * n * (i - 1) + i
    monos = [
        mono(1),
        _vm(x_one, 1, a=1, x=1, q=n + 1),
        _vm(x_one, 1, b=1, x=1, q=n + 1),
        _vm(x_one, 1, a=1, b=1, x=2, q=2 * n + 2),
        _vm(x_one, -1, a=1, b=1, x=i, q=g),
        _vm(x_one, -1, a=1, x=i, q=g + n),
        _vm(x_one, -1, b=1, x=i, q=g + n),
        _vm(x_one, -1, x=i, q=g + 2 * n),
    ]
    return TruncatedSeries.poly(monos).truncated(q_cutoff, var_cap)


def series_R(k: int, i: int, q_cutoff: int, var_cap: int | None = None,
             x_one: bool = False) -> TruncatedSeries:
    """The plain four-variable family member, truncated at ``q_cutoff``.

    With ``x_one=True`` the series is built at x = 1 (x-degrees dropped),
    which is cheaper when only the part-count-summed coefficients matter.
    """
    check_ki(k, i)
    cap = q_cutoff if var_cap is None else var_cap
    total = TruncatedSeries.zero(q_cutoff, cap)
    fn = TruncatedSeries.one(q_cutoff, cap)
    xq_n = TruncatedSeries.one(q_cutoff, cap)
    inv_chain = geometric(_vm(x_one, -1, a=1, x=1, q=1), q_cutoff, cap) * geometric(
        _vm(x_one, -1, b=1, x=1, q=1), q_cutoff, cap
    )
    n = 0
    while True:
        e_n = k * n * n + (k - i + 1) * n - n * (n - 1) // 2
        if e_n >= q_cutoff:
            break
        term = fn * xq_n * inv_chain
        term = term * _bracket_numerator(n, i, q_cutoff, cap, x_one)
        total = total + term.times_monomial(_vm(x_one, -1 if n % 2 else 1, x=k * n, q=e_n))
        n += 1
        fn = fn * TruncatedSeries.poly([mono(1, a=1), mono(1, q=n - 1)])
        fn = fn * TruncatedSeries.poly([mono(1, b=1), mono(1, q=n - 1)])
        xq_n = xq_n * one_minus(_vm(x_one, 1, x=1, q=n))
        inv_chain = inv_chain * geometric(mono(1, q=n), q_cutoff, cap)
        inv_chain = inv_chain * geometric(_vm(x_one, -1, a=1, x=1, q=n + 1), q_cutoff, cap)
        inv_chain = inv_chain * geometric(_vm(x_one, -1, b=1, x=1, q=n + 1), q_cutoff, cap)
    return _apply_R_prefactor(total, q_cutoff, cap, x_one)


def series_R_tilde(k: int, i: int, q_cutoff: int, var_cap: int | None = None,
                   x_one: bool = False) -> TruncatedSeries:
    """The even-moduli four-variable family member."""
    check_ki(k, i)
    cap = q_cutoff if var_cap is None else var_cap
    total = TruncatedSeries.zero(q_cutoff, cap)
    fn = TruncatedSeries.one(q_cutoff, cap)
    x2q2_n = TruncatedSeries.one(q_cutoff, cap)
    inv_chain = geometric(_vm(x_one, -1, a=1, x=1, q=1), q_cutoff, cap) * geometric(
        _vm(x_one, -1, b=1, x=1, q=1), q_cutoff, cap
    )
    n = 0
    while True:
        e_n = k * n * n + (k - i) * n - n * (n - 1)
        if e_n >= q_cutoff:
            break
        term = fn * x2q2_n * inv_chain
        term = term * _bracket_numerator(n, i, q_cutoff, cap, x_one)
        total = total + term.times_monomial(_vm(x_one, -1 if n % 2 else 1, x=(k - 1) * n, q=e_n))
        n += 1
        fn = fn * TruncatedSeries.poly([mono(1, a=1), mono(1, q=n - 1)])
        fn = fn * TruncatedSeries.poly([mono(1, b=1), mono(1, q=n - 1)])
        x2q2_n = x2q2_n * one_minus(_vm(x_one, 1, x=2, q=2 * n))
        inv_chain = inv_chain * geometric(mono(1, q=2 * n), q_cutoff, cap)
        inv_chain = inv_chain * geometric(_vm(x_one, -1, a=1, x=1, q=n + 1), q_cutoff, cap)
        inv_chain = inv_chain * geometric(_vm(x_one, -1, b=1, x=1, q=n + 1), q_cutoff, cap)
    return _apply_R_prefactor(total, q_cutoff, cap, x_one)


def series_H_tilde(k: int, i: int, q_cutoff: int, var_cap: int | None = None) -> TruncatedSeries:
    """The auxiliary H-series (k >= 1, any integer i).

    The engine keeps x-degrees nonnegative, so for i < 0 the returned
    series is x^|i| times the H-series; identities involving negative i are
    checked in that multiplied-through form.  Parameters whose summand
    exponents do not grow (k = 1 with |i| >= 2) are rejected.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    cap = q_cutoff if var_cap is None else var_cap
    absi = abs(i)
    if k == 1 and absi >= 2:
        raise ValueError(f"summand exponents do not grow for k=1, |i|={absi}: no truncation")
    xshift = absi if i < 0 else 0

    total = TruncatedSeries.zero(q_cutoff, cap)
    fn = TruncatedSeries.one(q_cutoff, cap)
    x2q2_prev = TruncatedSeries.one(q_cutoff, cap)  # (x^2 q^2; q^2)_{n-1}
    inv_chain = TruncatedSeries.one(q_cutoff, cap)
    n = 0
    while True:
        low = (k - 1) * n * n + (2 - absi) * n
        if low >= q_cutoff and (k - 1) * (2 * n + 1) + 2 - absi >= 0:
            break
        d_n = (k - 1) * n * n + 2 * n - i * n
        if n == 0:
            if i == 0:
                t_n = TruncatedSeries.zero(q_cutoff, cap)
            elif i > 0:
                t_n = TruncatedSeries.poly([mono(1, x=l) for l in range(i)]).truncated(q_cutoff, cap)
            else:
                t_n = TruncatedSeries.poly([mono(-1, x=l) for l in range(absi)]).truncated(q_cutoff, cap)
        else:
            one_plus_x = TruncatedSeries.poly([mono(1), mono(1, x=1)])
            if i >= 0:
                factor = TruncatedSeries.poly([mono(1, x=xshift), mono(-1, x=xshift + i, q=2 * n * i)])
            else:
                factor = TruncatedSeries.poly([mono(1, x=absi), mono(-1, q=2 * n * i)])
            t_n = (x2q2_prev * one_plus_x * factor).truncated(q_cutoff, cap)
        term = fn * t_n * inv_chain
        total = total + term.times_monomial(mono(-1 if n % 2 else 1, x=(k - 1) * n, q=d_n))
        n += 1
        fn = fn * TruncatedSeries.poly([mono(1, a=1), mono(1, q=n - 1)])
        fn = fn * TruncatedSeries.poly([mono(1, b=1), mono(1, q=n - 1)])
        if n >= 2:
            x2q2_prev = x2q2_prev * one_minus(mono(1, x=2, q=2 * (n - 1)))
        inv_chain = inv_chain * geometric(mono(1, q=2 * n), q_cutoff, cap)
        inv_chain = inv_chain * geometric(mono(-1, a=1, x=1, q=n), q_cutoff, cap)
        inv_chain = inv_chain * geometric(mono(-1, b=1, x=1, q=n), q_cutoff, cap)
    return _apply_R_prefactor(total, q_cutoff, cap, x_one=False, with_abx_inverse=False)


def series_J_tilde(k: int, i: int, q_cutoff: int, var_cap: int | None = None,
                   route: str = "product") -> TruncatedSeries:
    """The J-series, either as (abxq)_inf times the even-moduli series
    (route "product", the canonical one) or from the shifted H-series
    three-term relation (route "difference")."""
    check_ki(k, i)
    cap = q_cutoff if var_cap is None else var_cap
    if route == "product":
        total = series_R_tilde(k, i, q_cutoff, cap)
        for j in range(1, q_cutoff):
            total = total * one_minus(mono(1, a=1, b=1, x=1, q=j))
        return total
    if route != "difference":
        raise ValueError(f"unknown route {route!r}")
    h_i = series_H_tilde(k, i, q_cutoff, cap).shift_x(1)
    h_i1 = series_H_tilde(k, i - 1, q_cutoff, cap).shift_x(1)
    out = h_i + h_i1 * TruncatedSeries.poly([mono(1, a=1, x=1, q=1), mono(1, b=1, x=1, q=1)])
    h_i2 = series_H_tilde(k, i - 2, q_cutoff, cap).shift_x(1)
    if i >= 2:
        out = out + h_i2.times_monomial(mono(1, a=1, b=1, x=2, q=2))
    else:
        # i = 1: the stored object is x * H(-1); abx^2q^2 H(-1)(xq) = abxq * it.
        out = out + h_i2.times_monomial(mono(1, a=1, b=1, x=1, q=1))
    return out


# ------------------------------------------------------------------ bilateral forms


def _bilateral(k: int, i: int, q_cutoff: int, cap: int, tilde: bool) -> TruncatedSeries:
    def expo_pos(n):
        if tilde:
            return (k - 1) * n * n + (k - i + 1) * n
        return k * n * n + (k - i + 1) * n - n * (n - 1) // 2

    def expo_neg(m):
        if tilde:
            return (k - 1) * m * m - (k - i - 1) * m
        return k * m * m - (k - i - 1) * m - m * (m + 1) // 2

    total = TruncatedSeries.zero(q_cutoff, cap)
    fn = TruncatedSeries.one(q_cutoff, cap)
    inv_chain = TruncatedSeries.one(q_cutoff, cap)
    n = 0
    while True:
        e_pos = expo_pos(n)
        e_neg = expo_neg(n) if n >= 1 else None
        if e_pos >= q_cutoff and (e_neg is None or e_neg >= q_cutoff) and n >= 1:
            break
        sign = -1 if n % 2 else 1
        if e_pos < q_cutoff:
            total = total + (fn * inv_chain).times_monomial(mono(sign, q=e_pos))
        if e_neg is not None and e_neg < q_cutoff:
            total = total + (fn * inv_chain).times_monomial(mono(sign, q=e_neg))
        n += 1
        fn = fn * TruncatedSeries.poly([mono(1, a=1), mono(1, q=n - 1)])
        fn = fn * TruncatedSeries.poly([mono(1, b=1), mono(1, q=n - 1)])
        inv_chain = inv_chain * geometric(mono(-1, a=1, q=n), q_cutoff, cap)
        inv_chain = inv_chain * geometric(mono(-1, b=1, q=n), q_cutoff, cap)
    for j in range(1, q_cutoff):
        total = total * TruncatedSeries.poly([mono(1), mono(1, a=1, q=j)])
        total = total * TruncatedSeries.poly([mono(1), mono(1, b=1, q=j)])
        total = total * geometric(mono(1, q=j), q_cutoff, cap)
        total = total * geometric(mono(1, a=1, b=1, q=j), q_cutoff, cap)
    return total


def series_R_bilateral(k: int, i: int, q_cutoff: int, var_cap: int | None = None) -> TruncatedSeries:
    """The x = 1 form as a two-sided sum in three variables."""
    check_ki(k, i)
    return _bilateral(k, i, q_cutoff, q_cutoff if var_cap is None else var_cap, tilde=False)


def series_R_tilde_bilateral(k: int, i: int, q_cutoff: int, var_cap: int | None = None) -> TruncatedSeries:
    check_ki(k, i)
    return _bilateral(k, i, q_cutoff, q_cutoff if var_cap is None else var_cap, tilde=True)


# ------------------------------------------------------------------ classic identities


def jacobi_triple_product(z: Monomial, q_cutoff: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the triple product for z a unit times a q-power.

    Returns (sum side, product side): sum over all integers n of
    z^n q^(n^2) against (-zq, -q/z, q^2; q^2)_inf, each truncated.
    """
    u, e = z.coeff, z.q
    if z.a or z.b or z.x or not is_unit(u):
        raise ValueError("z must be a Gaussian unit times a power of q")
    cap = q_cutoff
    terms = []
    n = 0
    while True:
        hit = False
        for s in ((n,) if n == 0 else (n, -n)):
            expo = s * s + e * s
            if expo < q_cutoff:
                terms.append(mono(unit_pow(u, s), q=expo))
                hit = True
        if not hit and n * n - abs(e) * n >= q_cutoff:
            break
        n += 1
    lhs = TruncatedSeries.poly(terms).truncated(q_cutoff, cap)
    lhs = TruncatedSeries(lhs.terms, lhs.q_floor, q_cutoff, cap)

    from .series import qproduct

    rhs = qproduct(Monomial(cneg(u), 0, 0, 0, e + 1), q_cutoff, cap, step=2)
    rhs = rhs * qproduct(Monomial(cneg(unit_pow(u, -1)), 0, 0, 0, 1 - e), q_cutoff, cap, step=2)
    rhs = rhs * qproduct(mono(1, q=2), q_cutoff, cap, step=2)
    return lhs, rhs


def q_gauss_sides(n: int, q_cutoff: int, var_cap: int | None = None
                  ) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the two-variable summation lemma, for any integer n.

    The left side sums over N >= |n|; for n < 0 the summand is assembled
    through the negative-index product conversions, which reduce it to the
    reflected positive form.
    """
    cap = q_cutoff if var_cap is None else var_cap
    m = abs(n)
    poch_ab_m = TruncatedSeries.one(q_cutoff, cap)
    for j in range(1, m + 1):
        poch_ab_m = poch_ab_m * TruncatedSeries.poly([mono(1), mono(1, a=1, q=j)])
        poch_ab_m = poch_ab_m * TruncatedSeries.poly([mono(1), mono(1, b=1, q=j)])
    lhs = TruncatedSeries.zero(q_cutoff, cap)
    running = TruncatedSeries.one(q_cutoff, cap)  # prod_{j=m}^{N-1} (a+q^j)(b+q^j)
    inv_lo = TruncatedSeries.one(q_cutoff, cap)  # 1/(q)_{N-m}
    inv_hi = inv_qpoch(2 * m, q_cutoff, cap)  # 1/(q)_{N+m}
    big_n = m
    while big_n - m < q_cutoff:
        term = (poch_ab_m * running * inv_lo * inv_hi).times_monomial(mono(1, q=big_n - m))
        lhs = lhs + term
        big_n += 1
        j = big_n - 1
        running = running * TruncatedSeries.poly([mono(1, a=1), mono(1, q=j)])
        running = running * TruncatedSeries.poly([mono(1, b=1), mono(1, q=j)])
        inv_lo = inv_lo * geometric(mono(1, q=big_n - m), q_cutoff, cap)
        inv_hi = inv_hi * geometric(mono(1, q=big_n + m), q_cutoff, cap)
    rhs = TruncatedSeries.one(q_cutoff, cap)
    for j in range(1, q_cutoff):
        rhs = rhs * TruncatedSeries.poly([mono(1), mono(1, a=1, q=j)])
        rhs = rhs * TruncatedSeries.poly([mono(1), mono(1, b=1, q=j)])
        rhs = rhs * geometric(mono(1, q=j), q_cutoff, cap)
        rhs = rhs * geometric(mono(1, a=1, b=1, q=j), q_cutoff, cap)
    return lhs, rhs


# ------------------------------------------------------------------ Bailey machinery


@dataclass(frozen=True)
class BaileyPair:
    """A pair of alpha/beta sequences relative to base q.

    The defining relation beta_n = sum_r alpha_r / ((q)_{n-r} (q^2; q)_{n+r})
    is verified at construction for every stored index.
    """

    label: str
    alphas: tuple[TruncatedSeries, ...]
    betas: tuple[TruncatedSeries, ...]
    q_cutoff: int

    def depth(self) -> int:
        return len(self.alphas) - 1


def _verify_bailey(pair: BaileyPair) -> None:
    c, cap = pair.q_cutoff, pair.q_cutoff
    for n in range(pair.depth() + 1):
        acc = TruncatedSeries.zero(c, cap)
        for r in range(n + 1):
            term = pair.alphas[r] * inv_qpoch(n - r, c, cap)
            term = term * inv_qfactors(tuple(range(2, n + r + 2)), c, cap)
            acc = acc + term
        bad = acc.first_mismatch(pair.betas[n])
        if bad is not None:
            raise ValueError(f"pair {pair.label}: defining relation fails at n={n}: {bad}")


def _make_pair(label: str, valuation, n_max: int, q_cutoff: int) -> BaileyPair:
    from .series import INF

    alphas = []
    for n in range(n_max + 1):
        sign = -1 if n % 2 else 1
        monos = [mono(sign, q=valuation(n) + l) for l in range(2 * n + 1)]
        alphas.append(TruncatedSeries.poly(monos).truncated(q_cutoff))
    step = 2 if label == "E3" else 1
    # Pure q-series: leave the variable cap unconstrained so the pair can
    # feed computations at any cap.
    betas = [inv_qpoch(n, q_cutoff, INF, step=step) for n in range(n_max + 1)]
    pair = BaileyPair(label, tuple(alphas), tuple(betas), q_cutoff)
    _verify_bailey(pair)
    return pair


def bailey_pair_b3(n_max: int, q_cutoff: int) -> BaileyPair:
    """Slater's pair B3: alpha_n = (-1)^n q^(n(3n+1)/2) (1-q^(2n+1))/(1-q),
    beta_n = 1/(q)_n."""
    return _make_pair("B3", lambda n: n * (3 * n + 1) // 2, n_max, q_cutoff)


def bailey_pair_e3(n_max: int, q_cutoff: int) -> BaileyPair:
    """Slater's pair E3: alpha_n = (-1)^n q^(n^2) (1-q^(2n+1))/(1-q),
    beta_n = 1/(q^2;q^2)_n."""
    return _make_pair("E3", lambda n: n * n, n_max, q_cutoff)


def _nested_multisum(depth: int, i_level: int, beta, q_cutoff: int, cap: int) -> TruncatedSeries:
    """``sum_{n_1 >= ... >= n_depth >= 0}`` of the standard lattice summand.

    The exponent is n_1 + n_2^2 + ... + n_depth^2 plus n_j for every level
    j > i_level; between levels the difference Pochhammer inverses appear,
    and the innermost index feeds ``beta``.
    """
    total = TruncatedSeries.zero(q_cutoff, cap)

    def rec(level: int, prev: int, expo: int, partial: TruncatedSeries):
        nonlocal total
        if level > depth:
            total = total + partial * beta(prev)
            return
        for nj in range(prev, -1, -1):
            e = nj * nj + (nj if level > i_level else 0)
            if expo + e >= q_cutoff:
                continue
            rec(level + 1, nj, expo + e,
                partial.times_monomial(mono(1, q=e)) * inv_qpoch(prev - nj, q_cutoff, cap))

    n1 = 0
    while True:
        e1 = n1 + (n1 if 1 > i_level else 0)
        if e1 >= q_cutoff:
            break
        rec(2, n1, e1, f_poly(n1, q_cutoff, cap).times_monomial(mono(1, q=e1)))
        n1 += 1
    return total


def bailey_lattice_sides(pair: BaileyPair, k: int, i: int, q_cutoff: int,
                         var_cap: int | None = None
                         ) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the lattice transform for a pair relative to q.

    The k = 0 case degenerates to prefactor times beta_0 on both sides by
    the empty-sum conventions.
    """
    if not (0 <= i <= k):
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    cap = q_cutoff if var_cap is None else var_cap
    prefactor = TruncatedSeries.one(q_cutoff, cap)
    for j in range(1, q_cutoff):
        prefactor = prefactor * one_minus(mono(1, a=1, b=1, q=j))
        prefactor = prefactor * geometric(mono(1, q=j), q_cutoff, cap)
        prefactor = prefactor * geometric(mono(-1, a=1, q=j), q_cutoff, cap)
        prefactor = prefactor * geometric(mono(-1, b=1, q=j), q_cutoff, cap)
    if k == 0:
        lhs = prefactor * pair.betas[0]
        return lhs, lhs

    if k == 1:
        needed = q_cutoff - 1
    else:
        needed = 0
        while needed * needed < q_cutoff:
            needed += 1
    if pair.depth() < needed:
        raise ValueError(f"pair depth {pair.depth()} insufficient: need n_max >= {needed}")

    lhs = prefactor * _nested_multisum(k, i, lambda m: pair.betas[m], q_cutoff, cap)

    inv_q_inf_sq = TruncatedSeries.one(q_cutoff, cap)
    for j in range(1, q_cutoff):
        g = geometric(mono(1, q=j), q_cutoff, cap)
        inv_q_inf_sq = inv_q_inf_sq * g * g
    rhs = inv_q_inf_sq * pair.alphas[0]
    one_minus_q = one_minus(mono(1, q=1))
    inv_chain = TruncatedSeries.one(q_cutoff, cap)
    n = 1
    while True:
        # Alpha valuations are nonnegative, so these bound both branches.
        base = (n * n - n) * (i - 1) + i * n
        b1 = base + (n * n + n) * (k - i)
        b2 = base + ((n - 1) ** 2 + (n - 1)) * (k - i) + 2 * n - 1
        if min(b1, b2) >= q_cutoff:
            break
        if n > pair.depth():
            raise ValueError(f"pair depth {pair.depth()} insufficient for the alpha side")
        inv_chain = inv_chain * geometric(mono(-1, a=1, q=n), q_cutoff, cap)
        inv_chain = inv_chain * geometric(mono(-1, b=1, q=n), q_cutoff, cap)
        outer = f_poly(n, q_cutoff, cap) * inv_chain * one_minus_q
        outer = outer.times_monomial(mono(1, q=base))
        branch1 = pair.alphas[n] * geometric(mono(1, q=2 * n + 1), q_cutoff, cap)
        branch1 = branch1.times_monomial(mono(1, q=(n * n + n) * (k - i)))
        branch2 = pair.alphas[n - 1] * geometric(mono(1, q=2 * n - 1), q_cutoff, cap)
        branch2 = branch2.times_monomial(mono(-1, q=((n - 1) ** 2 + (n - 1)) * (k - i) + 2 * n - 1))
        rhs = rhs + inv_q_inf_sq * (outer * (branch1 + branch2))
        n += 1
    return lhs, rhs


def multisum_admissible(k: int, i: int, q_cutoff: int, var_cap: int | None = None) -> TruncatedSeries:
    """Generating function for the Durfee-admissible family, as a multisum."""
    check_ki(k, i)
    cap = q_cutoff if var_cap is None else var_cap
    return _nested_multisum(k - 1, i - 1, lambda m: inv_qpoch(m, q_cutoff, cap), q_cutoff, cap)


def multisum_self_conjugate(k: int, i: int, q_cutoff: int, var_cap: int | None = None) -> TruncatedSeries:
    """Generating function for the self-conjugate family, as a multisum."""
    check_ki(k, i)
    cap = q_cutoff if var_cap is None else var_cap
    return _nested_multisum(k - 1, i - 1, lambda m: inv_qpoch(m, q_cutoff, cap, step=2), q_cutoff, cap)
