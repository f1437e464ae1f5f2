"""Truncated formal power series over the Gaussian integers in a, b, x, q.

A :class:`TruncatedSeries` stores monomials ``c * a^da * b^db * x^dx * q^dq``
with exact :mod:`~qpair.gaussint` coefficients.  The degrees in a, b, x are
nonnegative and capped by ``var_cap``; the q-degree may be negative (Laurent
support).  The window semantics are:

* the series is identically zero below ``q_floor`` (a true valuation bound),
* it is stored exactly for ``q_floor <= dq < q_cutoff``,
* nothing is claimed at or above ``q_cutoff``.

All operations are pure; instances are immutable by convention and can be
shared freely.  Window bookkeeping follows the rules

* ``add``:  floor ``min``, cutoff ``min``;
* ``mul``:  floor ``f1+f2``, cutoff ``min(c1+f2, c2+f1)``,

so no retained coefficient is ever wrong.  Exact polynomials carry the
sentinel cutoff :data:`INF` and combine with any finite window.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple

from .gaussint import Coeff, GaussInt, as_pair, cadd, cmul, cneg, is_unit, unit_inverse, unit_pow

INF = 10**9

Key = tuple[int, int, int, int]


class Monomial(NamedTuple):
    """A single term ``coeff * a^a * b^b * x^x * q^q`` (q may be negative)."""

    coeff: Coeff
    a: int = 0
    b: int = 0
    x: int = 0
    q: int = 0


def mono(coeff: Coeff = 1, a: int = 0, b: int = 0, x: int = 0, q: int = 0) -> Monomial:
    return Monomial(coeff, a, b, x, q)


def _sat_add(u: int, v: int) -> int:
    if u >= INF or v >= INF:
        return INF
    if u <= -INF or v <= -INF:
        return -INF
    return u + v


def _combine_caps(c1: int, c2: int) -> int:
    """Caps are compatible when equal or when either is uncapped (INF)."""
    if c1 == c2:
        return c1
    if c1 >= INF:
        return c2
    if c2 >= INF:
        return c1
    raise ValueError(f"var_cap mismatch: {c1} vs {c2}")


class TruncatedSeries:
    __slots__ = ("terms", "q_floor", "q_cutoff", "var_cap")

    def __init__(self, terms: dict[Key, Coeff], q_floor: int, q_cutoff: int, var_cap: int):
        if q_cutoff <= q_floor:
            raise ValueError(f"empty window: q_floor={q_floor}, q_cutoff={q_cutoff}")
        self.terms = terms
        self.q_floor = q_floor
        self.q_cutoff = q_cutoff
        self.var_cap = var_cap

    # ---------------------------------------------------------------- constructors

    @classmethod
    def zero(cls, q_cutoff: int, var_cap: int, q_floor: int = 0) -> "TruncatedSeries":
        return cls({}, q_floor, q_cutoff, var_cap)

    @classmethod
    def one(cls, q_cutoff: int, var_cap: int) -> "TruncatedSeries":
        return cls({(0, 0, 0, 0): 1}, 0, q_cutoff, var_cap)

    @classmethod
    def poly(cls, monomials: Iterable[Monomial]) -> "TruncatedSeries":
        """An exact polynomial: trusted at every q-degree (cutoff INF)."""
        terms: dict[Key, Coeff] = {}
        for c, da, db, dx, dq in monomials:
            if min(da, db, dx) < 0:
                raise ValueError("negative degree in a/b/x is not supported")
            key = (da, db, dx, dq)
            acc = cadd(terms.get(key, 0), c)
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        floor = min((k[3] for k in terms), default=0)
        return cls(terms, floor, INF, INF)

    @classmethod
    def monomial(cls, m: Monomial) -> "TruncatedSeries":
        return cls.poly([m])

    # ---------------------------------------------------------------- basics

    def is_zero(self) -> bool:
        return not self.terms

    def min_q_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(k[3] for k in self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.terms == other.terms
            and self.q_floor == other.q_floor
            and self.q_cutoff == other.q_cutoff
            and self.var_cap == other.var_cap
        )

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.q_floor, self.q_cutoff, self.var_cap))

    def __repr__(self) -> str:
        n = len(self.terms)
        return f"<TruncatedSeries {n} terms, window [{self.q_floor},{self.q_cutoff}), cap {self.var_cap}>"

    # ---------------------------------------------------------------- arithmetic

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = _combine_caps(self.var_cap, other.var_cap)
        floor = min(self.q_floor, other.q_floor)
        cutoff = min(self.q_cutoff, other.q_cutoff)
        terms = {}
        for src in (self.terms, other.terms):
            for key, c in src.items():
                if key[3] >= cutoff or key[0] > cap or key[1] > cap or key[2] > cap:
                    continue
                acc = cadd(terms.get(key, 0), c)
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
        return TruncatedSeries(terms, floor, cutoff, cap)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries({k: cneg(c) for k, c in self.terms.items()}, self.q_floor, self.q_cutoff, self.var_cap)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = _combine_caps(self.var_cap, other.var_cap)
        floor = _sat_add(self.q_floor, other.q_floor)
        cutoff = min(_sat_add(self.q_cutoff, other.q_floor), _sat_add(other.q_cutoff, self.q_floor))
        lhs, rhs = self.terms, other.terms
        if len(lhs) > len(rhs):
            lhs, rhs = rhs, lhs
        terms: dict[Key, Coeff] = {}
        get = terms.get
        for (a1, b1, x1, q1), c1 in lhs.items():
            for (a2, b2, x2, q2), c2 in rhs.items():
                dq = q1 + q2
                if dq >= cutoff:
                    continue
                da = a1 + a2
                db = b1 + b2
                dx = x1 + x2
                if da > cap or db > cap or dx > cap:
                    continue
                key = (da, db, dx, dq)
                acc = cadd(get(key, 0), cmul(c1, c2))
                if acc:
                    terms[key] = acc
                else:
                    del terms[key]
        return TruncatedSeries(terms, floor, cutoff, cap)

    def times_monomial(self, m: Monomial) -> "TruncatedSeries":
        """Fast path for multiplication by a single monomial."""
        c0, da0, db0, dx0, dq0 = m
        if not c0:
            return TruncatedSeries.zero(_sat_add(self.q_cutoff, dq0), self.var_cap, _sat_add(self.q_floor, dq0))
        cap = self.var_cap
        cutoff = _sat_add(self.q_cutoff, dq0)
        floor = _sat_add(self.q_floor, dq0)
        terms = {}
        for (a, b, x, q), c in self.terms.items():
            da, db, dx, dq = a + da0, b + db0, x + dx0, q + dq0
            if dq >= cutoff or da > cap or db > cap or dx > cap:
                continue
            terms[(da, db, dx, dq)] = cmul(c, c0)
        return TruncatedSeries(terms, floor, cutoff, cap)

    def truncated(self, q_cutoff: int | None = None, var_cap: int | None = None) -> "TruncatedSeries":
        """Restrict to a smaller window or cap (never enlarges)."""
        cutoff = self.q_cutoff if q_cutoff is None else min(self.q_cutoff, q_cutoff)
        cap = self.var_cap if var_cap is None else min(self.var_cap, var_cap)
        terms = {
            k: c
            for k, c in self.terms.items()
            if k[3] < cutoff and k[0] <= cap and k[1] <= cap and k[2] <= cap
        }
        return TruncatedSeries(terms, min(self.q_floor, cutoff - 1), cutoff, cap)

    def invert(self, q_cutoff: int | None = None) -> "TruncatedSeries":
        """Multiplicative inverse up to the cutoff.

        Requires the q-degree-0 layer to be a single constant term that is a
        unit in the Gaussian integers, and no terms below q-degree 0.
        """
        cutoff = self.q_cutoff if q_cutoff is None else min(self.q_cutoff, q_cutoff)
        if cutoff >= INF:
            raise ValueError("inverting an exact polynomial requires an explicit q_cutoff")
        layers: dict[int, dict[tuple[int, int, int], Coeff]] = {}
        for (a, b, x, q), c in self.terms.items():
            if q < cutoff:
                layers.setdefault(q, {})[(a, b, x)] = c
        low = min(layers) if layers else 0
        if low < 0:
            raise ValueError(f"cannot invert: nonzero terms below q^0 (lowest at q^{low})")
        zero_layer = layers.get(0, {})
        const = zero_layer.get((0, 0, 0), 0)
        if len(zero_layer) != 1 or not is_unit(const):
            raise ValueError(f"cannot invert: constant term {const!r} is not a Gaussian unit "
                             f"(q^0 layer has {len(zero_layer)} terms)")
        u_inv = unit_inverse(const)
        cap = self.var_cap
        inv_layers: dict[int, dict[tuple[int, int, int], Coeff]] = {0: {(0, 0, 0): u_inv}}
        for g in range(1, cutoff):
            acc: dict[tuple[int, int, int], Coeff] = {}
            for h, t_layer in inv_layers.items():
                s_layer = layers.get(g - h)
                if not s_layer:
                    continue
                for (a1, b1, x1), c1 in t_layer.items():
                    for (a2, b2, x2), c2 in s_layer.items():
                        da, db, dx = a1 + a2, b1 + b2, x1 + x2
                        if da > cap or db > cap or dx > cap:
                            continue
                        key = (da, db, dx)
                        val = cadd(acc.get(key, 0), cmul(c1, c2))
                        if val:
                            acc[key] = val
                        else:
                            del acc[key]
            layer_g = {}
            for key, val in acc.items():
                v = cneg(cmul(u_inv, val))
                if v:
                    layer_g[key] = v
            if layer_g:
                inv_layers[g] = layer_g
        terms = {}
        for g, layer in inv_layers.items():
            for (a, b, x), c in layer.items():
                terms[(a, b, x, g)] = c
        return TruncatedSeries(terms, 0, cutoff, cap)

    # ---------------------------------------------------------------- queries

    def coeff(self, s_deg: int, t_deg: int, m_deg: int, n_deg: int) -> Coeff:
        """Exact coefficient of ``a^s b^t x^m q^n``.

        Queries at or above the cutoff error (that region is unknown, never
        silently zero).  Below ``q_floor`` the series is identically zero by
        the valuation bound, so 0 is returned exactly.
        """
        if n_deg >= self.q_cutoff:
            raise ValueError(
                f"q-degree {n_deg} at or above the trusted cutoff {self.q_cutoff}"
            )
        if max(s_deg, t_deg, m_deg) > self.var_cap:
            raise ValueError(f"variable degree above var_cap={self.var_cap}")
        return self.terms.get((s_deg, t_deg, m_deg, n_deg), 0)

    def coeff_q(self, n_deg: int) -> Coeff:
        """Coefficient of ``q^n`` for series free of a, b, x."""
        return self.coeff(0, 0, 0, n_deg)

    def first_mismatch(self, other: "TruncatedSeries") -> tuple[Key, Coeff, Coeff] | None:
        """First differing coefficient (canonical order) on the common window.

        Both series are known exactly below their cutoffs (and zero below
        their floors), so the comparison covers every q-degree below the
        smaller cutoff, at variable degrees up to the smaller cap.
        """
        cutoff = min(self.q_cutoff, other.q_cutoff)
        cap = min(self.var_cap, other.var_cap)
        keys = set(self.terms) | set(other.terms)
        for key in sorted(keys, key=lambda k: (k[3], k[0], k[1], k[2])):
            if key[3] >= cutoff or key[0] > cap or key[1] > cap or key[2] > cap:
                continue
            lhs = self.terms.get(key, 0)
            rhs = other.terms.get(key, 0)
            if lhs != rhs:
                return key, lhs, rhs
        return None

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        return self.first_mismatch(other) is None

    # ---------------------------------------------------------------- substitutions

    def shift_x(self, e: int = 1) -> "TruncatedSeries":
        """Replace x by ``x * q**e`` (e >= 0): each term gains ``q**(e*dx)``."""
        if e < 0:
            raise ValueError("shift_x requires a nonnegative shift")
        if e == 0:
            return self
        cutoff = self.q_cutoff
        terms = {}
        for (a, b, x, q), c in self.terms.items():
            dq = q + e * x
            if dq < cutoff:
                terms[(a, b, x, dq)] = c
        return TruncatedSeries(terms, self.q_floor, cutoff, self.var_cap)

    def specialize(
        self,
        sub_a: tuple[Coeff, int] | None = None,
        sub_b: tuple[Coeff, int] | None = None,
        sub_x: tuple[Coeff, int] | None = None,
        q_power: int = 1,
        slack: dict[str, int] | None = None,
    ) -> "TruncatedSeries":
        """Substitute variables by units times q-powers, and q by ``q**q_power``.

        Each ``sub_*`` is ``None`` (leave the variable alone) or a pair
        ``(u, e)`` mapping the variable to ``u * q**e`` with ``u`` a Gaussian
        unit or 0.  The result is Laurent-truncated at the provable cutoff.

        A substitution with ``e < 0`` needs a structural guarantee to remain
        provable: ``slack[v]`` asserts that every monomial of the underlying
        (untruncated) series satisfies ``deg_v <= deg_q + slack[v]``, and the
        input must have been built with ``var_cap >= q_cutoff + slack[v]`` so
        that nothing below the q-cutoff was ever clipped by the cap.
        """
        if q_power < 1:
            raise ValueError("q_power must be a positive integer")
        subs: list[tuple[int, str, Coeff, int]] = []
        for idx, name, sub in ((0, "a", sub_a), (1, "b", sub_b), (2, "x", sub_x)):
            if sub is None:
                continue
            u, e = sub
            if u != 0 and not is_unit(u):
                raise ValueError(f"substitution for {name} must be a Gaussian unit or 0, got {u!r}")
            subs.append((idx, name, u, e))

        if self.q_cutoff >= INF:
            # Exact polynomial: nothing is missing, every image is exact.
            provable = INF
        else:
            drop = 0
            slack_total = 0
            slack = slack or {}
            for _, name, u, e in subs:
                if u == 0 or e >= 0:
                    continue
                if name not in slack:
                    raise ValueError(
                        f"substituting {name} -> u*q^{e} needs slack[{name!r}] "
                        f"(a bound with deg_{name} <= deg_q + slack)"
                    )
                sigma = slack[name]
                need = self.q_cutoff + sigma
                if self.var_cap < need:
                    raise ValueError(
                        f"var_cap too small for the q-shift on {name}: need var_cap >= {need}, "
                        f"got {self.var_cap}"
                    )
                drop += -e
                slack_total += -e * sigma
            if drop >= q_power:
                raise ValueError(
                    f"total negative q-shift {drop} absorbs q_power {q_power}: "
                    "no coefficient is provable at any cutoff"
                )
            provable = (q_power - drop) * self.q_cutoff - slack_total

        terms: dict[Key, Coeff] = {}
        for (da, db, dx, dq), c in self.terms.items():
            degs = [da, db, dx]
            new_q = q_power * dq
            coeff = c
            dead = False
            for idx, _name, u, e in subs:
                d = degs[idx]
                degs[idx] = 0
                if d == 0:
                    continue
                if u == 0:
                    dead = True
                    break
                new_q += e * d
                coeff = cmul(coeff, unit_pow(u, d))
            if dead or new_q >= provable:
                continue
            key = (degs[0], degs[1], degs[2], new_q)
            acc = cadd(terms.get(key, 0), coeff)
            if acc:
                terms[key] = acc
            else:
                del terms[key]
        if terms:
            floor = min(k[3] for k in terms)
        elif provable < INF:
            floor = provable - 1
        else:
            floor = 0
        return TruncatedSeries(terms, floor, provable, self.var_cap)

    # ---------------------------------------------------------------- serialization

    def sorted_terms(self) -> list[tuple[Key, Coeff]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][3], kv[0][0], kv[0][1], kv[0][2]))

    def to_obj(self) -> dict:
        out = []
        for (a, b, x, q), c in self.sorted_terms():
            re, im = as_pair(c)
            out.append({"re": re, "im": im, "a": a, "b": b, "x": x, "q": q})
        return {"q_floor": self.q_floor, "q_cutoff": self.q_cutoff, "var_cap": self.var_cap, "terms": out}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_obj(cls, obj: dict) -> "TruncatedSeries":
        terms: dict[Key, Coeff] = {}
        for t in obj["terms"]:
            c: Coeff = t["re"] if t["im"] == 0 else GaussInt(t["re"], t["im"])
            if c:
                terms[(t["a"], t["b"], t["x"], t["q"])] = c
        return cls(terms, obj["q_floor"], obj["q_cutoff"], obj["var_cap"])


# -------------------------------------------------------------------- products


def geometric(base: Monomial, q_cutoff: int, var_cap: int) -> TruncatedSeries:
    """``1/(1 - base)`` as the geometric series, for base of positive q-degree."""
    c, a, b, x, q = base
    if q <= 0:
        raise ValueError("geometric inverse needs a base of positive q-degree")
    terms: dict[Key, Coeff] = {}
    m = 0
    coeff: Coeff = 1
    while m * q < q_cutoff and m * max(a, b, x, 0) <= var_cap:
        terms[(m * a, m * b, m * x, m * q)] = coeff
        m += 1
        coeff = cmul(coeff, c)
    return TruncatedSeries(terms, 0, q_cutoff, var_cap)


def one_minus(base: Monomial) -> TruncatedSeries:
    """The exact polynomial ``1 - base``."""
    return TruncatedSeries.poly([mono(1), Monomial(cneg(base.coeff), base.a, base.b, base.x, base.q)])


def pochhammer(base: Monomial, n: int, q_cutoff: int = INF, var_cap: int = INF) -> TruncatedSeries:
    """The finite product ``(c; q)_n = prod_{j<n} (1 - c q^j)``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = TruncatedSeries.one(q_cutoff, var_cap) if q_cutoff < INF else TruncatedSeries.poly([mono(1)])
    for j in range(n):
        out = out * one_minus(Monomial(base.coeff, base.a, base.b, base.x, base.q + j))
    return out


def qproduct(base: Monomial, q_cutoff: int, var_cap: int, step: int = 1) -> TruncatedSeries:
    """``prod_{j>=0} (1 - c q^(step*j))`` truncated; factors beyond the cutoff are 1.

    Internal helper: allows bases of nonpositive q-degree (Laurent factors),
    as long as ``step >= 1`` so that only finitely many factors matter.
    """
    if step < 1:
        raise ValueError("qproduct needs step >= 1")
    out = TruncatedSeries.one(q_cutoff, var_cap)
    j = 0
    while base.q + step * j < q_cutoff:
        out = out * one_minus(Monomial(base.coeff, base.a, base.b, base.x, base.q + step * j))
        j += 1
    return out


def pochhammer_inf(base: Monomial, q_cutoff: int, var_cap: int | None = None, step: int = 1) -> TruncatedSeries:
    """``(c; q^step)_inf`` truncated at ``q_cutoff``.

    The base must have positive q-degree so the product stabilizes.
    """
    if base.q <= 0:
        raise ValueError(f"pochhammer_inf needs a base of positive q-degree, got q^{base.q}")
    return qproduct(base, q_cutoff, q_cutoff if var_cap is None else var_cap, step=step)


def q_binomial(n: int, k: int, q_cutoff: int) -> TruncatedSeries:
    """Gaussian binomial coefficient as a polynomial in q (zero series if k > n)."""
    cap = q_cutoff
    if k < 0 or k > n:
        return TruncatedSeries.zero(q_cutoff, cap)
    row: list[TruncatedSeries] = [TruncatedSeries.one(q_cutoff, cap)]
    for m in range(1, n + 1):
        new = [TruncatedSeries.one(q_cutoff, cap)]
        for j in range(1, m):
            new.append(row[j - 1] + row[j].times_monomial(mono(1, q=j)))
        new.append(TruncatedSeries.one(q_cutoff, cap))
        row = new
    return row[k]
