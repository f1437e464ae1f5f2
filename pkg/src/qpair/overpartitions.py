"""Overpartitions, overpartition pairs, and their frequency statistics.

An overpartition is a partition in which the first occurrence of each part
size may be overlined.  Parts here are strictly positive; rows of Frobenius
symbols (which allow zero parts) live in :mod:`qpair.frobenius` and share the
validation helper below.

This module is pure combinatorics: exhaustive enumeration and the part
frequency conditions that carve out the families counted by the series in
:mod:`qpair.hyperg`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .counts import BoundExceededError, CountTable
from .gaussint import Coeff, GaussInt, cadd, cmul, unit_pow

DEFAULT_BOUND = 14

Part = tuple[int, bool]


def canonical_parts(parts, min_part: int = 1) -> tuple[Part, ...]:
    """Sort and validate a sequence of (size, overlined) parts.

    Sizes weakly decreasing; among equal sizes the (single) overlined copy
    comes first.
    """
    out = tuple(sorted(((int(s), bool(o)) for s, o in parts), key=lambda p: (-p[0], not p[1])))
    for size, _ in out:
        if size < min_part:
            raise ValueError(f"part {size} below minimum {min_part}")
    for (s1, o1), (s2, o2) in zip(out, out[1:]):
        if s1 == s2 and o2:
            raise ValueError(f"value {s2} overlined more than once or out of order")
    return out


class Overpartition:
    __slots__ = ("parts", "plain", "over")

    def __init__(self, parts):
        self.parts = canonical_parts(parts)
        plain: dict[int, int] = {}
        over: set[int] = set()
        for size, o in self.parts:
            if o:
                over.add(size)
            else:
                plain[size] = plain.get(size, 0) + 1
        self.plain = plain
        self.over = frozenset(over)

    @classmethod
    def empty(cls) -> "Overpartition":
        return cls(())

    def weight(self) -> int:
        return sum(s for s, _ in self.parts)

    def num_parts(self) -> int:
        return len(self.parts)

    def max_part(self) -> int:
        return self.parts[0][0] if self.parts else 0

    def freq(self, j: int, overlined: bool = False) -> int:
        if overlined:
            return 1 if j in self.over else 0
        return self.plain.get(j, 0)

    def occurs(self, j: int) -> bool:
        return j in self.over or j in self.plain

    def overlined_count(self) -> int:
        return len(self.over)

    def overlined_up_to(self, j: int) -> int:
        """Number of overlined parts of size at most j."""
        return sum(1 for v in self.over if v <= j)

    def __eq__(self, other):
        return isinstance(other, Overpartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        inner = ",".join(f"{s}~" if o else str(s) for s, o in self.parts)
        return f"Overpartition({inner})"


class OverpartitionPair:
    """A pair (lam, mu) of overpartitions; weight is the sum of weights."""

    __slots__ = ("lam", "mu")

    def __init__(self, lam: Overpartition, mu: Overpartition):
        self.lam = lam
        self.mu = mu

    def weight(self) -> int:
        return self.lam.weight() + self.mu.weight()

    def num_parts(self) -> int:
        return self.lam.num_parts() + self.mu.num_parts()

    def s_stat(self) -> int:
        """Parts that are overlined-and-in-lam or non-overlined-and-in-mu."""
        return self.lam.overlined_count() + (self.mu.num_parts() - self.mu.overlined_count())

    def t_stat(self) -> int:
        """Parts in mu."""
        return self.mu.num_parts()

    def max_part(self) -> int:
        return max(self.lam.max_part(), self.mu.max_part())

    def unattached(self, j: int) -> bool:
        """j occurs, only non-overlined, and only in mu."""
        return (
            self.mu.freq(j) >= 1
            and self.lam.freq(j) == 0
            and not self.lam.freq(j, True)
            and not self.mu.freq(j, True)
        )

    def valuation(self, j: int) -> int:
        return (
            self.lam.freq(j)
            + self.lam.freq(j, True)
            + self.mu.freq(j, True)
            + (1 if self.unattached(j) else 0)
        )

    def satisfies_frequency_conditions(self, k: int, i: int) -> bool:
        """The defining conditions of the four-variable series family.

        (i) the valuation at 1 is at most i-1, and (ii) for every j,
        f_j(lam) + v_{j+1} is at most k-1.
        """
        check_ki(k, i)
        if self.valuation(1) > i - 1:
            return False
        top = self.max_part() + 1
        for j in range(1, top + 1):
            if self.lam.freq(j) + self.valuation(j + 1) > k - 1:
                return False
        return True

    def satisfies_parity_conditions(self, k: int, i: int) -> bool:
        """Frequency conditions plus the parity constraint at every tight j."""
        check_ki(k, i)
        if not self.satisfies_frequency_conditions(k, i):
            return False
        top = self.max_part() + 1
        for j in range(1, top + 1):
            fj = self.lam.freq(j)
            vj1 = self.valuation(j + 1)
            if fj + vj1 == k - 1:
                lhs = j * fj + (j + 1) * vj1
                rhs = i - 1 + self.lam.overlined_up_to(j) + self.mu.overlined_up_to(j)
                if (lhs - rhs) % 2 != 0:
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, OverpartitionPair)
            and self.lam == other.lam
            and self.mu == other.mu
        )

    def __hash__(self):
        return hash((self.lam, self.mu))

    def __repr__(self):
        return f"OverpartitionPair({self.lam!r}, {self.mu!r})"


def check_ki(k: int, i: int) -> None:
    if k < 2 or not (1 <= i <= k):
        raise ValueError(f"need k >= 2 and 1 <= i <= k, got k={k}, i={i}")


def _check_bound(n: int, bound: int | None) -> None:
    limit = DEFAULT_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {limit}")


def partitions(n: int, max_part: int | None = None):
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def overpartitions_of(n: int) -> tuple[Overpartition, ...]:
    """All overpartitions of n, in a fixed deterministic order."""
    out = []
    for p in partitions(n):
        values = sorted(set(p))
        for r in range(len(values) + 1):
            for marked in combinations(values, r):
                marked_set = set(marked)
                parts = []
                seen = set()
                for v in p:
                    if v in marked_set and v not in seen:
                        parts.append((v, True))
                        seen.add(v)
                    else:
                        parts.append((v, False))
                out.append(Overpartition(parts))
    return tuple(sorted(out, key=lambda o: o.parts))


@lru_cache(maxsize=None)
def pairs_of(n: int) -> tuple[OverpartitionPair, ...]:
    """All overpartition pairs of weight n, ordered by (|lam|, lam, mu)."""
    out = []
    for w in range(n + 1):
        for lam in overpartitions_of(w):
            for mu in overpartitions_of(n - w):
                out.append(OverpartitionPair(lam, mu))
    return tuple(out)


def enumerate_pairs(n: int, bound: int | None = None):
    """Stream every overpartition pair of weight n exactly once."""
    _check_bound(n, bound)
    yield from pairs_of(n)


def count_frequency_pairs(k: int, i: int, n_max: int, parity: bool = False,
                          bound: int | None = None) -> CountTable:
    """Table of (s, t, n) counts of pairs meeting the frequency conditions.

    With ``parity=True`` the parity constraint on tight levels is added
    (the even-moduli refinement of the family).
    """
    check_ki(k, i)
    _check_bound(n_max, bound)
    table = CountTable(n_max)
    for n in range(n_max + 1):
        for pair in pairs_of(n):
            ok = (
                pair.satisfies_parity_conditions(k, i)
                if parity
                else pair.satisfies_frequency_conditions(k, i)
            )
            if ok:
                table.add(pair.s_stat(), pair.t_stat(), n)
    return table


# ------------------------------------------------------------------ corollaries


def _v1(lam: Overpartition, two_j: int) -> int:
    """Valuation at even levels for single overpartitions."""
    j2 = two_j
    odd = j2 - 1
    unattached = (
        lam.freq(odd) >= 1
        and not lam.freq(odd, True)
        and lam.freq(j2) == 0
        and not lam.freq(j2, True)
    )
    return lam.freq(j2) + lam.freq(odd, True) + lam.freq(j2, True) + (1 if unattached else 0)


def overpartition_identity_sides(k: int, n_max: int, i: int | None = None,
                      bound: int | None = None) -> tuple[list[int], list[int]]:
    """Both sides of the overpartition identity at modulus 2k-1.

    Side A counts overpartitions into parts not divisible by 2k-1; side B
    counts overpartitions obeying the even-level frequency conditions.  The
    parameter i defaults to k, the case in which side A is an infinite
    product.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    i = k if i is None else i
    _check_bound(n_max, bound)
    mod = 2 * k - 1
    a_counts = []
    b_counts = []
    for n in range(n_max + 1):
        a = 0
        b = 0
        for lam in overpartitions_of(n):
            if all(s % mod != 0 for s, _ in lam.parts):
                a += 1
            if _v1(lam, 2) <= i - 1:
                top = lam.max_part() // 2 + 2
                if all(lam.freq(2 * j) + _v1(lam, 2 * j + 2) <= k - 1 for j in range(1, top)):
                    b += 1
        a_counts.append(a)
        b_counts.append(b)
    return a_counts, b_counts


def weighted_pair_identity_sides(k: int, n_max: int, bound: int | None = None
                      ) -> tuple[list[int], list[Coeff], list[Coeff]]:
    """The fourth-root-of-unity weighted identity at i = k-1.

    Returns (A, B_even, B_odd): A counts pairs with mu even and lam free of
    multiples of k-1; B_even is the weighted count over pairs meeting the
    parity conditions with an even number of overlined parts, weighted by
    i^(overlined in lam) * (-i)^(overlined in mu); B_odd is the weighted sum
    over the odd class, which must vanish.
    """
    if k < 3:
        raise ValueError("need k >= 3 so that i = k-1 >= 2")
    _check_bound(n_max, bound)
    iu = GaussInt(0, 1)
    a_counts: list[int] = []
    even_sums: list[Coeff] = []
    odd_sums: list[Coeff] = []
    for n in range(n_max + 1):
        a = 0
        even_sum: Coeff = 0
        odd_sum: Coeff = 0
        for pair in pairs_of(n):
            if all(s % 2 == 0 for s, _ in pair.mu.parts) and all(
                s % (k - 1) != 0 for s, _ in pair.lam.parts
            ):
                a += 1
            if pair.satisfies_parity_conditions(k, k - 1):
                o_lam = pair.lam.overlined_count()
                o_mu = pair.mu.overlined_count()
                w = cmul(unit_pow(iu, o_lam), unit_pow(GaussInt(0, -1), o_mu))
                if (o_lam + o_mu) % 2 == 0:
                    even_sum = cadd(even_sum, w)
                else:
                    odd_sum = cadd(odd_sum, w)
        a_counts.append(a)
        even_sums.append(even_sum)
        odd_sums.append(odd_sum)
    return a_counts, even_sums, odd_sums


def partitions_odd_distinct(n: int):
    """Partitions of n whose odd parts are distinct."""
    def rec(m, max_part):
        if m == 0:
            yield ()
            return
        for first in range(min(m, max_part), 0, -1):
            cap = first - 1 if first % 2 == 1 else first
            for rest in rec(m - first, cap):
                yield (first,) + rest
    yield from rec(n, n)


@lru_cache(maxsize=None)
def _odd_distinct_of(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(partitions_odd_distinct(n))


def partition_pair_identity_sides(k: int, i: int, n_max: int, bound: int | None = None
                      ) -> tuple[list[int], list[int]]:
    """Both sides of the partition-pair identity at modulus 4k-2 (i >= 2).

    Side A restricts the even parts of mu away from 0 and +-(2i-2) modulo
    4k-2; side B imposes the even-level frequency conditions.  Odd parts are
    distinct within each component on both sides.
    """
    if k < 2 or not (2 <= i <= k):
        raise ValueError(f"need k >= 2 and 2 <= i <= k, got k={k}, i={i}")
    _check_bound(n_max, bound)
    mod = 4 * k - 2
    banned = {0, (2 * i - 2) % mod, (mod - (2 * i - 2)) % mod}

    def freq(p: tuple[int, ...], v: int) -> int:
        return sum(1 for s in p if s == v)

    def v3(lam, mu, two_j):
        # An even part 2m of mu is unattached when 2m+1 occurs in neither
        # component and 2m+2 does not occur in lam (the image of the
        # "only non-overlined, only in mu" condition under the part map).
        even = two_j
        below = even - 2
        unatt = (
            below >= 2
            and freq(mu, below) >= 1
            and freq(lam, below + 1) == 0
            and freq(mu, below + 1) == 0
            and freq(lam, even) == 0
        )
        return freq(lam, even) + freq(lam, even - 1) + freq(mu, even - 1) + (1 if unatt else 0)

    a_counts = []
    b_counts = []
    for n in range(n_max + 1):
        a = 0
        b = 0
        for w in range(n + 1):
            for lam in _odd_distinct_of(w):
                for mu in _odd_distinct_of(n - w):
                    if all(s % 2 == 1 or (s % mod) not in banned for s in mu):
                        a += 1
                    if freq(lam, 1) + freq(lam, 2) + freq(mu, 1) <= i - 1:
                        top = max(lam[0] if lam else 0, mu[0] if mu else 0) // 2 + 2
                        if all(
                            freq(lam, 2 * j) + v3(lam, mu, 2 * j + 2) <= k - 1
                            for j in range(1, top)
                        ):
                            b += 1
        a_counts.append(a)
        b_counts.append(b)
    return a_counts, b_counts
