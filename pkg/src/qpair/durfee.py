"""Durfee-square machinery on Frobenius symbols.

Everything here works through the row decomposition of
:mod:`qpair.frobenius`: the bottom row's associated partition is conjugated
and its successive Durfee squares drive admissibility, the symbol
conjugation that swaps the two small-part regions, and the fixed-point
families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counts import BoundExceededError, CountTable
from .frobenius import FrobeniusSymbol, joichi_stanton, joichi_stanton_inverse, symbols_of
from .overpartitions import DEFAULT_BOUND, check_ki

Partition = tuple[int, ...]


def conjugate(parts) -> Partition:
    parts = tuple(parts)
    if not parts:
        return ()
    out = []
    for r in range(1, parts[0] + 1):
        out.append(sum(1 for p in parts if p >= r))
    return tuple(out)


def durfee_size(parts) -> int:
    """Side of the largest upper-left-justified square in the diagram."""
    d = 0
    for idx, p in enumerate(parts, start=1):
        if p >= idx:
            d = idx
        else:
            break
    return d


@dataclass(frozen=True)
class DurfeeDecomposition:
    """Successive squares with, for each, the rows' overhang to its right."""

    sizes: tuple[int, ...]
    rights: tuple[Partition, ...]

    def reassemble(self) -> Partition:
        rows: list[int] = []
        for d, right in zip(self.sizes, self.rights):
            padded = right + (0,) * (d - len(right))
            rows.extend(d + r for r in padded)
        return tuple(rows)


def durfee_squares(parts) -> DurfeeDecomposition:
    """Peel successive Durfee squares until nothing remains."""
    rest = tuple(int(p) for p in parts if p > 0)
    sizes = []
    rights = []
    while rest:
        d = durfee_size(rest)
        sizes.append(d)
        rights.append(tuple(p - d for p in rest[:d] if p > d))
        rest = rest[d:]
    return DurfeeDecomposition(tuple(sizes), tuple(rights))


def successive_sizes(parts, count: int) -> tuple[int, ...]:
    """The first ``count`` successive Durfee square sizes, zero-padded."""
    sizes = durfee_squares(parts).sizes
    return (sizes + (0,) * count)[:count]


def _remove_parts(parts: Partition, removals) -> Partition | None:
    """Remove one occurrence of each requested value (zeros are free)."""
    out = list(parts)
    for v in removals:
        if v == 0:
            continue
        if v in out:
            out.remove(v)
        else:
            return None
    return tuple(out)


def _square_tuples(n2_max: int, depth: int):
    """Weakly decreasing tuples (n2 >= ... >= n_{k-1} >= 0) of given depth."""
    if depth == 0:
        yield ()
        return
    for first in range(n2_max, -1, -1):
        for rest in _square_tuples(first, depth - 1):
            yield (first,) + rest


def _lam2_prime(f: FrobeniusSymbol) -> Partition:
    assoc, _marks = joichi_stanton(f.bottom)
    return conjugate(assoc)


def _rebuild_with_lam2_prime(f: FrobeniusSymbol, lam2p: Partition) -> FrobeniusSymbol:
    _assoc, marks = joichi_stanton(f.bottom)
    assoc = conjugate(lam2p)
    assoc = assoc + (0,) * (f.columns - len(assoc))
    return FrobeniusSymbol(f.top, joichi_stanton_inverse(assoc, marks))


def is_ki_admissible(f: FrobeniusSymbol, k: int, i: int, sequential: bool = False) -> bool:
    """Whether the bottom row's conjugated associated partition is built
    from a partition with at most k-2 Durfee squares by inserting one part
    of each designated square size (sizes taken from the inner partition;
    the 0th square size is the column count).

    The check is satisfiability over candidate square-size tuples: remove
    the would-be inserted parts and demand that the residue's successive
    squares reproduce the tuple exactly with nothing left below.
    """
    check_ki(k, i)
    lam2p = _lam2_prime(f)
    if sequential:
        return _seq_admissible(lam2p, f.columns, k, i)
    n1 = f.columns
    for tup in _square_tuples(n1, k - 2):
        removals = list(tup[max(i, 2) - 2: k - 1])
        if i == 1:
            removals.append(n1)
        nu = _remove_parts(lam2p, removals)
        if nu is None:
            continue
        dec = durfee_squares(nu)
        if len(dec.sizes) > k - 2:
            continue
        if successive_sizes(nu, k - 2) == tup:
            return True
    return False


def _seq_admissible(lam2p: Partition, n1: int, k: int, i: int) -> bool:
    """Alternative reading: insertions peeled one at a time, sizes recomputed."""
    def peel(parts: Partition, j: int) -> bool:
        if j > k - 1:
            return len(durfee_squares(parts).sizes) <= k - 2
        candidates = {n1} if j == 1 else set(parts) | {0}
        for v in candidates:
            rest = _remove_parts(parts, [v])
            if rest is None:
                continue
            expected = n1 if j == 1 else successive_sizes(rest, k - 1)[j - 2]
            if v == expected and peel(rest, j + 1):
                return True
        return False

    return peel(lam2p, i)


def conjugation_regions(f: FrobeniusSymbol, k: int) -> tuple[Partition, Partition] | None:
    """The two swap regions, or None when the conjugation is the identity.

    G2 is the part of the conjugated bottom partition below its first k-2
    successive squares; G1 holds the parts of the conjugated top partition
    at most the (k-2)nd square's size.  For k = 2 the regions are the whole
    partitions (the 0th square has the column count as its size).
    """
    if k < 2:
        raise ValueError("need k >= 2")
    assoc1, _ = joichi_stanton(f.top)
    lam1p = conjugate(assoc1)
    lam2p = _lam2_prime(f)
    if k == 2:
        return lam1p, lam2p
    dec = durfee_squares(lam2p)
    if len(dec.sizes) < k - 2:
        return None
    rows_consumed = sum(dec.sizes[: k - 2])
    cut = dec.sizes[k - 3]
    g2 = lam2p[rows_consumed:]
    g1 = tuple(p for p in lam1p if p <= cut)
    return g1, g2


def k_conjugate(f: FrobeniusSymbol, k: int) -> FrobeniusSymbol:
    """Swap the two regions and reassemble; identity when the bottom
    partition has fewer than k-2 Durfee squares."""
    regions = conjugation_regions(f, k)
    if regions is None:
        return f
    g1, g2 = regions
    assoc1, marks1 = joichi_stanton(f.top)
    lam1p = conjugate(assoc1)
    lam2p = _lam2_prime(f)
    if k == 2:
        new1p, new2p = g2, g1
    else:
        cut = durfee_squares(lam2p).sizes[k - 3]
        rows_consumed = sum(durfee_squares(lam2p).sizes[: k - 2])
        new1p = tuple(p for p in lam1p if p > cut) + g2
        new2p = lam2p[:rows_consumed] + g1
    new_assoc1 = conjugate(new1p)
    new_assoc1 = new_assoc1 + (0,) * (f.columns - len(new_assoc1))
    new_top = joichi_stanton_inverse(new_assoc1, marks1)
    out = _rebuild_with_lam2_prime(FrobeniusSymbol(new_top, f.bottom), new2p)
    return out


def is_self_k_conjugate(f: FrobeniusSymbol, k: int) -> bool:
    return k_conjugate(f, k) == f


def is_self_ki_conjugate(f: FrobeniusSymbol, k: int, i: int) -> bool:
    """Whether f arises from a self-conjugate symbol by the designated
    part insertions into the conjugated bottom partition."""
    check_ki(k, i)
    if i == k:
        return is_self_k_conjugate(f, k)
    lam2p = _lam2_prime(f)
    n1 = f.columns
    for tup in _square_tuples(n1, k - 2):
        removals = list(tup[max(i, 2) - 2: k - 1])
        if i == 1:
            removals.append(n1)
        reduced = _remove_parts(lam2p, removals)
        if reduced is None:
            continue
        if successive_sizes(reduced, k - 2) != tup:
            continue
        candidate = _rebuild_with_lam2_prime(f, reduced)
        if is_self_k_conjugate(candidate, k):
            return True
    return False


def count_admissible(k: int, i: int, n_max: int, bound: int | None = None) -> CountTable:
    """Table of (k, i)-admissible symbols by (s, t, n)."""
    return _count_by(lambda f: is_ki_admissible(f, k, i), k, i, n_max, bound)


def count_self_conjugate(k: int, i: int, n_max: int, bound: int | None = None) -> CountTable:
    """Table of self-(k, i)-conjugate symbols by (s, t, n)."""
    return _count_by(lambda f: is_self_ki_conjugate(f, k, i), k, i, n_max, bound)


def _count_by(pred, k, i, n_max, bound) -> CountTable:
    check_ki(k, i)
    limit = DEFAULT_BOUND if bound is None else bound
    if n_max > limit:
        raise BoundExceededError(f"n_max={n_max} exceeds the enumeration bound {limit}")
    table = CountTable(n_max)
    for n in range(n_max + 1):
        for f in symbols_of(n):
            if pred(f):
                table.add(f.s_stat(), f.t_stat(), n)
    return table
