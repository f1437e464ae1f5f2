"""Generalized first-quadrant lattice paths with marked peaks.

Steps are NE, SE, S, SW, E with S/SW allowed only right after NE and E only
at height zero.  Paths start on the y-axis, end on the x-axis, and never end
with an East step (so each major index is reached by finitely many paths and
the peakless path is the unique one of major index zero).  A peak is a
vertex entered by NE and left by S (marked ``a`` or ``b``), SW (``ab``) or
SE (``one``); the major index is the sum of the peaks' x-coordinates.

The module also holds the peak-count generating functions (recurrence and
closed form) and the bijection with rank-bounded Frobenius symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .counts import BoundExceededError, CountTable
from .frobenius import FrobeniusSymbol, successive_ranks
from .overpartitions import DEFAULT_BOUND, check_ki
from .qtools import f_poly as _f_poly, inv_qfactors as _inv_qfactors, inv_qpoch as _inv_qpoch
from .series import TruncatedSeries, mono

NE, SE, S, SW, E = "NE", "SE", "S", "SW", "E"
STEPS = (NE, SE, S, SW, E)
MARKS = ("one", "a", "b", "ab")

_MOVES = {NE: (1, 1), SE: (1, -1), S: (0, -1), SW: (-1, -1), E: (1, 0)}


@dataclass(frozen=True)
class PeakRecord:
    """One peak with its left-context statistics.

    ``u`` and ``v`` count the plain a-peaks and b-peaks strictly to the
    left (ab-peaks are excluded; only u - v ever enters a formula, so the
    convention is invisible downstream).  ``east_odd`` is the parity of the
    East steps to the left.
    """

    x: int
    y: int
    mark: str
    east_odd: bool
    u: int
    v: int


class LatticePath:
    __slots__ = ("start_height", "steps", "marks", "_peaks")

    def __init__(self, start_height: int, steps, marks):
        self.start_height = int(start_height)
        self.steps = tuple(steps)
        self.marks = tuple(marks)
        self._peaks: tuple[PeakRecord, ...] | None = None
        self._validate()

    def _validate(self):
        if self.start_height < 0:
            raise ValueError("start height must be nonnegative")
        x, y = 0, self.start_height
        peaks = 0
        prev = None
        for step in self.steps:
            if step not in _MOVES:
                raise ValueError(f"unknown step {step!r}")
            if step in (S, SW) and prev != NE:
                raise ValueError(f"{step} step must follow a NE step")
            if step == E and y != 0:
                raise ValueError("E step only allowed at height 0")
            if prev == NE and step in (S, SW, SE):
                peaks += 1
            dx, dy = _MOVES[step]
            x, y = x + dx, y + dy
            if y < 0 or x < 0:
                raise ValueError("path leaves the first quadrant")
            prev = step
        if y != 0:
            raise ValueError(f"path must end on the x-axis, ended at height {y}")
        if self.steps and self.steps[-1] == E:
            raise ValueError("path may not end with an E step")
        if len(self.marks) != peaks:
            raise ValueError(f"expected {peaks} peak marks, got {len(self.marks)}")
        for mark, record_step in zip(self.marks, self._peak_steps()):
            if record_step == S and mark not in ("a", "b"):
                raise ValueError("an S-followed peak must be marked a or b")
            if record_step == SW and mark != "ab":
                raise ValueError("a SW-followed peak must be marked ab")
            if record_step == SE and mark != "one":
                raise ValueError("a SE-followed peak must be marked one")

    def _peak_steps(self):
        prev = None
        for step in self.steps:
            if prev == NE and step in (S, SW, SE):
                yield step
            prev = step

    def peaks(self) -> tuple[PeakRecord, ...]:
        if self._peaks is not None:
            return self._peaks
        out = []
        x, y = 0, self.start_height
        prev = None
        east = 0
        u = v = 0
        idx = 0
        for step in self.steps:
            if prev == NE and step in (S, SW, SE):
                mark = self.marks[idx]
                out.append(PeakRecord(x, y, mark, east % 2 == 1, u, v))
                idx += 1
                if mark == "a":
                    u += 1
                elif mark == "b":
                    v += 1
            if step == E:
                east += 1
            dx, dy = _MOVES[step]
            x, y = x + dx, y + dy
            prev = step
        self._peaks = tuple(out)
        return self._peaks

    def major_index(self) -> int:
        return sum(p.x for p in self.peaks())

    def marked_a(self) -> int:
        return sum(1 for p in self.peaks() if p.mark in ("a", "ab"))

    def marked_b(self) -> int:
        return sum(1 for p in self.peaks() if p.mark in ("b", "ab"))

    def max_height(self) -> int:
        x, y = 0, self.start_height
        top = y
        for step in self.steps:
            dx, dy = _MOVES[step]
            x, y = x + dx, y + dy
            top = max(top, y)
        return top

    def __eq__(self, other):
        return (
            isinstance(other, LatticePath)
            and self.start_height == other.start_height
            and self.steps == other.steps
            and self.marks == other.marks
        )

    def __hash__(self):
        return hash((self.start_height, self.steps, self.marks))

    def __repr__(self):
        return f"LatticePath(h={self.start_height}, {'-'.join(self.steps) or 'empty'})"

    def to_obj(self) -> dict:
        return {
            "start_height": self.start_height,
            "steps": list(self.steps),
            "marks": [{"peak": i, "mark": m} for i, m in enumerate(self.marks)],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "LatticePath":
        marks = [None] * len(obj["marks"])
        for entry in obj["marks"]:
            marks[entry["peak"]] = entry["mark"]
        return cls(obj["start_height"], obj["steps"], marks)


def satisfies_odd_conditions(path: LatticePath, k: int, i: int) -> bool:
    """Start height k-i and height always below k."""
    check_ki(k, i)
    return path.start_height == k - i and path.max_height() <= k - 1


def satisfies_even_conditions(path: LatticePath, k: int, i: int) -> bool:
    """Odd conditions plus the parity constraint at peaks of height k-1."""
    if not satisfies_odd_conditions(path, k, i):
        return False
    for p in path.peaks():
        if p.y == k - 1 and (p.x - p.u + p.v - (i - 1)) % 2 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _paths_up_to(k: int, i: int, n_max: int) -> tuple[LatticePath, ...]:
    """All paths meeting the odd (k, i)-conditions with major index <= n_max.

    Depth-first construction, pruned by the remaining major-index budget;
    deterministic order (steps explored NE, SE, S(a), S(b), SW, E).
    """
    check_ki(k, i)
    out: list[LatticePath] = []
    steps: list[str] = []
    marks: list[str] = []

    def emit():
        out.append(LatticePath(k - i, tuple(steps), tuple(marks)))

    def walk(x: int, y: int, prev: str | None, major: int):
        if y == 0 and prev != E:
            emit()
        # NE: a later peak will sit at x+1 or beyond.
        if y + 1 <= k - 1 and major + x + 1 <= n_max:
            steps.append(NE)
            walk(x + 1, y + 1, NE, major)
            steps.pop()
        if prev == NE:
            # Leaving a peak at (x, y): charge its x-coordinate now.
            if major + x <= n_max:
                steps.append(SE)
                marks.append("one")
                walk(x + 1, y - 1, SE, major + x)
                marks.pop()
                steps.pop()
                for mark in ("a", "b"):
                    steps.append(S)
                    marks.append(mark)
                    walk(x, y - 1, S, major + x)
                    marks.pop()
                    steps.pop()
                if x >= 1:
                    steps.append(SW)
                    marks.append("ab")
                    walk(x - 1, y - 1, SW, major + x)
                    marks.pop()
                    steps.pop()
        else:
            if y >= 1:
                steps.append(SE)
                walk(x + 1, y - 1, SE, major)
                steps.pop()
            if y == 0 and x + 1 <= n_max + k:
                steps.append(E)
                walk(x + 1, 0, E, major)
                steps.pop()

    walk(0, k - i, None, 0)
    return tuple(out)


def enumerate_paths(k: int, i: int, n: int, even: bool = False, bound: int | None = None):
    """Stream every (k, i)-path of major index n, odd conditions (or even)."""
    limit = DEFAULT_BOUND if bound is None else bound
    if n > limit:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {limit}")
    for path in _paths_up_to(k, i, n):
        if path.major_index() != n:
            continue
        if even and not satisfies_even_conditions(path, k, i):
            continue
        yield path


def count_paths(k: int, i: int, n_max: int, even: bool = False,
                bound: int | None = None) -> CountTable:
    """Table of path counts by (marked-a, marked-b, major index)."""
    limit = DEFAULT_BOUND if bound is None else bound
    if n_max > limit:
        raise BoundExceededError(f"n_max={n_max} exceeds the enumeration bound {limit}")
    table = CountTable(n_max)
    for path in _paths_up_to(k, i, n_max):
        if even and not satisfies_even_conditions(path, k, i):
            continue
        table.add(path.marked_a(), path.marked_b(), path.major_index())
    return table


# ------------------------------------------------------------------ bijection


_OVERLINES = {"one": (True, True), "a": (True, False), "b": (False, True), "ab": (False, False)}
_MARK_OF = {v: m for m, v in _OVERLINES.items()}


def path_to_symbol(path: LatticePath, k: int, i: int) -> FrobeniusSymbol:
    """Map an odd-conditions path to its rank-bounded Frobenius symbol.

    The leftmost peak gives the rightmost column; a peak at (x, y) with u, v
    plain a/b-peaks to its left maps to the column (p, q) with

        p = (x + k - i - y + u - v) / 2,  q = (x - k + i + y - 2 - u + v) / 2

    when an even number of E steps lie to its left, and

        p = (x + k - i + y - 1 + u - v) / 2,  q = (x - k + i - y - 1 - u + v) / 2

    when that number is odd.  1-peaks overline both entries, a-peaks the
    top, b-peaks the bottom.
    """
    if not satisfies_odd_conditions(path, k, i):
        raise ValueError(f"path does not satisfy the odd ({k},{i})-conditions")
    top = []
    bottom = []
    for peak in path.peaks():
        x, y, u, v = peak.x, peak.y, peak.u, peak.v
        if not peak.east_odd:
            two_p = x + k - i - y + u - v
            two_q = x - k + i + y - 2 - u + v
        else:
            two_p = x + k - i + y - 1 + u - v
            two_q = x - k + i - y - 1 - u + v
        if two_p % 2 or two_q % 2:
            raise ValueError(f"non-integer column for peak at ({x},{y})")
        over_p, over_q = _OVERLINES[peak.mark]
        top.append((two_p // 2, over_p))
        bottom.append((two_q // 2, over_q))
    top.reverse()
    bottom.reverse()
    return FrobeniusSymbol(top, bottom)


def symbol_to_path(f: FrobeniusSymbol, k: int, i: int) -> LatticePath:
    """Inverse map: rebuild the unique path from a rank-bounded symbol."""
    check_ki(k, i)
    lo, hi = -i + 2, 2 * k - i - 1
    ranks = successive_ranks(f)
    for idx, r in enumerate(ranks):
        if not (lo <= r <= hi):
            raise ValueError(
                f"rank {r} at column {idx + 1} outside [{lo}, {hi}] for (k,i)=({k},{i})"
            )
    # Recover the peaks, leftmost first (rightmost column first).
    peaks = []
    u = v = 0
    n_cols = f.columns
    for idx in range(n_cols - 1, -1, -1):
        p, over_p = f.top[idx]
        q, over_q = f.bottom[idx]
        mark = _MARK_OF[(over_p, over_q)]
        x = p + q + 1
        rank = p - q - u + v
        y_even = k - i + 1 - rank
        y_odd = rank - (k - i)
        even_ok = 1 <= y_even <= k - 1
        odd_ok = 1 <= y_odd <= k - 1
        if even_ok == odd_ok:
            raise ValueError("exactly one parity must solve for a valid height")
        y = y_even if even_ok else y_odd
        peaks.append((x, y, mark, not even_ok))
        if mark == "a":
            u += 1
        elif mark == "b":
            v += 1

    steps: list[str] = []
    marks: list[str] = []
    east_so_far = 0

    def descend_then_climb(x0: int, h0: int, x1: int, y1: int):
        """Fill SE (then E at the axis) then NE steps from (x0,h0) up to (x1,y1)."""
        nonlocal east_so_far
        hit_zero = x0 + h0
        climb_from = x1 - y1
        if hit_zero <= climb_from:
            steps.extend([SE] * h0)
            steps.extend([E] * (climb_from - hit_zero))
            east_so_far += climb_from - hit_zero
            steps.extend([NE] * y1)
        else:
            if (x0 + h0 + climb_from) % 2 != 0:
                raise ValueError("columns do not connect into a path")
            xj = (x0 + h0 + climb_from) // 2
            steps.extend([SE] * (xj - x0))
            steps.extend([NE] * (x1 - xj))

    cx, ch = 0, k - i
    for x, y, mark, east_odd in peaks:
        descend_then_climb(cx, ch, x, y)
        if east_odd != (east_so_far % 2 == 1):
            raise ValueError("East-step parity does not match the column data")
        marks.append(mark)
        if mark == "one":
            steps.append(SE)
            cx, ch = x + 1, y - 1
        elif mark == "ab":
            steps.append(SW)
            cx, ch = x - 1, y - 1
        else:
            steps.append(S)
            cx, ch = x, y - 1
    steps.extend([SE] * ch)
    path = LatticePath(k - i, steps, marks)
    if path_to_symbol(path, k, i) != f:
        raise ValueError("reconstructed path does not map back to the symbol")
    return path


# ------------------------------------------------------------------ generating functions


@lru_cache(maxsize=None)
def _gf_tables(k: int, even: bool, q_cutoff: int, n_peaks: int):
    """Peak-count generating functions from the step-removal recurrences.

    Returns (E, G) dicts keyed by (i, N).  Grounding: one path with no
    peaks, and no start-with-NE paths from height k-1.
    """
    cap = q_cutoff
    one = TruncatedSeries.one(q_cutoff, cap)
    zero = TruncatedSeries.zero(q_cutoff, cap)
    E: dict[tuple[int, int], TruncatedSeries] = {}
    G: dict[tuple[int, int], TruncatedSeries] = {}
    for i in range(1, k + 1):
        E[(i, 0)] = one
    for N in range(0, n_peaks + 1):
        G[(0, N)] = zero
        if N == 0:
            for i in range(1, k):
                G[(i, 0)] = zero
            continue
        qN = mono(1, q=N)
        step_weights = TruncatedSeries.poly(
            [mono(1, a=1), mono(1, b=1), mono(1, q=N - 1), mono(1, a=1, b=1, q=1 - N)]
        )
        for i in range(1, k):
            G[(i, N)] = G[(i - 1, N)].times_monomial(qN) + step_weights * E[(i + 1, N - 1)]
        if not even:
            E[(k, N)] = G[(k - 1, N)].times_monomial(qN) * _inv_qfactors((N,), q_cutoff, cap)
        else:
            if k < 2:
                raise ValueError("even-conditions tables need k >= 2")
            rhs = G[(k - 2, N)].times_monomial(qN) + G[(k - 1, N)].times_monomial(mono(1, q=2 * N))
            E[(k - 1, N)] = rhs * _inv_qfactors((2 * N,), q_cutoff, cap)
            E[(k, N)] = (E[(k - 1, N)] + G[(k - 1, N)]).times_monomial(qN)
        for i in range(k - 1 if not even else k - 2, 0, -1):
            E[(i, N)] = (G[(i - 1, N)] + E[(i + 1, N)]).times_monomial(qN)
    return E, G


def gf_recurrence(k: int, i: int, n_peaks: int, q_cutoff: int, even: bool = False) -> TruncatedSeries:
    """Generating function (in a, b, q) for N-peak paths, via the recurrences."""
    check_ki(k, i)
    E, _G = _gf_tables(k, even, q_cutoff, n_peaks)
    return E[(i, n_peaks)]


def gf_gamma_recurrence(k: int, i: int, n_peaks: int, q_cutoff: int, even: bool = False) -> TruncatedSeries:
    """Companion generating function for first-NE-step-removed paths."""
    if not (0 <= i < k):
        raise ValueError(f"need 0 <= i < k, got i={i}, k={k}")
    _E, G = _gf_tables(k, even, q_cutoff, n_peaks)
    return G[(i, n_peaks)]


def _closed_exponent(k: int, shift: int, n: int, even: bool) -> int:
    if even:
        return k * n * n + shift * n - 2 * (n * (n - 1) // 2)
    return n * ((2 * k - 1) * n + 3) // 2 + shift * n


def gf_closed(k: int, i: int, n_peaks: int, q_cutoff: int, even: bool = False) -> TruncatedSeries:
    """Closed-form peak-count generating function (alternating finite sum)."""
    check_ki(k, i)
    cap = q_cutoff
    total = TruncatedSeries.zero(q_cutoff, cap)
    for n in range(-n_peaks, n_peaks + 1):
        e = _closed_exponent(k, k - i - 1, n, even) + n_peaks
        if e >= q_cutoff:
            continue
        term = _inv_qpoch(n_peaks - n, q_cutoff, cap) * _inv_qpoch(n_peaks + n, q_cutoff, cap)
        total = total + term.times_monomial(mono(-1 if n % 2 else 1, q=e))
    return _f_poly(n_peaks, q_cutoff, cap) * total


def gf_gamma_closed(k: int, i: int, n_peaks: int, q_cutoff: int, even: bool = False) -> TruncatedSeries:
    if not (0 <= i < k):
        raise ValueError(f"need 0 <= i < k, got i={i}, k={k}")
    cap = q_cutoff
    total = TruncatedSeries.zero(q_cutoff, cap)
    for n in range(-n_peaks, n_peaks):
        e = _closed_exponent(k, k - i - 2, n, even)
        if e >= q_cutoff:
            continue
        term = _inv_qpoch(n_peaks - n - 1, q_cutoff, cap) * _inv_qpoch(n_peaks + n, q_cutoff, cap)
        total = total + term.times_monomial(mono(-1 if n % 2 else 1, q=e))
    return _f_poly(n_peaks, q_cutoff, cap) * total
