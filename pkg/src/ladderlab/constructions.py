"""Explicit constructions: the interval partition and (k+2)-coloring that
bounds walkability order, greedy growth of H with H - H inside S, and sparse
ladders assembled from combinatorial cubes."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .core import Coloring
from .errors import (
    GapConditionUnverifiable,
    NeighborBoundViolated,
    WindowExhausted,
    WindowTooSmall,
)
from .setlang import Explicit, SortedWindow, render


@dataclass(frozen=True)
class Interval:
    start: int
    length: int
    forbidden: int
    # index i with |I_t| = s_i; None for I_1
    s_index: int | None = None
    partial: bool = False

    @property
    def end(self) -> int:
        return self.start + self.length - 1

    def to_json(self) -> dict:
        out = {"start": self.start, "len": self.length, "forbidden": self.forbidden}
        if self.partial:
            out["partial"] = True
        return out


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple
    k: int
    N: int

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def index_of(self) -> list:
        """Interval number (1-based) of every position 1..N; slot 0 unused."""
        owner = [0] * (self.N + 1)
        for t, iv in enumerate(self.intervals, start=1):
            owner[iv.start:iv.end + 1] = [t] * iv.length
        return owner

    def complete_count(self) -> int:
        return sum(1 for iv in self.intervals if not iv.partial)

    def to_json(self) -> list:
        return [iv.to_json() for iv in self.intervals]

    @classmethod
    def from_json(cls, rows, k: int) -> "IntervalPartition":
        ivs = tuple(Interval(int(r["start"]), int(r["len"]), int(r["forbidden"]),
                             partial=bool(r.get("partial", False))) for r in rows)
        N = ivs[-1].end if ivs else 0
        return cls(ivs, k, N)


def _k_gaps(s: list, k: int) -> list:
    # gaps[n] = s_{n+k} - s_n for n = 1..m-k (index 0 unused)
    return [0] + [s[n + k - 1] - s[n - 1] for n in range(1, len(s) - k + 1)]


def interval_partition(window: SortedWindow, k: int) -> IntervalPartition:
    """Partition [1, N] into I_1 = {1}, I_2, ... with |I_t| = s_{N_t}.

    N_t is the least index such that s_{n+k} - s_n exceeds |I_1| + ... + |I_{t-1}|
    for every n >= N_t with s_{n+k} in the window (larger n cannot join two
    points of [1, N]). Refuses when the k-gaps are not eventually
    nondecreasing and growing over the window.
    """
    if k < 1:
        raise ValueError("k must be positive")
    s = window.tolist()
    m = len(s)
    if m < k + 1:
        raise WindowTooSmall(f"need at least {k + 1} window elements, have {m}")
    gaps = _k_gaps(s, k)
    last = m - k
    j0 = last
    while j0 > 1 and gaps[j0 - 1] <= gaps[j0]:
        j0 -= 1
    if j0 > 1 + last // 2:
        raise GapConditionUnverifiable(
            f"the {k}-gaps s_(i+{k}) - s_i are not eventually nondecreasing on [1, {window.N}]")
    if gaps[last] <= gaps[j0]:
        raise GapConditionUnverifiable(
            f"the {k}-gaps s_(i+{k}) - s_i stop growing on [1, {window.N}] "
            f"(last gap {gaps[last]}), so gap growth cannot be checked in this window")

    N = window.N
    r = k + 2
    intervals = [Interval(1, 1, 1 % r)]
    covered = 1
    t = 1
    while covered < N:
        t += 1
        # n with s_(n+k) beyond the window cannot join two points of [1, N]
        j = last
        while j >= 1 and gaps[j] > covered:
            j -= 1
        idx = j + 1
        length = s[idx - 1]
        partial = covered + length > N
        intervals.append(Interval(covered + 1, min(length, N - covered), t % r, idx, partial))
        covered += intervals[-1].length
    return IntervalPartition(tuple(intervals), k, N)


def adversarial_coloring(window: SortedWindow, k: int, partition: IntervalPartition) -> Coloring:
    """(k+2)-color [1, N] so monochromatic walks stay within k+1 consecutive intervals.

    Position x in I_t avoids the color t mod (k+2) and the colors of its
    distance-graph neighbors in I_1 ∪ ... ∪ I_{t-2}; the least legal color wins.
    """
    if partition.k != k or partition.N != window.N:
        raise ValueError("partition was built for a different window or k")
    s = window.tolist()
    r = k + 2
    colors = [0] * (window.N + 1)
    ends = [iv.end for iv in partition]
    for t, iv in enumerate(partition, start=1):
        far_end = ends[t - 3] if t >= 3 else 0
        for x in range(iv.start, iv.end + 1):
            lo = bisect.bisect_left(s, x - far_end) if far_end else len(s)
            hi = bisect.bisect_left(s, x)
            if hi - lo > k:
                raise NeighborBoundViolated(
                    f"position {x} in I_{t} has {hi - lo} neighbors two or more intervals back (k={k})")
            taken = {colors[x - s[i]] for i in range(lo, hi)}
            taken.add(iv.forbidden)
            colors[x] = next(c for c in range(r) if c not in taken)
    return Coloring(colors[1:], r)


def far_mono_edges(coloring: Coloring, window: SortedWindow, partition: IntervalPartition) -> list:
    """Monochromatic distance-graph edges (y, x) whose intervals are two or more apart."""
    owner = partition.index_of()
    colors = coloring.tolist()
    s = window.tolist()
    bad = []
    for x in range(1, coloring.N + 1):
        for d in s:
            y = x - d
            if y < 1:
                break
            if owner[x] - owner[y] >= 2 and colors[x - 1] == colors[y - 1]:
                bad.append((y, x))
    return bad


def mono_walk_span(coloring: Coloring, window: SortedWindow, partition: IntervalPartition) -> int:
    """Most consecutive intervals touched by one monochromatic walk.

    Walks that reach the trailing partial interval are ignored.
    """
    owner = partition.index_of()
    partial = {t for t, iv in enumerate(partition, start=1) if iv.partial}
    colors = coloring.tolist()
    s = window.tolist()
    first = [0] * (coloring.N + 1)
    span = 0
    for x in range(1, coloring.N + 1):
        if owner[x] in partial:
            continue
        lowest = owner[x]
        cx = colors[x - 1]
        for d in s:
            y = x - d
            if y < 1:
                break
            if colors[y - 1] == cx and first[y] < lowest:
                lowest = first[y]
        first[x] = lowest
        span = max(span, owner[x] - lowest + 1)
    return span


@dataclass(frozen=True)
class DifferenceSet:
    H: tuple
    N: int

    def holds_in(self, window: SortedWindow) -> bool:
        return all((b - a) in window for i, a in enumerate(self.H) for b in self.H[i + 1:])


def grow_difference_set(window: SortedWindow, target: int) -> DifferenceSet:
    """Grow H_1 ⊂ H_2 ⊂ ... with H_k - H_k inside the window.

    From H_k with maximum h_k, take n = h_k + 1 and append the first
    multiple t*n (t = 1, 2, ...) with every t*n - h in the window.
    """
    if len(window) == 0:
        raise ValueError("difference-set growth needs a nonempty window")
    if target < 1:
        raise ValueError("target must be positive")
    H = [int(window.elements[0])]
    while len(H) < target:
        n = H[-1] + 1
        v = n
        while True:
            if v > window.N:
                raise WindowExhausted(
                    f"no multiple of {n} up to {window.N} extends H = {H}", DifferenceSet(tuple(H), window.N))
            if all((v - h) in window for h in H):
                H.append(v)
                break
            v += n
    return DifferenceSet(tuple(H), window.N)


def ladder_cubes(floor_values, max_dim: int, N: int) -> list:
    """Generator lists b_d * (1, 2, ..., 2^(d-1)) of the cubes placed by :func:`sparse_ladder`.

    The last cube may be only partly inside [1, N].
    """
    floors = [int(f) for f in floor_values]
    if any(a > b for a, b in zip(floors, floors[1:])):
        raise ValueError("floor values must be nondecreasing")

    def floor_at(i):
        if i <= len(floors):
            return floors[i - 1]
        return floors[-1] if floors else 0

    cubes = []
    count = 0
    top = 0
    for d in range(1, max_dim + 1):
        mults = range(1, 2 ** d)
        base = top + 1
        for j in mults:
            base = max(base, floor_at(count + j) // j + 1)
        if base > N:
            break
        cubes.append([base << i for i in range(d)])
        top = base * (2 ** d - 1)
        count += len(mults)
        if top > N:
            break
    return cubes


def sparse_ladder(floor_values, max_dim: int, N: int) -> SortedWindow:
    """Stack cubes of dimensions 1..max_dim so the i-th element exceeds floor_values[i-1].

    Floors past the end of the list repeat the last value.
    """
    elements = []
    for gens in ladder_cubes(floor_values, max_dim, N):
        base = gens[0]
        elements.extend(base * j for j in range(1, 2 ** len(gens)) if base * j <= N)
    if not elements:
        raise WindowTooSmall(f"no cube element fits in [1, {N}]")
    return SortedWindow(N, elements, expr=render(Explicit(tuple(elements))))


def adversarial_certificate(window: SortedWindow, k: int):
    """Build partition and coloring for ``window`` and wrap them in a certificate.

    The certificate claims no monochromatic walk with ``param`` elements
    (one more than the longest found) and carries the partition, whose
    confinement bound k+1 the verifier re-checks. Returns (certificate, span).
    """
    from .core import Certificate
    from .search import longest_mono_walk

    partition = interval_partition(window, k)
    coloring = adversarial_coloring(window, k, partition)
    span = mono_walk_span(coloring, window, partition)
    longest = longest_mono_walk(coloring, window)
    cert = Certificate(
        claim="no-mono-walk", expr=window.expr or "", N=window.N, r=k + 2,
        param=longest.length + 1, coloring=coloring,
        extra={"partition": partition.to_json(), "k": k, "scale": "window"},
    )
    return cert, span
