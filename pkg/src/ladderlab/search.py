"""Searches for monochromatic structures in a coloring and for cubes and
homothetic progressions inside a set window.

Every search returns the lexicographically least witness so results are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import APWitness, Coloring, CubeWitness, HomotheticWitness, WalkWitness
from .errors import DimensionMismatch
from .setlang import SortedWindow


def _check_same_n(n1: int, n2: int):
    if n1 != n2:
        raise DimensionMismatch(f"window bounds differ: {n1} vs {n2}")


def _least_ap(term_ok, N: int, diffs, L: int):
    """Least (a, d) with d from ``diffs`` and term_ok(a, d, M) true.

    ``term_ok(d, M)`` returns a boolean array over starts a = 1..M.
    """
    best = None
    for d in diffs:
        span = (L - 1) * d
        if span > N - 1:
            break
        M = N - span
        if best is not None:
            M = min(M, best[0] - 1)
            if M < 1:
                break
        idx = np.flatnonzero(term_ok(d, M))
        if idx.size:
            best = (int(idx[0]) + 1, int(d))
            if best[0] == 1:
                break
    return best


def find_mono_ap(coloring: Coloring, window: SortedWindow, L: int) -> APWitness | None:
    """Least (a, d), d in the window, with a, a+d, ..., a+(L-1)d one color."""
    _check_same_n(coloring.N, window.N)
    if L < 1:
        raise ValueError("AP length must be positive")
    c = coloring.assignment
    N = coloring.N
    if L == 1:
        if N == 0 or len(window) == 0:
            return None
        return APWitness(1, int(window.elements[0]), 1, coloring.color(1))

    def same_color(d, M):
        base = c[:M]
        ok = c[d:d + M] == base
        for j in range(2, L):
            ok &= c[j * d:j * d + M] == base
        return ok

    best = _least_ap(same_color, N, window.elements.tolist(), L)
    if best is None:
        return None
    a, d = best
    return APWitness(a, d, L, coloring.color(a))


def find_ap_in_subset(X: SortedWindow, S: SortedWindow, L: int) -> APWitness | None:
    """Least (a, d), d in S, with all L terms in X."""
    _check_same_n(X.N, S.N)
    if L < 1:
        raise ValueError("AP length must be positive")
    if L == 1:
        if len(X) == 0 or len(S) == 0:
            return None
        return APWitness(int(X.elements[0]), int(S.elements[0]), 1)
    bm = X.bitmap

    def all_in_x(d, M):
        ok = bm[1:M + 1].copy()
        for j in range(1, L):
            ok &= bm[1 + j * d:1 + j * d + M]
        return ok

    best = _least_ap(all_in_x, X.N, S.elements.tolist(), L)
    return None if best is None else APWitness(best[0], best[1], L)


def longest_mono_walk(coloring: Coloring, window: SortedWindow, color: int | None = None) -> WalkWitness:
    """A longest monochromatic walk over the window set.

    Walks strictly increase, so the reachability graph is acyclic and a single
    right-to-left pass computes the longest walk starting at each position.
    Ties go to the least start, then the least successor at each step. With
    ``color`` set, only walks of that color count (empty walk if it is unused).
    """
    _check_same_n(coloring.N, window.N)
    N = coloring.N
    colors = coloring.tolist()
    if N == 0 or (color is not None and color not in colors):
        return WalkWitness((), color)
    steps = window.tolist()
    longest = [0] * (N + 2)
    for x in range(N, 0, -1):
        cx = colors[x - 1]
        if color is not None and cx != color:
            continue
        best = 1
        for s in steps:
            y = x + s
            if y > N:
                break
            if colors[y - 1] == cx and longest[y] >= best:
                best = longest[y] + 1
        longest[x] = best
    top = max(longest[1:N + 1])
    x = longest.index(top, 1)
    walk = [x]
    cx = colors[x - 1]
    while longest[x] > 1:
        for s in steps:
            y = x + s
            if colors[y - 1] == cx and longest[y] == longest[x] - 1:
                x = y
                break
        walk.append(x)
    return WalkWitness(tuple(walk), cx)


@dataclass(frozen=True)
class CubeSearch:
    """Outcome of a cube search: ``status`` is "found", "exhausted" or "budget"."""

    witness: CubeWitness | None
    status: str
    nodes: int

    def __bool__(self):
        return self.witness is not None


class _BudgetHit(Exception):
    pass


def detect_cube(window: SortedWindow, dim: int, budget: int = 10**8) -> CubeSearch:
    """Search for ``dim`` generators (a multiset) whose nonempty subset sums all lie in the window.

    Cubes with distinct generators are preferred: the lexicographically least
    strictly increasing generator list wins, and repeated generators are only
    tried when no such list exists.
    """
    if dim < 1:
        raise ValueError("cube dimension must be positive")
    elems = window.tolist()
    bm = window.bitmap
    N = window.N
    nodes = 0
    step = 1

    def extend(start, sums, total, chosen):
        nonlocal nodes
        if len(chosen) == dim:
            return chosen
        for i in range(start, len(elems)):
            g = elems[i]
            if total + g > N:
                break
            nodes += 1
            if nodes > budget:
                raise _BudgetHit
            if all(bm[s + g] for s in sums):
                new_sums = sums | {s + g for s in sums} | {g}
                found = extend(i + step, new_sums, total + g, chosen + [g])
                if found:
                    return found
        return None

    try:
        found = extend(0, frozenset(), 0, [])
        if found is None and dim > 1:
            step = 0
            found = extend(0, frozenset(), 0, [])
    except _BudgetHit:
        return CubeSearch(None, "budget", nodes)
    if found is None:
        return CubeSearch(None, "exhausted", nodes)
    return CubeSearch(CubeWitness(tuple(found)), "found", nodes)


def find_homothetic(window: SortedWindow, n: int) -> HomotheticWitness | None:
    """Least x <= N/n with x, 2x, ..., nx all in the window."""
    if n < 1:
        raise ValueError("n must be positive")
    M = window.N // n
    if M < 1:
        return None
    bm = window.bitmap
    ok = bm[1:M + 1].copy()
    for j in range(2, n + 1):
        ok &= bm[j:j * M + 1:j]
    idx = np.flatnonzero(ok)
    return HomotheticWitness(int(idx[0]) + 1, n) if idx.size else None
