"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from ladderlab import setlang as sl


def naive_member(expr, x: int) -> bool:
    if x < 1:
        return False
    if isinstance(expr, sl.All):
        return True
    if isinstance(expr, sl.Odds):
        return x % 2 == 1
    if isinstance(expr, sl.Evens):
        return x % 2 == 0
    if isinstance(expr, sl.Squares):
        return any(t * t == x for t in range(1, x + 1))
    if isinstance(expr, sl.Cubes):
        return any(t ** 3 == x for t in range(1, x + 1))
    if isinstance(expr, sl.ModSet):
        return x % expr.n == 0
    if isinstance(expr, sl.Poly):
        # every root of P(t) - x has |t| <= 1 + max |coefficient| (Cauchy)
        bound = 2 + x + max(abs(c) for c in expr.coeffs)
        return any(sum(c * t ** (i + 1) for i, c in enumerate(expr.coeffs)) == x
                   for t in range(-bound, bound + 1))
    if isinstance(expr, sl.Geom):
        v = Fraction(expr.a)
        while math.ceil(v) <= x:
            if math.ceil(v) == x:
                return True
            v *= expr.ratio
        return False
    if isinstance(expr, sl.Explicit):
        return x in expr.elements
    if isinstance(expr, sl.CombCube):
        g = expr.generators
        return any(sum(c) == x for r in range(1, len(g) + 1) for c in itertools.combinations(g, r))
    if isinstance(expr, sl.Diagonal):
        return x in sl.diagonal_construction(expr.height).included
    if isinstance(expr, sl.Union):
        return naive_member(expr.left, x) or naive_member(expr.right, x)
    if isinstance(expr, sl.Intersect):
        return naive_member(expr.left, x) and naive_member(expr.right, x)
    if isinstance(expr, sl.Diff):
        return naive_member(expr.left, x) and not naive_member(expr.right, x)
    if isinstance(expr, sl.Complement):
        return not naive_member(expr.inner, x)
    raise TypeError(expr)


def all_aps(N: int, steps, L: int):
    for a in range(1, N + 1):
        for d in steps:
            if a + (L - 1) * d <= N:
                yield a, d


def has_mono_ap(colors, steps, L: int) -> bool:
    """``colors`` is a 0-based list for positions 1..N."""
    N = len(colors)
    return any(len({colors[a - 1 + j * d] for j in range(L)}) == 1 for a, d in all_aps(N, steps, L))


def longest_walk_by_paths(colors, steps) -> int:
    """Longest monochromatic walk found by enumerating every path explicitly."""
    N = len(colors)
    step_set = set(steps)
    best = 0

    def extend(path):
        nonlocal best
        best = max(best, len(path))
        x = path[-1]
        for y in range(x + 1, N + 1):
            if y - x in step_set and colors[y - 1] == colors[x - 1]:
                extend(path + [y])

    for start in range(1, N + 1):
        extend([start])
    return best


def contains_target(kind, colors, steps, param) -> bool:
    if kind == "ap":
        return has_mono_ap(colors, steps, param)
    return longest_walk_by_paths(colors, steps) >= param


def every_coloring_contains(kind, steps, param, r, N) -> bool:
    steps = [s for s in steps if s <= N]
    return all(contains_target(kind, list(c), steps, param) for c in itertools.product(range(r), repeat=N))


def enumerated_threshold(kind, steps, param, r, nmax):
    """Least N <= nmax with every r-coloring containing the target, else None."""
    for N in range(1, nmax + 1):
        if every_coloring_contains(kind, steps, param, r, N):
            return N
    return None


def all_colorings(r: int, N: int):
    """Every r-coloring of [1, N] as rows of an (r**N, N) array."""
    import numpy as np
    idx = np.arange(r ** N, dtype=np.int64)
    return np.stack([(idx // r ** (N - 1 - j)) % r for j in range(N)], axis=1).astype(np.int8)


def contains_matrix(kind, steps, param, r, N):
    """Boolean per coloring of [1, N]: does it contain the target? Vectorized over colorings."""
    import numpy as np
    C = all_colorings(r, N)
    steps = [s for s in steps if s <= N]
    if kind == "ap":
        hit = np.zeros(len(C), dtype=bool)
        if param == 1:
            hit[:] = bool(steps)
            return hit
        for a, d in all_aps(N, steps, param):
            same = np.ones(len(C), dtype=bool)
            for j in range(1, param):
                same &= C[:, a - 1 + j * d] == C[:, a - 1]
            hit |= same
        return hit
    chain = np.zeros((len(C), N), dtype=np.int16)
    for x in range(N):
        best = np.zeros(len(C), dtype=np.int16)
        for s in steps:
            if s > x:
                break
            best = np.maximum(best, np.where(C[:, x - s] == C[:, x], chain[:, x - s], 0))
        chain[:, x] = best + 1
    return chain.max(axis=1) >= param
