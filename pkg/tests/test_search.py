import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ladderlab import setlang as sl
from ladderlab.core import Coloring, modular_coloring
from ladderlab.errors import DimensionMismatch
from ladderlab.search import (
    detect_cube,
    find_ap_in_subset,
    find_homothetic,
    find_mono_ap,
    longest_mono_walk,
)
from ladderlab.setlang import full_window, materialize, window_from_elements

from oracles import all_aps, longest_walk_by_paths


@st.composite
def coloring_and_window(draw, max_n=24):
    N = draw(st.integers(1, max_n))
    r = draw(st.integers(1, 3))
    colors = draw(st.lists(st.integers(0, r - 1), min_size=N, max_size=N))
    steps = draw(st.sets(st.integers(1, N)))
    return Coloring(colors, r), window_from_elements(sorted(steps), N)


# examples

def test_mono_ap_examples():
    ones = Coloring([1] * 10, 2)
    hit = find_mono_ap(ones, window_from_elements([1], 10), 5)
    assert (hit.a, hit.d, hit.length, hit.color) == (1, 1, 5, 1)
    assert find_mono_ap(modular_coloring(2, 20), materialize(sl.Odds(), 20), 2) is None
    assert find_mono_ap(Coloring([1, 1, 0, 0, 1, 1, 0, 0], 2), full_window(8), 3) is None


def test_walk_examples():
    w = longest_mono_walk(Coloring([1] * 10, 2), window_from_elements([1], 10))
    assert w.vertices == tuple(range(1, 11))
    assert longest_mono_walk(modular_coloring(2, 20), materialize(sl.Odds(), 20)).length == 1
    w = longest_mono_walk(Coloring([0, 0, 1, 1, 0, 0], 2), window_from_elements([1, 2], 6))
    assert w.length == 2 and w.vertices == (1, 2)


def test_cube_examples():
    res = detect_cube(window_from_elements([1, 2, 3, 4], 4), 2)
    assert res.witness.generators == (1, 2) and res.status == "found"
    res = detect_cube(materialize(sl.Squares(), 100), 1)
    assert res.witness.generators == (1,)
    res = detect_cube(materialize(sl.Cubes(), 10**5), 2)
    assert res.witness is None and res.status == "exhausted"


def test_cube_falls_back_to_repeated_generators():
    res = detect_cube(window_from_elements([1, 2], 2), 2)
    assert res.witness.generators == (1, 1)


def test_cube_budget_flag():
    res = detect_cube(materialize(sl.Cubes(), 10**5), 2, budget=5)
    assert res.witness is None and res.status == "budget"


def test_homothetic_examples():
    assert find_homothetic(full_window(100), 10).x == 1
    w = window_from_elements([x for x in range(1, 31) if x != 2], 30)
    assert find_homothetic(w, 3).x == 3
    assert find_homothetic(materialize(sl.Odds(), 100), 2) is None


def test_subset_ap_examples():
    hit = find_ap_in_subset(materialize(sl.Evens(), 10), full_window(10), 4)
    assert (hit.a, hit.d) == (2, 2)
    hit = find_ap_in_subset(materialize(sl.Squares(), 49), full_window(49), 3)
    assert (hit.a, hit.d) == (1, 24)
    assert find_ap_in_subset(materialize("geom(1, 2)", 1024), full_window(1024), 3) is None


def test_geom_has_no_three_term_ap_by_scan():
    powers = [2 ** i for i in range(11)]
    assert not any(b - a == c - b for a, b, c in itertools.combinations(powers, 3))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        find_mono_ap(Coloring([0] * 5, 1), full_window(6), 2)


# properties

@settings(max_examples=300, deadline=None)
@given(coloring_and_window(), st.integers(2, 5))
def test_mono_ap_matches_enumeration(cw, L):
    coloring, window = cw
    colors = coloring.tolist()
    expected = next(((a, d) for a, d in sorted(all_aps(window.N, window.tolist(), L))
                     if len({colors[a - 1 + j * d] for j in range(L)}) == 1), None)
    hit = find_mono_ap(coloring, window, L)
    assert (None if hit is None else (hit.a, hit.d)) == expected
    if hit is not None:
        assert all(coloring.color(t) == hit.color for t in hit.terms)


@settings(max_examples=300, deadline=None)
@given(coloring_and_window())
def test_longest_walk_matches_path_enumeration(cw):
    coloring, window = cw
    w = longest_mono_walk(coloring, window)
    assert w.length == longest_walk_by_paths(coloring.tolist(), window.tolist())
    assert all(coloring.color(v) == w.color for v in w.vertices)
    assert all(b - a in window for a, b in zip(w.vertices, w.vertices[1:]))


@settings(max_examples=200, deadline=None)
@given(coloring_and_window(), st.integers(0, 2))
def test_longest_walk_for_one_color(cw, col):
    coloring, window = cw
    colors = coloring.tolist()
    masked = [c if c == col else -1 - i for i, c in enumerate(colors)]
    w = longest_mono_walk(coloring, window, color=col)
    expected = longest_walk_by_paths(masked, window.tolist()) if col in colors else 0
    assert w.length == expected
    assert all(coloring.color(v) == col for v in w.vertices)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 40).flatmap(lambda N: st.tuples(st.just(N), st.sets(st.integers(1, N)),
                                                      st.sets(st.integers(1, N)))), st.integers(2, 4))
def test_subset_ap_matches_enumeration(args, L):
    N, xs, ss = args
    X, S = window_from_elements(sorted(xs), N), window_from_elements(sorted(ss), N)
    expected = next(((a, d) for a, d in sorted(all_aps(N, sorted(ss), L))
                     if all(a + j * d in xs for j in range(L))), None)
    hit = find_ap_in_subset(X, S, L)
    assert (None if hit is None else (hit.a, hit.d)) == expected


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 60).flatmap(lambda N: st.tuples(st.just(N), st.sets(st.integers(1, N)))),
       st.integers(1, 6))
def test_homothetic_matches_scan(args, n):
    N, xs = args
    expected = next((x for x in range(1, N // n + 1) if all(j * x in xs for j in range(1, n + 1))), None)
    hit = find_homothetic(window_from_elements(sorted(xs), N), n)
    assert (None if hit is None else hit.x) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 8), st.data())
def test_pigeonhole_guarantee(n, data):
    N = data.draw(st.integers(n * n, 20 * n * n))
    limit = -(-N // (n * n)) - 1  # largest count strictly below N / n^2
    deleted = data.draw(st.sets(st.integers(1, N), max_size=limit))
    window = window_from_elements([x for x in range(1, N + 1) if x not in deleted], N)
    hit = find_homothetic(window, n)
    assert hit is not None and hit.x * n <= N


@st.composite
def small_window(draw):
    N = draw(st.integers(1, 40))
    return window_from_elements(sorted(draw(st.sets(st.integers(1, N)))), N)


def _cube_by_brute_force(window, dim):
    elems = window.tolist()
    for pick in (itertools.combinations, itertools.combinations_with_replacement):
        for gens in pick(elems, dim):
            sums = {sum(c) for r in range(1, dim + 1) for c in itertools.combinations(gens, r)}
            if all(s in window for s in sums):
                return gens
    return None


@settings(max_examples=200, deadline=None)
@given(small_window(), st.integers(1, 3))
def test_cube_matches_brute_force(window, dim):
    res = detect_cube(window, dim)
    expected = _cube_by_brute_force(window, dim)
    assert (None if res.witness is None else res.witness.generators) == expected
    assert res.status == ("found" if expected else "exhausted")


@settings(max_examples=150, deadline=None)
@given(small_window(), st.integers(2, 4))
def test_cube_monotone_in_dimension(window, dim):
    res = detect_cube(window, dim)
    assume(res.witness is not None)
    assert detect_cube(window, dim - 1).witness is not None
