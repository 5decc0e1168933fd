from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ladderlab import setlang as sl
from ladderlab.errors import ConstantTermError, ParseError, ResourceError, SetLangError
from ladderlab.setlang import materialize, member, parse, render

from oracles import naive_member

leaves = st.one_of(
    st.sampled_from([sl.All(), sl.Odds(), sl.Evens(), sl.Squares(), sl.Cubes()]),
    st.builds(sl.ModSet, st.integers(1, 12)),
    st.lists(st.integers(-3, 3), min_size=1, max_size=3)
      .filter(lambda c: c[-1] != 0).map(lambda c: sl.Poly(tuple(c))),
    st.builds(sl.Geom, st.integers(1, 5),
              st.tuples(st.integers(2, 9), st.integers(1, 4)).map(lambda p: Fraction(*p))
                .filter(lambda r: r > 1)),
    st.lists(st.integers(1, 60), min_size=0, max_size=6, unique=True)
      .map(lambda xs: sl.Explicit(tuple(sorted(xs)))),
    st.lists(st.integers(1, 20), min_size=1, max_size=4).map(lambda g: sl.CombCube(tuple(g))),
    st.builds(sl.Diagonal, st.integers(0, 3)),
)

exprs = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.builds(sl.Union, inner, inner),
        st.builds(sl.Intersect, inner, inner),
        st.builds(sl.Diff, inner, inner),
        st.builds(sl.Complement, inner),
    ),
    max_leaves=5,
)


# examples

def test_keyword_and_union_parse():
    assert parse("odds") == sl.Odds()
    assert parse("union(modset(3), poly(0,1))") == sl.Union(sl.ModSet(3), sl.Poly((0, 1)))


def test_constant_term_rejected():
    with pytest.raises(ConstantTermError):
        parse("poly(c0=1, c1=2)")


def test_named_coefficients_without_constant():
    assert parse("poly(c0=0, c2=1)") == sl.Poly((0, 1))


def test_render_examples():
    assert render(sl.Odds()) == "odds"
    assert render(sl.Union(sl.ModSet(3), sl.Squares())) == "union(modset(3), squares)"
    assert render(sl.Explicit((1, 4, 9))) == "{1,4,9}"


def test_whitespace_insensitive():
    assert parse("  union ( modset( 3 ) ,\n squares )") == parse("union(modset(3),squares)")


@pytest.mark.parametrize("text,offset", [
    ("union(odds)", 10),
    ("odds odds", 5),
    ("union(", 6),
    ("modset(3", 8),
])
def test_parse_error_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_unknown_name_lists_expected():
    with pytest.raises(ParseError) as info:
        parse("foo")
    assert "odds" in info.value.expected


@pytest.mark.parametrize("text", ["modset(0)", "geom(1, 1)", "geom(0, 2)", "{3,2}", "{0,1}", "poly(0)"])
def test_invalid_parameters(text):
    with pytest.raises(SetLangError):
        parse(text)


def test_member_examples():
    assert member(sl.Squares(), 49)
    assert not member(sl.ModSet(3), 7)
    assert member(sl.CombCube((3, 5)), 8)


def test_materialize_examples():
    assert materialize(sl.Odds(), 10).tolist() == [1, 3, 5, 7, 9]
    assert materialize(sl.Squares(), 50).tolist() == [1, 4, 9, 16, 25, 36, 49]
    assert materialize(sl.CombCube((3, 5)), 20).tolist() == [3, 5, 8]


def test_poly_membership_with_dip():
    # t^2 - 100t dips far below zero before its positive tail starts at t = 101
    p = sl.Poly((-100, 1))
    assert member(p, 101) and member(p, 204)  # t = -1, t = 102
    assert not member(p, 100)
    assert materialize(p, 300).tolist() == [x for x in range(1, 301) if naive_member(p, x)]


def test_geom_ceiling():
    assert materialize(parse("geom(1, 3/2)"), 20).tolist() == [1, 2, 3, 4, 6, 8, 12, 18]


def test_window_cap():
    with pytest.raises(ResourceError):
        materialize(sl.All(), 11, cap=10)


def test_window_json_and_bitmap():
    w = materialize(sl.Squares(), 30)
    assert w.to_json() == {"expr": "squares", "N": 30, "elements": [1, 4, 9, 16, 25]}
    assert np.flatnonzero(w.bitmap).tolist() == w.tolist()
    with pytest.raises(ValueError):
        w.elements[0] = 2


def test_diagonal_examples():
    w = sl.diagonal_set(1, 10)
    assert w.tolist() == [1] and w.excluded == (2,)
    assert sl.diagonal_set(0, 10).tolist() == []
    a, b = sl.diagonal_set(2, 20), sl.diagonal_set(2, 20)
    assert a.to_json() == b.to_json()


def test_diagonal_enumeration_order():
    polys = sl.enumerate_polynomials(2)
    assert polys[:2] == [(-1,), (1,)]
    assert set(polys) == {(-1,), (1,), (-2,), (2,), (0, -1), (0, 1)}


@pytest.mark.parametrize("height", [1, 2, 3, 4])
def test_diagonal_property(height):
    rec = sl.diagonal_construction(height)
    for e in rec.entries:
        if e.kept is None:
            continue
        p = sl.Poly(e.coeffs)
        assert naive_member(p, e.kept) and naive_member(p, e.dropped)
        assert e.kept in rec.included and e.dropped in rec.excluded
    assert not set(rec.included) & set(rec.excluded)


# properties

@settings(max_examples=150, deadline=None)
@given(exprs)
def test_render_round_trip(e):
    assert parse(render(e)) == e


@settings(max_examples=150, deadline=None)
@given(exprs, st.integers(1, 120))
def test_window_matches_membership(e, N):
    w = materialize(e, N)
    expected = [x for x in range(1, N + 1) if naive_member(e, x)]
    assert w.tolist() == expected
    assert all(member(e, x) == (x in w) for x in range(1, N + 1))


@settings(max_examples=100, deadline=None)
@given(exprs, st.integers(1, 150), st.integers(0, 150))
def test_monotone_windows(e, N, extra):
    assert materialize(e, N).issubset(materialize(e, N + extra))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4).filter(lambda c: c[-1] != 0),
       st.integers(1, 400))
def test_poly_member_matches_root_scan(coeffs, x):
    assert sl.poly_member(tuple(coeffs), x) == naive_member(sl.Poly(tuple(coeffs)), x)
