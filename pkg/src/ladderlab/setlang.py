"""A small language for naming subsets of the positive integers.

Grammar (whitespace-insensitive)::

    expr     := keyword | call | explicit
    keyword  := "all" | "odds" | "evens" | "squares" | "cubes"
    call     := name "(" [arg ("," arg)*] ")"
    explicit := "{" [int ("," int)*] "}"

Calls are ``modset(n)``, ``poly(c1, ..., cd)`` or ``poly(c1=.., c2=..)``,
``geom(a, p/q)``, ``combcube(m1, ..., mk)``, ``diagonal(h)``,
``union(e, e)``, ``intersect(e, e)``, ``diff(e, e)`` and ``complement(e)``.
See ``docs/grammar.md`` for the full reference.

Every expression denotes a subset of Z+; the computable view of it is a
:class:`SortedWindow`, the truncation to ``[1, N]``.
"""

from __future__ import annotations

import bisect
import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ConstantTermError, ParseError, ResourceError, SetLangError

DEFAULT_WINDOW_CAP = 10**7
MAX_DIAGONAL_POLYS = 100_000


# --------------------------------------------------------------------------
# AST


class SetExpr:
    """Base class of all set-expression nodes."""

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class All(SetExpr):
    pass


@dataclass(frozen=True)
class Odds(SetExpr):
    pass


@dataclass(frozen=True)
class Evens(SetExpr):
    pass


@dataclass(frozen=True)
class Squares(SetExpr):
    pass


@dataclass(frozen=True)
class Cubes(SetExpr):
    pass


@dataclass(frozen=True)
class ModSet(SetExpr):
    """The positive multiples of ``n``."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise SetLangError(f"modset parameter must be positive, got {self.n}")


@dataclass(frozen=True)
class Poly(SetExpr):
    """P(Z) ∩ Z+ for P(x) = c1*x + ... + cd*x^d (no constant term)."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs or coeffs[-1] == 0:
            raise SetLangError("poly needs a nonzero leading coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class Geom(SetExpr):
    """{ceil(a * ratio**i) : i >= 0}."""

    a: int
    ratio: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.ratio))
        if self.a < 1:
            raise SetLangError(f"geom start must be positive, got {self.a}")
        if self.ratio <= 1:
            raise SetLangError(f"geom ratio must exceed 1, got {self.ratio}")


@dataclass(frozen=True)
class Explicit(SetExpr):
    elements: tuple

    def __post_init__(self):
        elements = tuple(int(e) for e in self.elements)
        if any(e < 1 for e in elements):
            raise SetLangError("explicit sets hold positive integers only")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise SetLangError("explicit set must be strictly increasing")
        object.__setattr__(self, "elements", elements)


@dataclass(frozen=True)
class CombCube(SetExpr):
    """All nonempty subset sums of a multiset of generators."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if not gens or any(g < 1 for g in gens):
            raise SetLangError("combcube needs one or more positive generators")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class Diagonal(SetExpr):
    height: int

    def __post_init__(self):
        if self.height < 0:
            raise SetLangError("diagonal height must be nonnegative")


@dataclass(frozen=True)
class Union(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Intersect(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Diff(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Complement(SetExpr):
    inner: SetExpr


_KEYWORDS = {"all": All, "odds": Odds, "evens": Evens, "squares": Squares, "cubes": Cubes}
_BINARY = {"union": Union, "intersect": Intersect, "diff": Diff}
_CALLS = {"modset", "poly", "geom", "combcube", "diagonal", "complement", *_BINARY}


# --------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(){},/=]))")


@dataclass
class _Tok:
    kind: str  # "int" | "name" | punct char | "eof"
    text: str
    pos: int


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", _byte_offset(text, bad),
                             {"identifier", "integer", "(", ")", "{", "}", ","})
        kind = m.lastgroup
        start = m.start(kind)
        tok_text = m.group(kind)
        tokens.append(_Tok(tok_text if kind == "punct" else kind, tok_text, start))
        pos = m.end()
    tokens.append(_Tok("eof", "", len(text)))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.tokens[self.i]

    def advance(self) -> _Tok:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok, expected=()):
        return ParseError(message, _byte_offset(self.text, tok.pos), expected)

    def expect(self, kind: str, what=None) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise self.error(f"unexpected {shown!r}", tok, {what or kind})
        return self.advance()

    def parse(self) -> SetExpr:
        expr = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise self.error(f"trailing input {tok.text!r}", tok, {"end of input"})
        return expr

    def expr(self) -> SetExpr:
        tok = self.peek()
        if tok.kind == "{":
            return self.explicit()
        if tok.kind != "name":
            raise self.error(f"unexpected {tok.text or 'end of input'!r}", tok, {"identifier", "{"})
        name = tok.text.lower()
        if name in _KEYWORDS:
            self.advance()
            return _KEYWORDS[name]()
        if name not in _CALLS:
            raise self.error(f"unknown set name {tok.text!r}", tok, set(_KEYWORDS) | _CALLS | {"{"})
        self.advance()
        self.expect("(")
        try:
            node = getattr(self, "call_" + name)(tok)
        except SetLangError as exc:
            if isinstance(exc, (ParseError, ConstantTermError)):
                raise
            raise self.error(str(exc), tok) from None
        self.expect(")", ")")
        return node

    def explicit(self) -> SetExpr:
        open_tok = self.advance()
        values = []
        if self.peek().kind != "}":
            values.append(self.integer())
            while self.peek().kind == ",":
                self.advance()
                values.append(self.integer())
        self.expect("}", "}")
        try:
            return Explicit(tuple(values))
        except SetLangError as exc:
            raise self.error(str(exc), open_tok) from None

    def integer(self) -> int:
        return int(self.expect("int", "integer").text)

    def int_list(self) -> list:
        values = [self.integer()]
        while self.peek().kind == ",":
            self.advance()
            values.append(self.integer())
        return values

    def comma(self):
        self.expect(",", ",")

    def call_modset(self, tok):
        return ModSet(self.integer())

    def call_diagonal(self, tok):
        return Diagonal(self.integer())

    def call_combcube(self, tok):
        return CombCube(tuple(self.int_list()))

    def call_geom(self, tok):
        a = self.integer()
        self.comma()
        num = self.integer()
        den = 1
        if self.peek().kind == "/":
            self.advance()
            den = self.integer()
            if den == 0:
                raise self.error("zero denominator", self.tokens[self.i - 1])
        return Geom(a, Fraction(num, den))

    def call_poly(self, tok):
        named = {}
        positional = []
        while True:
            t = self.peek()
            if t.kind == "name":
                m = re.fullmatch(r"[cC](\d+)", t.text)
                if m is None:
                    raise self.error(f"bad coefficient name {t.text!r}", t, {"cK=", "integer"})
                self.advance()
                self.expect("=", "=")
                idx = int(m.group(1))
                if idx in named:
                    raise self.error(f"coefficient c{idx} given twice", t)
                named[idx] = (self.integer(), t)
            else:
                positional.append(self.integer())
            if self.peek().kind != ",":
                break
            self.advance()
        if named and positional:
            raise self.error("poly arguments must be all positional or all named", tok)
        if named:
            const, ctok = named.pop(0, (0, None))
            if const != 0:
                raise ConstantTermError(
                    f"poly constant term must be 0 (P(0)=0), got c0={const} "
                    f"at byte {_byte_offset(self.text, ctok.pos)}")
            if not named:
                raise self.error("poly needs a nonconstant term", tok)
            positional = [named.get(i, (0, None))[0] for i in range(1, max(named) + 1)]
        while positional and positional[-1] == 0:
            positional.pop()
        if not positional:
            raise self.error("poly needs a nonzero coefficient", tok)
        return Poly(tuple(positional))

    def call_complement(self, tok):
        return Complement(self.expr())

    def _binary(self, tok):
        left = self.expr()
        self.comma()
        right = self.expr()
        return _BINARY[tok.text.lower()](left, right)

    call_union = call_intersect = call_diff = _binary


def parse(text: str) -> SetExpr:
    """Parse ``text`` into a :class:`SetExpr`.

    Raises ParseError (carrying a byte ``offset`` and the ``expected`` token
    set) on malformed input and ConstantTermError for ``poly(c0=k, ...)``
    with ``k != 0``.
    """
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# Rendering


def _render_ratio(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def render(expr: SetExpr) -> str:
    if isinstance(expr, (All, Odds, Evens, Squares, Cubes)):
        return type(expr).__name__.lower()
    if isinstance(expr, ModSet):
        return f"modset({expr.n})"
    if isinstance(expr, Poly):
        return "poly(" + ", ".join(map(str, expr.coeffs)) + ")"
    if isinstance(expr, Geom):
        return f"geom({expr.a}, {_render_ratio(expr.ratio)})"
    if isinstance(expr, Explicit):
        return "{" + ",".join(map(str, expr.elements)) + "}"
    if isinstance(expr, CombCube):
        return "combcube(" + ", ".join(map(str, expr.generators)) + ")"
    if isinstance(expr, Diagonal):
        return f"diagonal({expr.height})"
    if isinstance(expr, (Union, Intersect, Diff)):
        return f"{type(expr).__name__.lower()}({render(expr.left)}, {render(expr.right)})"
    if isinstance(expr, Complement):
        return f"complement({render(expr.inner)})"
    raise TypeError(f"not a set expression: {expr!r}")


# --------------------------------------------------------------------------
# Polynomial helpers


def iroot(n: int, d: int) -> int:
    """floor(n ** (1/d)) for n >= 0, exact on Python ints."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    if n < 2 or d == 1:
        return n
    try:
        x = int(round(n ** (1.0 / d)))
    except OverflowError:
        x = 1 << ((n.bit_length() + d - 1) // d)
    while x ** d > n:
        x -= 1
    while (x + 1) ** d <= n:
        x += 1
    return x


def poly_eval(coeffs, t: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * t + c
    return v * t


def _tail_start(coeffs) -> int:
    # For |t| >= T0, |P(t)| >= |lead|*|t|^d / 2 and P is monotone on each side.
    lead = abs(coeffs[-1])
    rest = sum(abs(c) for c in coeffs[:-1])
    return max(1, -(-2 * rest // lead))


def _poly_radius(coeffs, bound: int) -> int:
    """Every t with |P(t)| <= bound satisfies |t| <= the returned radius."""
    d = len(coeffs)
    return max(_tail_start(coeffs), iroot(2 * max(bound, 0) // abs(coeffs[-1]), d))


def poly_values_upto(coeffs, bound: int) -> list:
    """Sorted distinct values of P(Z) ∩ [1, bound]."""
    if bound < 1:
        return []
    coeffs = tuple(coeffs)
    if len(coeffs) == 1:
        c = abs(coeffs[0])
        return list(range(c, bound + 1, c))
    radius = _poly_radius(coeffs, bound)
    vals = set()
    for t in range(-radius, radius + 1):
        v = poly_eval(coeffs, t)
        if 1 <= v <= bound:
            vals.add(v)
    return sorted(vals)


def _monotone_search(coeffs, lo: int, hi: int, x: int) -> bool:
    if lo > hi:
        return False
    increasing = poly_eval(coeffs, hi) >= poly_eval(coeffs, lo)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = poly_eval(coeffs, mid)
        if v == x:
            return True
        if (v < x) == increasing:
            lo = mid + 1
        else:
            hi = mid - 1
    return False


def poly_member(coeffs, x: int) -> bool:
    """Decide whether P(t) = x has an integer solution t."""
    coeffs = tuple(coeffs)
    t0 = _tail_start(coeffs)
    for t in range(-t0 + 1, t0):
        if poly_eval(coeffs, t) == x:
            return True
    radius = _poly_radius(coeffs, x)
    return (_monotone_search(coeffs, t0, radius, x)
            or _monotone_search(coeffs, -radius, -t0, x))


def _poly_positive_image_is_finite(coeffs) -> bool:
    return len(coeffs) % 2 == 0 and coeffs[-1] < 0


def geom_values_upto(a: int, ratio: Fraction, bound: int) -> list:
    vals = []
    p, q = ratio.numerator, ratio.denominator
    num, den = a, 1
    while True:
        v = -((-num) // den)
        if v > bound:
            return vals
        if not vals or vals[-1] != v:
            vals.append(v)
        num *= p
        den *= q


def _subset_sums_reach(generators, bound: int) -> int:
    """Bitmask whose bit s is set iff s in [1, bound] is a nonempty subset sum."""
    mask = (1 << (bound + 1)) - 1
    reach = 0
    for g in generators:
        if g > bound:
            continue
        reach = (reach | (reach << g) | (1 << g)) & mask
    return reach


# --------------------------------------------------------------------------
# Diagonal construction (one kept / one dropped value per polynomial)


def _vectors_with_l1(d: int, budget: int):
    """Coefficient vectors (c1..cd), cd != 0, with sum |ci| <= budget."""
    def rec(prefix, remaining, slots):
        if slots == 1:
            for mag in range(1, remaining + 1):
                yield prefix + (-mag,)
                yield prefix + (mag,)
            return
        for mag in range(0, remaining + 1):
            signs = (0,) if mag == 0 else (-mag, mag)
            for c in signs:
                yield from rec(prefix + (c,), remaining - mag, slots - 1)

    yield from rec((), budget, d)


def enumerate_polynomials(height: int) -> list:
    """Nonconstant P with P(0)=0 and degree + L1 norm - 1 <= height.

    Ordered by (degree + L1 norm, coefficient vector).
    """
    polys = []
    for d in range(1, height + 1):
        for vec in _vectors_with_l1(d, height - d + 1):
            polys.append(vec)
            if len(polys) > MAX_DIAGONAL_POLYS:
                raise ResourceError(f"diagonal height {height} enumerates more than "
                                    f"{MAX_DIAGONAL_POLYS} polynomials")
    polys.sort(key=lambda v: (len(v) + sum(map(abs, v)), v))
    return polys


@dataclass(frozen=True)
class DiagonalEntry:
    coeffs: tuple
    kept: int | None
    dropped: int | None


@dataclass(frozen=True)
class DiagonalRecord:
    height: int
    included: tuple
    excluded: tuple
    entries: tuple

    @property
    def skipped(self) -> tuple:
        """Polynomials with fewer than two positive values (nothing to keep and drop)."""
        return tuple(e.coeffs for e in self.entries if e.kept is None)


def _least_value(coeffs, pred, floor: int = 0):
    """Least v > floor in P(Z) ∩ Z+ with pred(v); P must have infinite positive image."""
    bound = max(16, 2 * floor)
    while True:
        for v in poly_values_upto(coeffs, bound):
            if v > floor and pred(v):
                return v
        bound *= 4


@functools.lru_cache(maxsize=64)
def diagonal_construction(height: int) -> DiagonalRecord:
    included: set = set()
    excluded: set = set()
    entries = []
    for coeffs in enumerate_polynomials(height):
        if _poly_positive_image_is_finite(coeffs):
            image = poly_values_upto(coeffs, max(
                poly_eval(coeffs, t) for t in range(-_tail_start(coeffs), _tail_start(coeffs) + 1)))
            if len(image) < 2:
                entries.append(DiagonalEntry(coeffs, None, None))
                continue
            keep = next((v for v in image if v not in excluded), None)
            drop = next((v for v in image if v > (keep or 0) and v not in included and v != keep), None)
            if keep is None or drop is None:
                entries.append(DiagonalEntry(coeffs, None, None))
                continue
        else:
            keep = _least_value(coeffs, lambda v: v not in excluded)
            drop = _least_value(coeffs, lambda v: v not in included and v != keep, keep)
        included.add(keep)
        excluded.add(drop)
        entries.append(DiagonalEntry(coeffs, keep, drop))
    return DiagonalRecord(height, tuple(sorted(included)), tuple(sorted(excluded)), tuple(entries))


# --------------------------------------------------------------------------
# Membership


def member(expr: SetExpr, x: int) -> bool:
    if x < 1:
        return False
    if isinstance(expr, All):
        return True
    if isinstance(expr, Odds):
        return x % 2 == 1
    if isinstance(expr, Evens):
        return x % 2 == 0
    if isinstance(expr, ModSet):
        return x % expr.n == 0
    if isinstance(expr, Squares):
        return iroot(x, 2) ** 2 == x
    if isinstance(expr, Cubes):
        return iroot(x, 3) ** 3 == x
    if isinstance(expr, Poly):
        return poly_member(expr.coeffs, x)
    if isinstance(expr, Geom):
        vals = geom_values_upto(expr.a, expr.ratio, x)
        return bool(vals) and vals[-1] == x
    if isinstance(expr, Explicit):
        i = bisect.bisect_left(expr.elements, x)
        return i < len(expr.elements) and expr.elements[i] == x
    if isinstance(expr, CombCube):
        return bool(_subset_sums_reach(expr.generators, x) >> x & 1)
    if isinstance(expr, Diagonal):
        inc = diagonal_construction(expr.height).included
        i = bisect.bisect_left(inc, x)
        return i < len(inc) and inc[i] == x
    if isinstance(expr, Union):
        return member(expr.left, x) or member(expr.right, x)
    if isinstance(expr, Intersect):
        return member(expr.left, x) and member(expr.right, x)
    if isinstance(expr, Diff):
        return member(expr.left, x) and not member(expr.right, x)
    if isinstance(expr, Complement):
        return not member(expr.inner, x)
    raise TypeError(f"not a set expression: {expr!r}")


# --------------------------------------------------------------------------
# Windows


@dataclass(frozen=True, eq=False)
class SortedWindow:
    """S ∩ [1, N] as a sorted element array plus a membership bitmap.

    ``bitmap`` has length N + 1 and is indexed by the integer itself
    (slot 0 is always False). Both arrays are read-only.
    """

    N: int
    elements: np.ndarray
    expr: str | None = None
    excluded: tuple = ()
    bitmap: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("window bound must be nonnegative")
        elements = np.asarray(self.elements, dtype=np.int64).reshape(-1)
        if elements.size:
            if elements[0] < 1 or elements[-1] > self.N:
                raise ValueError(f"window elements must lie in [1, {self.N}]")
            if np.any(np.diff(elements) <= 0):
                raise ValueError("window elements must be strictly increasing")
        bitmap = np.zeros(self.N + 1, dtype=bool)
        bitmap[elements] = True
        elements.setflags(write=False)
        bitmap.setflags(write=False)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "bitmap", bitmap)
        object.__setattr__(self, "excluded", tuple(int(e) for e in self.excluded))

    @classmethod
    def from_bitmap(cls, N: int, bitmap, expr=None, excluded=()) -> "SortedWindow":
        bitmap = np.asarray(bitmap, dtype=bool)
        return cls(N, np.flatnonzero(bitmap[1:N + 1]) + 1, expr=expr, excluded=excluded)

    def __contains__(self, x) -> bool:
        return 1 <= x <= self.N and bool(self.bitmap[x])

    def __len__(self) -> int:
        return int(self.elements.size)

    def __iter__(self):
        return iter(self.elements.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SortedWindow):
            return NotImplemented
        return self.N == other.N and np.array_equal(self.elements, other.elements)

    def __hash__(self):
        return hash((self.N, self.elements.tobytes()))

    def tolist(self) -> list:
        return self.elements.tolist()

    def issubset(self, other: "SortedWindow") -> bool:
        return all(x in other for x in self)

    def to_json(self) -> dict:
        out = {"expr": self.expr, "N": self.N, "elements": self.tolist()}
        if self.excluded:
            out["excluded"] = list(self.excluded)
        return out


def _check_cap(N: int, cap: int | None):
    if N < 1:
        raise ValueError(f"window bound must be positive, got {N}")
    if cap is not None and N > cap:
        raise ResourceError(f"window bound {N} exceeds the configured cap {cap}")


def _bitmap(expr: SetExpr, N: int) -> np.ndarray:
    bm = np.zeros(N + 1, dtype=bool)
    if isinstance(expr, All):
        bm[1:] = True
    elif isinstance(expr, Odds):
        bm[1::2] = True
    elif isinstance(expr, Evens):
        bm[2::2] = True
    elif isinstance(expr, ModSet):
        bm[expr.n::expr.n] = True
    elif isinstance(expr, Squares):
        r = np.arange(1, iroot(N, 2) + 1, dtype=np.int64)
        bm[r * r] = True
    elif isinstance(expr, Cubes):
        r = np.arange(1, iroot(N, 3) + 1, dtype=np.int64)
        bm[r * r * r] = True
    elif isinstance(expr, Poly):
        bm[poly_values_upto(expr.coeffs, N)] = True
    elif isinstance(expr, Geom):
        bm[geom_values_upto(expr.a, expr.ratio, N)] = True
    elif isinstance(expr, Explicit):
        bm[[e for e in expr.elements if e <= N]] = True
    elif isinstance(expr, CombCube):
        for g in expr.generators:
            if g > N:
                continue
            shifted = np.zeros_like(bm)
            shifted[g:] = bm[:N + 1 - g]
            bm |= shifted
            bm[g] = True
    elif isinstance(expr, Diagonal):
        bm[[v for v in diagonal_construction(expr.height).included if v <= N]] = True
    elif isinstance(expr, Union):
        bm = _bitmap(expr.left, N) | _bitmap(expr.right, N)
    elif isinstance(expr, Intersect):
        bm = _bitmap(expr.left, N) & _bitmap(expr.right, N)
    elif isinstance(expr, Diff):
        bm = _bitmap(expr.left, N) & ~_bitmap(expr.right, N)
    elif isinstance(expr, Complement):
        bm = ~_bitmap(expr.inner, N)
    else:
        raise TypeError(f"not a set expression: {expr!r}")
    bm[0] = False
    return bm


def materialize(expr: SetExpr, N: int, cap: int | None = DEFAULT_WINDOW_CAP) -> SortedWindow:
    """The window ``expr ∩ [1, N]``."""
    if isinstance(expr, str):
        expr = parse(expr)
    _check_cap(N, cap)
    excluded = ()
    if isinstance(expr, Diagonal):
        excluded = diagonal_construction(expr.height).excluded
    return SortedWindow.from_bitmap(N, _bitmap(expr, N), expr=render(expr), excluded=excluded)


def diagonal_set(height: int, N: int, cap: int | None = DEFAULT_WINDOW_CAP) -> SortedWindow:
    """Included values of the diagonal construction at ``height``, truncated to [1, N].

    For every nonconstant P with P(0)=0 and degree + L1 norm - 1 <= height,
    in a fixed order, keeps the least value of P(Z) ∩ Z+ not yet dropped and
    drops the next value above it not yet kept. The full drop list is kept in
    ``window.excluded``.
    """
    if height < 0:
        raise ValueError("height must be nonnegative")
    return materialize(Diagonal(height), N, cap)


def window_from_elements(elements, N: int, expr: str | None = None) -> SortedWindow:
    return SortedWindow(N, sorted(set(int(e) for e in elements if 1 <= e <= N)), expr=expr)


def full_window(N: int) -> SortedWindow:
    return SortedWindow(N, np.arange(1, N + 1), expr="all")


def ensure_expr(expr) -> SetExpr:
    return parse(expr) if isinstance(expr, str) else expr


__all__ = [
    "SetExpr", "All", "Odds", "Evens", "Squares", "Cubes", "ModSet", "Poly", "Geom",
    "Explicit", "CombCube", "Diagonal", "Union", "Intersect", "Diff", "Complement",
    "SortedWindow", "parse", "render", "member", "materialize", "diagonal_set",
    "diagonal_construction", "enumerate_polynomials", "poly_values_upto", "poly_member",
    "iroot", "DEFAULT_WINDOW_CAP", "window_from_elements", "full_window", "ensure_expr",
]
