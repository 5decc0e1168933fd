"""Colorings, witnesses, densities and the certificate model."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch, MalformedCertificate
from .setlang import SetExpr, SortedWindow, ensure_expr, member

CERT_VERSION = 1
CLAIMS = ("no-mono-ap", "no-mono-walk", "witness-found", "threshold")


@dataclass(frozen=True, eq=False)
class Coloring:
    """An r-coloring of [1, N]; ``assignment[x - 1]`` is the color of x."""

    assignment: np.ndarray
    r: int

    def __post_init__(self):
        a = np.array(self.assignment, dtype=np.int64).reshape(-1)
        if self.r < 1:
            raise ValueError("a coloring needs at least one color")
        if a.size and (a.min() < 0 or a.max() >= self.r):
            raise ValueError(f"colors must lie in [0, {self.r})")
        a.setflags(write=False)
        object.__setattr__(self, "assignment", a)

    @property
    def N(self) -> int:
        return int(self.assignment.size)

    def color(self, x: int) -> int:
        return int(self.assignment[x - 1])

    def tolist(self) -> list:
        return self.assignment.tolist()

    def __len__(self):
        return self.N

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.r == other.r and np.array_equal(self.assignment, other.assignment)

    def __hash__(self):
        return hash((self.r, self.assignment.tobytes()))

    def __repr__(self):
        return f"Coloring(N={self.N}, r={self.r}, {self.tolist()[:16]}{'...' if self.N > 16 else ''})"


def same_partition(c1: Coloring, c2: Coloring) -> bool:
    """True iff the two colorings induce the same color classes."""
    if c1.N != c2.N:
        return False
    fwd, back = {}, {}
    for a, b in zip(c1.tolist(), c2.tolist()):
        if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
            return False
    return True


def modular_coloring(n: int, N: int) -> Coloring:
    if n < 1:
        raise ValueError("modulus must be positive")
    return Coloring(np.arange(1, N + 1) % n, n)


def product_coloring(c1: Coloring, c2: Coloring) -> Coloring:
    """Color x by the pair (c1(x), c2(x)), encoded as c1(x) * c2.r + c2(x)."""
    if c1.N != c2.N:
        raise DimensionMismatch(f"colorings cover [1,{c1.N}] and [1,{c2.N}]")
    return Coloring(c1.assignment * c2.r + c2.assignment, c1.r * c2.r)


def density(window: SortedWindow) -> Fraction:
    return Fraction(len(window), window.N) if window.N else Fraction(0)


def relative_density(expr: SetExpr | str, n: int, k: int) -> Fraction:
    """|S ∩ {n, 2n, ..., kn}| / k."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    expr = ensure_expr(expr)
    return Fraction(sum(member(expr, j * n) for j in range(1, k + 1)), k)


def check_growth(window: SortedWindow, epsilon) -> bool:
    """True iff s_{i+1} >= (1 + epsilon) * s_i for consecutive window elements."""
    if len(window) == 0:
        raise ValueError("growth check needs a nonempty window")
    factor = 1 + Fraction(epsilon)
    s = window.tolist()
    return all(b >= factor * a for a, b in zip(s, s[1:]))


# --------------------------------------------------------------------------
# Witnesses


@dataclass(frozen=True)
class APWitness:
    a: int
    d: int
    length: int
    color: int | None = None
    kind = "ap"

    @property
    def terms(self) -> list:
        return [self.a + j * self.d for j in range(self.length)]

    def to_json(self) -> dict:
        return {"kind": self.kind, "a": self.a, "d": self.d, "length": self.length, "color": self.color}


@dataclass(frozen=True)
class WalkWitness:
    vertices: tuple
    color: int | None = None
    kind = "walk"

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "color": self.color}


@dataclass(frozen=True)
class CubeWitness:
    generators: tuple
    kind = "cube"

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))

    def subset_sums(self) -> set:
        sums = set()
        for g in self.generators:
            sums |= {s + g for s in sums} | {g}
        return sums

    def to_json(self) -> dict:
        return {"kind": self.kind, "generators": list(self.generators)}


@dataclass(frozen=True)
class HomotheticWitness:
    x: int
    n: int
    kind = "homothetic"

    @property
    def terms(self) -> list:
        return [j * self.x for j in range(1, self.n + 1)]

    def to_json(self) -> dict:
        return {"kind": self.kind, "x": self.x, "n": self.n}


@dataclass(frozen=True)
class DifferenceSetWitness:
    H: tuple
    kind = "difference-set"

    def __post_init__(self):
        object.__setattr__(self, "H", tuple(int(h) for h in self.H))

    def to_json(self) -> dict:
        return {"kind": self.kind, "H": list(self.H)}


Witness = APWitness | WalkWitness | CubeWitness | HomotheticWitness | DifferenceSetWitness


def witness_from_json(obj: dict):
    try:
        kind = obj["kind"]
        if kind == "ap":
            return APWitness(int(obj["a"]), int(obj["d"]), int(obj["length"]), _opt_int(obj.get("color")))
        if kind == "walk":
            return WalkWitness(tuple(obj["vertices"]), _opt_int(obj.get("color")))
        if kind == "cube":
            return CubeWitness(tuple(obj["generators"]))
        if kind == "homothetic":
            return HomotheticWitness(int(obj["x"]), int(obj["n"]))
        if kind == "difference-set":
            return DifferenceSetWitness(tuple(obj["H"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"bad witness object: {exc}") from None
    raise MalformedCertificate(f"unknown witness kind {obj.get('kind')!r}")


def _opt_int(v):
    return None if v is None else int(v)


# --------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class Certificate:
    """A re-checkable claim about a set expression at window scale.

    ``extra`` holds claim-specific keys (``target``, ``outcome``, ``partition``,
    ``x_expr``, ``scale``) serialized after the fixed fields.
    """

    claim: str
    expr: str
    N: int
    r: int
    param: int
    coloring: Coloring | None = None
    witness: Witness | None = None
    extra: dict = field(default_factory=dict)
    version: int = CERT_VERSION

    def __post_init__(self):
        if self.claim not in CLAIMS:
            raise MalformedCertificate(f"unknown claim {self.claim!r}")
        if self.claim.startswith("no-mono") and self.coloring is None:
            raise MalformedCertificate(f"{self.claim} certificate needs a coloring")
        if self.claim == "witness-found" and self.witness is None:
            raise MalformedCertificate("witness-found certificate needs a witness")

    def to_json(self) -> dict:
        out = {
            "version": self.version,
            "claim": self.claim,
            "expr": self.expr,
            "N": self.N,
            "r": self.r,
            "param": self.param,
            "coloring": None if self.coloring is None else self.coloring.tolist(),
            "witness": None if self.witness is None else self.witness.to_json(),
        }
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, obj) -> "Certificate":
        if not isinstance(obj, dict):
            raise MalformedCertificate("certificate must be a JSON object")
        try:
            version = obj["version"]
            if version != CERT_VERSION:
                raise MalformedCertificate(f"unsupported certificate version {version!r}")
            r = int(obj["r"])
            raw = obj.get("coloring")
            coloring = None
            if raw is not None:
                if not isinstance(raw, list):
                    raise MalformedCertificate("coloring must be an array")
                coloring = Coloring(np.array(raw, dtype=np.int64), max(r, 1))
            wit = obj.get("witness")
            witness = None if wit is None else witness_from_json(wit)
            fixed = {"version", "claim", "expr", "N", "r", "param", "coloring", "witness"}
            extra = {k: v for k, v in obj.items() if k not in fixed}
            return cls(claim=obj["claim"], expr=str(obj["expr"]), N=int(obj["N"]), r=r,
                       param=int(obj["param"]), coloring=coloring, witness=witness,
                       extra=extra, version=version)
        except MalformedCertificate:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCertificate(f"malformed certificate: {exc}") from None

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificate(f"certificate is not valid JSON: {exc}") from None
        return cls.from_json(obj)
