"""Independent re-checking of certificates.

The checks here deliberately use plain loops rather than the vectorized
searches and the backtracking engine, so a bug in those does not hide
itself. The one exception is threshold exhaustion beyond the enumeration
limit, which falls back to replaying the engine (reported as such).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import Certificate
from .errors import MalformedCertificate
from .setlang import materialize, parse

ENUMERATION_LIMIT = 2**14


@dataclass
class VerifyReport:
    ok: bool
    claim: str
    discrepancy: str | None = None
    position: int | None = None
    checks: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"ok": self.ok, "claim": self.claim, "discrepancy": self.discrepancy,
                "position": self.position, "checks": self.checks}


class _Fail(Exception):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


def naive_mono_ap(colors: list, steps: list, L: int):
    """First (a, d) in (a, d) order with an L-term monochromatic AP; ``colors`` is 1-based."""
    N = len(colors) - 1
    for a in range(1, N + 1):
        for d in steps:
            if a + (L - 1) * d > N:
                break
            if all(colors[a + j * d] == colors[a] for j in range(1, L)):
                return a, d
    return None


def naive_longest_walk(colors: list, steps: list) -> tuple:
    """(length, end) of a longest monochromatic walk; ``colors`` is 1-based."""
    N = len(colors) - 1
    ending = [0] * (N + 1)
    best, best_end = 0, None
    for x in range(1, N + 1):
        ending[x] = 1 + max((ending[x - s] for s in steps if s < x and colors[x - s] == colors[x]), default=0)
        if ending[x] > best:
            best, best_end = ending[x], x
    return best, best_end


def _contains_target(target, colors, steps, param) -> bool:
    if target == "ap":
        if param == 1:
            return bool(steps) and steps[0] <= len(colors) - 1
        return naive_mono_ap(colors, steps, param) is not None
    return naive_longest_walk(colors, steps)[0] >= param


def _check_coloring(cert, expected_len):
    if cert.coloring is None:
        raise _Fail("certificate carries no coloring")
    if cert.coloring.N != expected_len:
        raise _Fail(f"coloring covers [1,{cert.coloring.N}], expected [1,{expected_len}]")
    if cert.coloring.N and max(cert.coloring.tolist()) >= cert.r:
        raise _Fail(f"coloring uses a color outside [0,{cert.r})")
    return [None] + cert.coloring.tolist()


def _check_partition(cert, colors, steps, report):
    k = int(cert.extra.get("k", cert.r - 2))
    rows = cert.extra["partition"]
    if cert.r != k + 2:
        raise _Fail(f"partition coloring should use {k + 2} colors, certificate says {cert.r}")
    owner = [0] * len(colors)
    nxt = 1
    for t, row in enumerate(rows, start=1):
        start, length, forbidden = int(row["start"]), int(row["len"]), int(row["forbidden"])
        if start != nxt or length < 1:
            raise _Fail(f"interval {t} starts at {start}, expected {nxt}", start)
        if t == 1 and length != 1:
            raise _Fail("first interval must be {1}", 1)
        if forbidden != t % (k + 2):
            raise _Fail(f"interval {t} forbids {forbidden}, expected {t % (k + 2)}", start)
        if row.get("partial") and t != len(rows):
            raise _Fail(f"only the last interval may be partial (interval {t})", start)
        for x in range(start, start + length):
            owner[x] = t
            if colors[x] == forbidden:
                raise _Fail(f"position {x} has the forbidden color of interval {t}", x)
        nxt = start + length
    if nxt != len(colors):
        raise _Fail(f"partition covers [1,{nxt - 1}], window is [1,{len(colors) - 1}]")
    report.checks.append("partition-forbidden-colors")
    for x in range(1, len(colors)):
        for s in steps:
            y = x - s
            if y < 1:
                break
            if colors[y] == colors[x] and owner[x] - owner[y] >= 2:
                raise _Fail(f"monochromatic edge {y}-{x} skips an interval", x)
    report.checks.append("no-far-monochromatic-edge")
    partial = len(rows) if rows and rows[-1].get("partial") else None
    lowest = [0] * len(colors)
    for x in range(1, len(colors)):
        lowest[x] = min([owner[x]] + [lowest[x - s] for s in steps if s < x and colors[x - s] == colors[x]])
        if owner[x] != partial and owner[x] - lowest[x] + 1 > k + 1:
            raise _Fail(f"a monochromatic walk ending at {x} spans more than {k + 1} intervals", x)
    report.checks.append("walk-confinement")


def _check_witness(cert, steps_set, report):
    w = cert.witness
    N = cert.N
    colors = None
    if cert.coloring is not None:
        colors = _check_coloring(cert, N)
    if w.kind == "ap":
        if w.length != cert.param:
            raise _Fail(f"witness length {w.length} differs from param {cert.param}")
        terms = [w.a + j * w.d for j in range(w.length)]
        if w.d not in steps_set:
            raise _Fail(f"common difference {w.d} is not in the set", w.a)
        if terms[0] < 1 or terms[-1] > N:
            raise _Fail(f"AP leaves [1,{N}]", terms[-1])
        if "x_expr" in cert.extra:
            x_window = materialize(parse(cert.extra["x_expr"]), N, None)
            for t in terms:
                if t not in x_window:
                    raise _Fail(f"AP term {t} is not in {cert.extra['x_expr']}", t)
        if colors is not None:
            for t in terms:
                if colors[t] != w.color:
                    raise _Fail(f"position {t} has color {colors[t]}, witness says {w.color}", t)
    elif w.kind == "walk":
        v = list(w.vertices)
        if not v or v[0] < 1 or v[-1] > N:
            raise _Fail("walk is empty or leaves the window")
        for a, b in zip(v, v[1:]):
            if b - a not in steps_set:
                raise _Fail(f"step {a}->{b} is not in the set", b)
        if colors is not None:
            for t in v:
                if colors[t] != w.color:
                    raise _Fail(f"position {t} has color {colors[t]}, witness says {w.color}", t)
    elif w.kind == "cube":
        sums = set()
        for g in w.generators:
            sums |= {s + g for s in sums} | {g}
        for s in sorted(sums):
            if s not in steps_set:
                raise _Fail(f"subset sum {s} is not in the set", s)
    elif w.kind == "homothetic":
        for j in range(1, w.n + 1):
            if j * w.x > N or j * w.x not in steps_set:
                raise _Fail(f"{j}*{w.x} = {j * w.x} is not in the window", j * w.x)
    elif w.kind == "difference-set":
        H = list(w.H)
        if any(a >= b for a, b in zip(H, H[1:])):
            raise _Fail("H is not strictly increasing")
        for i, a in enumerate(H):
            for b in H[i + 1:]:
                if b - a not in steps_set:
                    raise _Fail(f"difference {b} - {a} is not in the set", b)
    report.checks.append(f"witness-{w.kind}")


def _check_threshold(cert, steps, report, enumeration_limit, budget):
    target = cert.extra.get("target")
    outcome = cert.extra.get("outcome")
    if target not in ("ap", "walk") or outcome not in ("found", "exceeded"):
        raise MalformedCertificate("threshold certificate needs target ap|walk and outcome found|exceeded")
    N = cert.N
    avoid_len = N - 1 if outcome == "found" else N
    colors = _check_coloring(cert, avoid_len)
    window_steps = [s for s in steps if s <= avoid_len]
    if _contains_target(target, colors, window_steps, cert.param):
        raise _Fail(f"attached coloring of [1,{avoid_len}] contains the target")
    report.checks.append("avoidance")
    if outcome == "exceeded":
        return
    if cert.r ** N <= enumeration_limit:
        for combo in itertools.product(range(cert.r), repeat=N):
            full = (None,) + combo
            if not _contains_target(target, full, steps, cert.param):
                raise _Fail(f"coloring {list(combo)} of [1,{N}] avoids the target")
        report.checks.append("exhaustion-enumeration")
    else:
        from .ramsey import every_coloring_contains
        if not every_coloring_contains(target, parse(cert.expr), cert.param, cert.r, N, budget=budget):
            raise _Fail(f"engine replay found an avoiding coloring of [1,{N}]")
        report.checks.append("exhaustion-engine-replay")


def verify_certificate(cert: Certificate | dict | str, *, enumeration_limit: int = ENUMERATION_LIMIT,
                       budget: int = 10**8) -> VerifyReport:
    """Replay a certificate's claim from scratch.

    Raises MalformedCertificate for structurally broken input and ParseError
    when the set expression does not parse. Returns a report with the first
    discrepancy otherwise.
    """
    if isinstance(cert, str):
        cert = Certificate.loads(cert)
    elif isinstance(cert, dict):
        cert = Certificate.from_json(cert)
    expr = parse(cert.expr)
    if cert.N < 0:
        raise MalformedCertificate("N must be nonnegative")
    report = VerifyReport(True, cert.claim)
    window = materialize(expr, max(cert.N, 1), None)
    steps = [s for s in window.tolist() if s <= cert.N]
    try:
        if cert.claim == "no-mono-ap":
            colors = _check_coloring(cert, cert.N)
            hit = naive_mono_ap(colors, steps, cert.param) if cert.param > 1 else (
                (1, steps[0]) if steps and cert.N else None)
            if hit is not None:
                raise _Fail(f"monochromatic {cert.param}-AP at a={hit[0]}, d={hit[1]}", hit[0])
            report.checks.append("no-mono-ap")
        elif cert.claim == "no-mono-walk":
            colors = _check_coloring(cert, cert.N)
            length, end = naive_longest_walk(colors, steps)
            if length >= cert.param:
                raise _Fail(f"monochromatic walk with {length} elements ends at {end}", end)
            report.checks.append("no-mono-walk")
            if "partition" in cert.extra:
                _check_partition(cert, colors, steps, report)
        elif cert.claim == "witness-found":
            _check_witness(cert, set(steps), report)
        else:
            _check_threshold(cert, steps, report, enumeration_limit, budget)
    except _Fail as exc:
        report.ok = False
        report.discrepancy = str(exc)
        report.position = exc.position
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificate(f"malformed certificate: {exc}") from None
    return report
