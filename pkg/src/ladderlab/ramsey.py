"""Backtracking threshold engine.

Given a set S, a target structure (an L-term AP with common difference in
S, or a walk over S with m elements) and r colors, find the least N such
that every r-coloring of [1, N] contains the target. Avoidance is
hereditary, so N is one more than the longest avoiding coloring.

The search extends colorings left to right, trying colors in ascending
order, with colors introduced in canonical order (a new color only after
all smaller ones have appeared). The tree is cut at a fixed depth into
independent subtrees; results merge in prefix order, so the answer is the
same for any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import Certificate, Coloring
from .errors import Interrupted
from .setlang import DEFAULT_WINDOW_CAP, SetExpr, ensure_expr, materialize, render

SPLIT_DEPTH = 12
DEFAULT_BUDGET = 10**8
_CLOCK_EVERY = 1 << 14


@dataclass(frozen=True)
class _Task:
    kind: str
    param: int
    steps: tuple
    r: int
    nmax: int
    prefix: tuple
    stop_depth: int
    budget: int
    deadline: float | None


@dataclass
class _Outcome:
    best_len: int
    best: tuple
    nodes: int
    reached: bool = False
    frontier: list = field(default_factory=list)
    interrupted: str | None = None


def _run(task: _Task) -> _Outcome:
    kind, L, steps, r, nmax = task.kind, task.param, task.steps, task.r, task.nmax
    colors = [-1] * (nmax + 2)
    seen_max = [-1] * (nmax + 2)
    chain = [0] * (nmax + 2)
    next_color = [0] * (nmax + 2)

    def ap_ok(x, c):
        if L == 1:
            return not steps or steps[0] > x
        for d in steps:
            if (L - 1) * d >= x:
                break
            y = x - d
            j = 1
            while colors[y] == c:
                if j == L - 1:
                    return False
                j += 1
                y -= d
        return True

    def walk_ok(x, c):
        longest = 0
        for s in steps:
            if s >= x:
                break
            y = x - s
            if colors[y] == c and chain[y] > longest:
                longest = chain[y]
        if longest + 1 >= L:
            return False
        chain[x] = longest + 1
        return True

    ok = ap_ok if kind == "ap" else walk_ok

    base = len(task.prefix)
    for x, c in enumerate(task.prefix, start=1):
        if not ok(x, c):
            raise ValueError(f"prefix is not avoiding at position {x}")
        colors[x] = c
        seen_max[x] = max(seen_max[x - 1], c)

    out = _Outcome(base, tuple(task.prefix), 0)
    if base >= nmax:
        out.reached = True
        return out
    nodes = 0
    x = base + 1
    next_color[x] = 0
    while x > base:
        if x > nmax:
            out.reached = True
            out.best = tuple(colors[1:nmax + 1])
            out.best_len = nmax
            break
        if x > task.stop_depth:
            out.frontier.append(tuple(colors[1:x]))
            x -= 1
            continue
        c = next_color[x]
        limit = min(r - 1, seen_max[x - 1] + 1)
        placed = False
        while c <= limit:
            nodes += 1
            if ok(x, c):
                placed = True
                break
            c += 1
        if placed:
            colors[x] = c
            seen_max[x] = max(seen_max[x - 1], c)
            next_color[x] = c + 1
            x += 1
            next_color[x] = 0
        else:
            if x - 1 > out.best_len:
                out.best_len = x - 1
                out.best = tuple(colors[1:x])
            x -= 1
        if nodes > task.budget:
            out.interrupted = f"node budget {task.budget} exhausted"
            break
        if task.deadline is not None and nodes % _CLOCK_EVERY == 0 and time.time() > task.deadline:
            out.interrupted = "time limit reached"
            break
    out.nodes = nodes
    return out


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of a threshold search.

    ``outcome`` is "found" (``N`` is the threshold and ``coloring`` an
    extremal coloring of [1, N-1]) or "exceeded" (``N`` is Nmax and
    ``coloring`` avoids the target on all of [1, Nmax]).
    """

    target: str
    param: int
    expr: str
    r: int
    outcome: str
    N: int
    coloring: Coloring
    nodes: int
    elapsed_ms: int

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    def to_certificate(self) -> Certificate:
        return Certificate(
            claim="threshold", expr=self.expr, N=self.N, r=self.r, param=self.param,
            coloring=self.coloring,
            extra={"target": self.target, "outcome": self.outcome, "scale": "window"},
        )

    def stats(self) -> dict:
        return {"nodes": self.nodes, "elapsed_ms": self.elapsed_ms}


def _map_tasks(tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield _run(t)
        return
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        chunk = max(1, len(tasks) // (workers * 8))
        yield from pool.map(_run, tasks, chunksize=chunk)
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def _threshold(kind: str, expr, param: int, r: int, nmax: int, *, workers: int = 1,
               budget: int = DEFAULT_BUDGET, time_limit: float | None = None,
               window_cap: int | None = DEFAULT_WINDOW_CAP) -> ThresholdResult:
    if param < 1 or r < 1 or nmax < 1:
        raise ValueError("structure size, color count and Nmax must be positive")
    expr = ensure_expr(expr)
    steps = tuple(materialize(expr, nmax, window_cap).tolist())
    started = time.monotonic()
    deadline = None if time_limit is None else time.time() + time_limit
    depth = min(SPLIT_DEPTH, nmax)

    def task(prefix, stop):
        return _Task(kind, param, steps, r, nmax, prefix, stop, budget, deadline)

    def interrupted(msg, best_len, nodes):
        raise Interrupted(f"{msg}; threshold > {best_len}", lower_bound=best_len + 1, nodes=nodes)

    phase = _run(task((), depth))
    nodes = phase.nodes
    if phase.interrupted:
        interrupted(phase.interrupted, phase.best_len, nodes)
    best_len, best, reached = phase.best_len, phase.best, phase.reached
    if phase.frontier and not reached:
        best_len = -1
        for res in _map_tasks([task(p, nmax) for p in phase.frontier], workers):
            nodes += res.nodes
            if res.interrupted or nodes > budget:
                interrupted(res.interrupted or f"node budget {budget} exhausted",
                            max(best_len, res.best_len), nodes)
            if res.reached:
                best_len, best, reached = res.best_len, res.best, True
                break
            if res.best_len > best_len:
                best_len, best = res.best_len, res.best
    elapsed = int((time.monotonic() - started) * 1000)
    if reached:
        return ThresholdResult(kind, param, render(expr), r, "exceeded", nmax,
                               Coloring(best, r), nodes, elapsed)
    return ThresholdResult(kind, param, render(expr), r, "found", best_len + 1,
                           Coloring(best, r), nodes, elapsed)


def vdw_threshold(expr: SetExpr | str, L: int, r: int, nmax: int, **limits) -> ThresholdResult:
    """Least N <= nmax such that every r-coloring of [1, N] has a monochromatic
    L-term AP with common difference in ``expr``."""
    return _threshold("ap", expr, L, r, nmax, **limits)


def walk_threshold(expr: SetExpr | str, m: int, r: int, nmax: int, **limits) -> ThresholdResult:
    """Least N <= nmax such that every r-coloring of [1, N] has a monochromatic
    walk over ``expr`` with at least m elements."""
    return _threshold("walk", expr, m, r, nmax, **limits)


def every_coloring_contains(kind: str, expr, param: int, r: int, N: int, **limits) -> bool:
    """Decision form: does every r-coloring of [1, N] contain the target?"""
    return _threshold(kind, expr, param, r, N, **limits).found


@dataclass
class WalkabilityReport:
    """Window-scale evidence about the walkability order of a set.

    ``upper`` is a (k+2)-coloring certificate whose monochromatic walks are
    confined to at most k+1 complete intervals (evidence for ord <= k+1), or
    None with ``refusal`` set when the construction's premise fails.
    ``lower`` is the walk threshold search with k+1 colors.
    """

    expr: str
    k: int
    nmax: int
    m: int
    upper: Certificate | None
    span: int | None
    refusal: str | None
    lower: ThresholdResult | None
    lower_error: str | None

    def to_json(self) -> dict:
        return {
            "expr": self.expr, "k": self.k, "nmax": self.nmax, "m": self.m,
            "upper": None if self.upper is None else self.upper.to_json(),
            "span": self.span, "refusal": self.refusal,
            "lower": None if self.lower is None else self.lower.to_certificate().to_json(),
            "lower_error": self.lower_error,
        }


def walkability_report(expr: SetExpr | str, k: int, nmax: int, m: int, **limits) -> WalkabilityReport:
    from .constructions import adversarial_certificate
    from .errors import GapConditionUnverifiable

    expr = ensure_expr(expr)
    window = materialize(expr, nmax, limits.get("window_cap", DEFAULT_WINDOW_CAP))
    upper = span = refusal = None
    try:
        upper, span = adversarial_certificate(window, k)
    except GapConditionUnverifiable as exc:
        refusal = str(exc)
    lower = lower_error = None
    try:
        lower = walk_threshold(expr, m, k + 1, nmax, **limits)
    except Interrupted as exc:
        lower_error = str(exc)
    return WalkabilityReport(render(expr), k, nmax, m, upper, span, refusal, lower, lower_error)
