"""Distance graphs, acyclic edge partitions and proper colorings of digraphs."""

from __future__ import annotations

import heapq
import io
from dataclasses import dataclass

from .errors import CycleDetected, DimensionMismatch, LoopDetected
from .setlang import SortedWindow, ensure_expr, materialize

EXACT_CHROMATIC_LIMIT = 9


@dataclass(frozen=True)
class Digraph:
    """Vertices 0..V-1 and a loop-free, duplicate-free directed edge list."""

    V: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise LoopDetected(f"loop at vertex {u}")
            if not (0 <= u < self.V and 0 <= v < self.V):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{self.V - 1}")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "edges", edges)

    def successors(self) -> list:
        out = [[] for _ in range(self.V)]
        for u, v in self.edges:
            out[u].append(v)
        return [sorted(s) for s in out]

    def neighbors(self) -> list:
        """Undirected adjacency."""
        adj = [set() for _ in range(self.V)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_acyclic(self) -> bool:
        try:
            topological_order(self)
        except CycleDetected:
            return False
        return True


def distance_graph(window: SortedWindow) -> Digraph:
    """Edges u -> v for u < v with v - u in the window; integer x is vertex x - 1."""
    steps = window.tolist()
    edges = []
    for u in range(1, window.N + 1):
        for s in steps:
            if u + s > window.N:
                break
            edges.append((u - 1, u + s - 1))
    return Digraph(window.N, tuple(edges))


def partition_acyclic(g: Digraph, ordering=None) -> tuple:
    """Split edges into those increasing and those decreasing under ``ordering``.

    ``ordering`` lists the vertices from first to last (default: by index).
    """
    if ordering is None:
        ordering = range(g.V)
    ordering = list(ordering)
    if sorted(ordering) != list(range(g.V)):
        raise ValueError("ordering must be a permutation of the vertices")
    for u, v in g.edges:
        if u == v:
            raise LoopDetected(f"loop at vertex {u}")
    rank = [0] * g.V
    for pos, v in enumerate(ordering):
        rank[v] = pos
    forward = tuple(e for e in g.edges if rank[e[0]] < rank[e[1]])
    backward = tuple(e for e in g.edges if rank[e[0]] > rank[e[1]])
    return Digraph(g.V, forward), Digraph(g.V, backward)


def is_proper(g: Digraph, coloring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges)


def greedy_proper_coloring(g: Digraph) -> tuple:
    """Color vertices in index order with the least color unused by colored neighbors."""
    adj = g.neighbors()
    colors = [-1] * g.V
    for v in range(g.V):
        used = {colors[w] for w in adj[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return tuple(colors)


def color_count(coloring) -> int:
    return max(coloring) + 1 if len(coloring) else 0


def product_proper(c1, c2) -> tuple:
    """Pair the colorings, encoded as c1 * r2 + c2 with r2 the color count of c2."""
    if len(c1) != len(c2):
        raise DimensionMismatch(f"colorings of {len(c1)} and {len(c2)} vertices")
    r2 = max(color_count(c2), 1)
    return tuple(a * r2 + b for a, b in zip(c1, c2))


def exact_chromatic_number(g: Digraph) -> int:
    """Brute-force chromatic number; meant for graphs with at most 9 vertices."""
    if g.V > EXACT_CHROMATIC_LIMIT:
        raise ValueError(f"exact coloring is limited to {EXACT_CHROMATIC_LIMIT} vertices")
    if g.V == 0:
        return 0
    adj = g.neighbors()

    def colorable(k):
        colors = [-1] * g.V

        def place(v, used):
            if v == g.V:
                return True
            for c in range(min(k, used + 1)):
                if all(colors[w] != c for w in adj[v]):
                    colors[v] = c
                    if place(v + 1, max(used, c + 1)):
                        return True
                    colors[v] = -1
            return False

        return place(0, 0)

    return next(k for k in range(1, g.V + 1) if colorable(k))


def topological_order(g: Digraph) -> list:
    """Kahn's algorithm, least available vertex first."""
    indeg = [0] * g.V
    succ = g.successors()
    for u, v in g.edges:
        indeg[v] += 1
    ready = [v for v in range(g.V) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) != g.V:
        raise CycleDetected("graph has a directed cycle")
    return order


def longest_path_dag(g: Digraph) -> list:
    """Longest directed path (by vertex count); least vertex sequence among ties."""
    if g.V == 0:
        return []
    order = topological_order(g)
    succ = g.successors()
    longest = [1] * g.V
    for u in reversed(order):
        for v in succ[u]:
            if longest[v] + 1 > longest[u]:
                longest[u] = longest[v] + 1
    top = max(longest)
    u = longest.index(top)
    path = [u]
    while longest[u] > 1:
        u = next(v for v in succ[u] if longest[v] == longest[u] - 1)
        path.append(u)
    return path


def chromatic_growth(expr, Ns, cap=None) -> list:
    """Rows (N, greedy color count of the distance graph on [1, N])."""
    Ns = list(Ns)
    if not Ns or any(a >= b for a, b in zip(Ns, Ns[1:])):
        raise ValueError("Ns must be a nonempty increasing list")
    expr = ensure_expr(expr)
    kwargs = {} if cap is None else {"cap": cap}
    return [(N, color_count(greedy_proper_coloring(distance_graph(materialize(expr, N, **kwargs)))))
            for N in Ns]


def growth_csv(rows) -> str:
    buf = io.StringIO()
    buf.write("N,colors\n")
    for N, c in rows:
        buf.write(f"{N},{c}\n")
    return buf.getvalue()


def read_edge_list(text: str) -> Digraph:
    """Parse "V E" followed by E lines "u v" (0-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with a 'V E' header line")
    V, E = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if len(body) != E:
        raise ValueError(f"header promises {E} edges, found {len(body)}")
    edges = []
    for i, parts in enumerate(body, start=2):
        if len(parts) != 2:
            raise ValueError(f"line {i}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    return Digraph(V, tuple(edges))


def write_edge_list(g: Digraph) -> str:
    return f"{g.V} {len(g.edges)}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)
