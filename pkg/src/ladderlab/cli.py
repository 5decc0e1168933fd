"""``ladderlab`` command line.

Machine-readable output (certificates, windows, tables) goes to stdout or
``--out``; a short human summary goes to stderr. Exit codes: 0 success,
1 the answer is none/false, 2 usage error, 3 resource limit or interrupt.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, digraph, ramsey, search
from .config import load_config
from .core import Certificate, Coloring, DifferenceSetWitness, density, relative_density
from .errors import (
    ConfigError,
    GapConditionUnverifiable,
    Interrupted,
    MalformedCertificate,
    ResourceError,
    SetLangError,
    WindowExhausted,
    WindowTooSmall,
)
from .setlang import diagonal_set, materialize, parse, render
from .verify import verify_certificate

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _int_list(text):
    try:
        values = [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("list entries must be positive")
    return values


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="config file (default: $LADDERLAB_CONFIG)")
    p.add_argument("--workers", type=_positive)
    p.add_argument("--budget", type=_positive, dest="node_budget", help="node budget for searches")
    p.add_argument("--time-limit", type=float, dest="time_limit", help="seconds")
    p.add_argument("--window-cap", type=_positive, dest="window_cap")
    p.add_argument("--out", help="write machine output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ladderlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("eval", "list the window S ∩ [1, N]")
    p.add_argument("expr")
    p.add_argument("--N", type=_positive, required=True)

    p = add("density", "density of a window, or relative density in nZ")
    p.add_argument("expr")
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--mod", type=_positive)
    p.add_argument("--k", type=_positive)

    p = add("mono-ap", "find a monochromatic AP in a coloring")
    p.add_argument("--expr", required=True)
    p.add_argument("--coloring", required=True, help="JSON array, or object with a 'coloring' key")
    p.add_argument("--len", type=_positive, required=True, dest="length")

    p = add("walk", "longest monochromatic walk in a coloring")
    p.add_argument("--expr", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--min-len", type=_positive, help="exit 1 with a no-mono-walk certificate below this")

    p = add("cube", "search for a combinatorial cube in a window")
    p.add_argument("--expr", required=True)
    p.add_argument("--dim", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)

    p = add("homothetic", "find {x, 2x, ..., nx} in a window")
    p.add_argument("--expr", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)

    for name, size_flag, help_text in (("vdw", "--len", "AP threshold"),
                                       ("walk-threshold", "--mlen", "walk threshold")):
        p = add(name, help_text)
        p.add_argument("--expr", required=True)
        p.add_argument(size_flag, type=_positive, required=True, dest="size")
        p.add_argument("--colors", type=_positive, required=True)
        p.add_argument("--nmax", type=_positive, required=True)
        p.add_argument("--stats", help="write the stats block {nodes, elapsed_ms} here")

    p = add("adversarial", "(k+2)-coloring confining monochromatic walks")
    p.add_argument("--expr", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)

    p = add("walkability", "upper and lower evidence about walkability order")
    p.add_argument("--expr", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--mlen", type=_positive, required=True)

    p = add("hgrow", "grow H with H - H inside the set")
    p.add_argument("--expr", required=True)
    p.add_argument("--target", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)

    p = add("sparse-ladder", "stack cubes above given floor values")
    p.add_argument("--floors", required=True, help="file of integers (JSON list or whitespace/comma separated)")
    p.add_argument("--maxdim", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)

    p = add("diagonal", "diagonal set against polynomial images")
    p.add_argument("--height", type=_nonnegative, required=True)
    p.add_argument("--N", type=_positive, required=True)

    p = add("digraph-partition", "split a digraph into two acyclic parts")
    p.add_argument("file")
    p.add_argument("--ordering", type=lambda t: [int(v) for v in t.replace(",", " ").split()])
    p.add_argument("--e1", help="write the forward part as an edge list")
    p.add_argument("--e2", help="write the backward part as an edge list")

    p = add("chromatic-growth", "greedy color counts of distance graphs")
    p.add_argument("--expr", required=True)
    p.add_argument("--ns", type=_int_list, required=True)

    p = add("subset-ap", "AP inside X with common difference in S")
    p.add_argument("--x-expr", required=True)
    p.add_argument("--s-expr", required=True)
    p.add_argument("--len", type=_positive, required=True, dest="length")
    p.add_argument("--N", type=_positive, required=True)

    p = add("verify", "re-check a certificate")
    p.add_argument("file")
    return parser


# --------------------------------------------------------------------------


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, json.dumps(obj, separators=(",", ":")) + "\n")


def _say(msg: str):
    print(msg, file=sys.stderr)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_coloring(path: str) -> Coloring:
    try:
        obj = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None
    r = None
    if isinstance(obj, dict):
        r = obj.get("r")
        obj = obj.get("coloring")
    if not isinstance(obj, list) or not all(isinstance(v, int) and v >= 0 for v in obj):
        raise UsageError(f"{path}: expected a list of nonnegative integer colors")
    if not obj:
        raise UsageError(f"{path}: empty coloring")
    r = max(int(r or 0), max(obj) + 1)
    return Coloring(obj, r)


def _window(text, N, limits):
    return materialize(parse(text), N, limits.window_cap)


def cmd_eval(args, limits):
    w = _window(args.expr, args.N, limits)
    _emit_json(args, w.to_json())
    _say(f"{len(w)} elements in [1,{args.N}]")
    return EXIT_OK


def cmd_density(args, limits):
    expr = parse(args.expr)
    if args.mod is None:
        w = materialize(expr, args.N, limits.window_cap)
        d = density(w)
        _emit_json(args, {"expr": render(expr), "N": args.N, "density": str(d)})
    else:
        k = args.k or max(1, args.N // args.mod)
        d = relative_density(expr, args.mod, k)
        _emit_json(args, {"expr": render(expr), "n": args.mod, "k": k, "relative_density": str(d)})
    _say(f"density {d} ~ {float(d):.6f}")
    return EXIT_OK


def cmd_mono_ap(args, limits):
    coloring = _load_coloring(args.coloring)
    w = _window(args.expr, coloring.N, limits)
    hit = search.find_mono_ap(coloring, w, args.length)
    if hit is None:
        cert = Certificate("no-mono-ap", w.expr, w.N, coloring.r, args.length, coloring=coloring)
        _emit(args, cert.dumps())
        _say(f"none: no monochromatic {args.length}-AP with difference in {w.expr}")
        return EXIT_NONE
    cert = Certificate("witness-found", w.expr, w.N, coloring.r, args.length, coloring=coloring, witness=hit)
    _emit(args, cert.dumps())
    _say(f"found AP a={hit.a} d={hit.d} color={hit.color}")
    return EXIT_OK


def cmd_walk(args, limits):
    coloring = _load_coloring(args.coloring)
    w = _window(args.expr, coloring.N, limits)
    walk = search.longest_mono_walk(coloring, w)
    if args.min_len is not None and walk.length < args.min_len:
        cert = Certificate("no-mono-walk", w.expr, w.N, coloring.r, args.min_len, coloring=coloring)
        _emit(args, cert.dumps())
        _say(f"none: longest monochromatic walk has {walk.length} < {args.min_len} elements")
        return EXIT_NONE
    cert = Certificate("witness-found", w.expr, w.N, coloring.r, walk.length, coloring=coloring, witness=walk)
    _emit(args, cert.dumps())
    _say(f"longest monochromatic walk: {walk.length} elements, color {walk.color}")
    return EXIT_OK


def cmd_cube(args, limits):
    w = _window(args.expr, args.N, limits)
    res = search.detect_cube(w, args.dim, limits.node_budget)
    if res.witness is None:
        _emit_json(args, {"result": "none", "search": "cube", "expr": w.expr, "N": w.N,
                          "param": args.dim, "status": res.status})
        _say(f"none: cube search {res.status} after {res.nodes} nodes")
        return EXIT_RESOURCE if res.status == "budget" else EXIT_NONE
    cert = Certificate("witness-found", w.expr, w.N, 0, args.dim, witness=res.witness)
    _emit(args, cert.dumps())
    _say(f"cube generators {list(res.witness.generators)}")
    return EXIT_OK


def cmd_homothetic(args, limits):
    w = _window(args.expr, args.N, limits)
    hit = search.find_homothetic(w, args.n)
    if hit is None:
        _emit_json(args, {"result": "none", "search": "homothetic", "expr": w.expr, "N": w.N, "param": args.n})
        _say("none")
        return EXIT_NONE
    _emit(args, Certificate("witness-found", w.expr, w.N, 0, args.n, witness=hit).dumps())
    _say(f"x = {hit.x}")
    return EXIT_OK


def _threshold(args, limits, fn):
    res = fn(parse(args.expr), args.size, args.colors, args.nmax, workers=limits.workers,
             budget=limits.node_budget, time_limit=limits.time_limit, window_cap=limits.window_cap)
    _emit(args, res.to_certificate().dumps())
    stats = json.dumps(res.stats())
    if args.stats:
        with open(args.stats, "w", encoding="utf-8") as fh:
            fh.write(stats + "\n")
    _say(stats)
    if res.found:
        _say(f"threshold N = {res.N} (window-scale)")
        return EXIT_OK
    _say(f"exceeded: an avoiding coloring of [1,{res.N}] exists")
    return EXIT_NONE


def cmd_vdw(args, limits):
    return _threshold(args, limits, ramsey.vdw_threshold)


def cmd_walk_threshold(args, limits):
    return _threshold(args, limits, ramsey.walk_threshold)


def cmd_adversarial(args, limits):
    w = _window(args.expr, args.N, limits)
    try:
        cert, span = constructions.adversarial_certificate(w, args.k)
    except (GapConditionUnverifiable, WindowTooSmall) as exc:
        _say(f"refused: {exc}")
        return EXIT_NONE
    _emit(args, cert.dumps())
    _say(f"{args.k + 2}-coloring; monochromatic walks span at most {span} complete intervals")
    return EXIT_OK


def cmd_walkability(args, limits):
    rep = ramsey.walkability_report(parse(args.expr), args.k, args.nmax, args.mlen, workers=limits.workers,
                                    budget=limits.node_budget, time_limit=limits.time_limit,
                                    window_cap=limits.window_cap)
    _emit_json(args, rep.to_json())
    if rep.refusal:
        _say(f"construction refused: {rep.refusal}")
    else:
        _say(f"upper side: walks confined to {rep.span} intervals (k+1 = {args.k + 1})")
    if rep.lower is not None:
        _say(f"lower side: walk threshold {rep.lower.outcome} at N = {rep.lower.N}")
    else:
        _say(f"lower side interrupted: {rep.lower_error}")
    return EXIT_OK if rep.refusal is None else EXIT_NONE


def cmd_hgrow(args, limits):
    w = _window(args.expr, args.N, limits)
    if len(w) == 0:
        _say("none: the window is empty")
        return EXIT_NONE
    try:
        ds = constructions.grow_difference_set(w, args.target)
    except WindowExhausted as exc:
        _say(f"none: {exc}")
        return EXIT_NONE
    cert = Certificate("witness-found", w.expr, w.N, 0, len(ds.H), witness=DifferenceSetWitness(ds.H))
    _emit(args, cert.dumps())
    _say(f"H = {list(ds.H)}")
    return EXIT_OK


def _read_ints(path):
    text = _read(path).strip()
    try:
        values = json.loads(text) if text.startswith("[") else [int(v) for v in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"{path}: expected a list of integers ({exc})") from None
    return [int(v) for v in values]


def cmd_sparse_ladder(args, limits):
    try:
        w = constructions.sparse_ladder(_read_ints(args.floors), args.maxdim, args.N)
    except WindowTooSmall as exc:
        _say(f"none: {exc}")
        return EXIT_NONE
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit_json(args, w.to_json())
    _say(f"{len(w)} elements")
    return EXIT_OK


def cmd_diagonal(args, limits):
    w = diagonal_set(args.height, args.N, limits.window_cap)
    _emit_json(args, w.to_json())
    _say(f"{len(w)} kept values in [1,{args.N}], {len(w.excluded)} dropped overall")
    return EXIT_OK


def cmd_digraph_partition(args, limits):
    try:
        g = digraph.read_edge_list(_read(args.file))
    except ValueError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    try:
        g1, g2 = digraph.partition_acyclic(g, args.ordering)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    c1, c2 = digraph.greedy_proper_coloring(g1), digraph.greedy_proper_coloring(g2)
    prod = digraph.product_proper(c1, c2)
    for path, part in ((args.e1, g1), (args.e2, g2)):
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(digraph.write_edge_list(part))
    _emit_json(args, {
        "V": g.V,
        "E1": [list(e) for e in g1.edges],
        "E2": [list(e) for e in g2.edges],
        "acyclic": [g1.is_acyclic(), g2.is_acyclic()],
        "coloring": list(prod),
        "colors": digraph.color_count(prod),
        "proper": digraph.is_proper(g, prod),
    })
    _say(f"|E1| = {len(g1.edges)}, |E2| = {len(g2.edges)}, product coloring uses {digraph.color_count(prod)} colors")
    return EXIT_OK


def cmd_chromatic_growth(args, limits):
    rows = digraph.chromatic_growth(parse(args.expr), args.ns, limits.window_cap)
    _emit(args, digraph.growth_csv(rows))
    return EXIT_OK


def cmd_subset_ap(args, limits):
    X = _window(args.x_expr, args.N, limits)
    S = _window(args.s_expr, args.N, limits)
    hit = search.find_ap_in_subset(X, S, args.length)
    if hit is None:
        _emit_json(args, {"result": "none", "search": "subset-ap", "expr": S.expr, "x_expr": X.expr,
                          "N": args.N, "param": args.length})
        _say("none")
        return EXIT_NONE
    cert = Certificate("witness-found", S.expr, args.N, 0, args.length, witness=hit, extra={"x_expr": X.expr})
    _emit(args, cert.dumps())
    _say(f"AP a={hit.a} d={hit.d}")
    return EXIT_OK


def cmd_verify(args, limits):
    report = verify_certificate(_read(args.file), budget=limits.node_budget)
    _emit_json(args, report.to_json())
    _say("pass" if report.ok else f"fail: {report.discrepancy}")
    return EXIT_OK if report.ok else EXIT_NONE


COMMANDS = {
    "eval": cmd_eval, "density": cmd_density, "mono-ap": cmd_mono_ap, "walk": cmd_walk,
    "cube": cmd_cube, "homothetic": cmd_homothetic, "vdw": cmd_vdw,
    "walk-threshold": cmd_walk_threshold, "adversarial": cmd_adversarial,
    "walkability": cmd_walkability, "hgrow": cmd_hgrow, "sparse-ladder": cmd_sparse_ladder,
    "diagonal": cmd_diagonal, "digraph-partition": cmd_digraph_partition,
    "chromatic-growth": cmd_chromatic_growth, "subset-ap": cmd_subset_ap, "verify": cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        limits = load_config(args.config, {
            "workers": args.workers, "node_budget": args.node_budget,
            "time_limit": args.time_limit, "window_cap": args.window_cap,
        })
        return COMMANDS[args.command](args, limits)
    except (UsageError, ConfigError, SetLangError, MalformedCertificate) as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE
    except (ResourceError, Interrupted) as exc:
        _say(f"error: {exc}")
        return EXIT_RESOURCE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
