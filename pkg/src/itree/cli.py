"""Command-line entry point: ``itree generate|extract|exact|fsearch|verify``."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__
from .exact import (
    independence_number,
    max_induced_tree,
    max_induced_tree_naive,
    max_tree_intersection,
    max_up_growing_top_count,
)
from .extractor import (
    DEFAULT_C,
    default_target_size,
    extract_bipartite,
    extract_triangle_free,
    verify_certificate,
)
from .formats import (
    FormatError,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .fsearch import CLASSES, f_search
from .generators import (
    blow_up,
    complete_bipartite,
    cycle,
    path,
    path_of_bicliques,
    path_of_bicliques_subgraph,
    random_connected_bipartite,
    random_connected_triangle_free,
)
from .graph import Graph, GraphError, bfs_levels, is_induced_tree, two_coloring
from .lemmas import (
    BipartiteView,
    check_independent_or_matching,
    check_up_forest,
    select_up_forest,
    split_is_or_im,
)

log = logging.getLogger("itree")

SCHEMA_VERSION = "1"
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")
DEFAULT_SEED = 0
FAMILIES = ("path-of-bicliques", "path-of-bicliques-n", "blow-up", "random-trianglefree",
            "random-bipartite", "cycle", "path", "complete-bipartite")


class UsageError(Exception):
    pass


def digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(write_graph6(g)).hexdigest()


def _int_list(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


def _n_range(text: str) -> list[int]:
    lo, _, hi = text.partition("-")
    try:
        return list(range(int(lo), int(hi or lo) + 1))
    except ValueError as exc:
        raise UsageError(f"bad --n value {text!r}") from exc


def _read_input(args) -> bytes:
    if args.input in (None, "-"):
        return sys.stdin.buffer.read()
    return Path(args.input).read_bytes()


def _read_graphs(args) -> list[Graph]:
    data = _read_input(args).lstrip()
    fmt = args.input_format
    if fmt == "auto":
        fmt = "edge-list" if data[:1].isdigit() else "graph6"
    if fmt == "edge-list":
        return [parse_edge_list(data.decode("ascii"))]
    return [g for _, g in iter_graph6(data.splitlines())]


def _read_graph(args) -> Graph:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise UsageError(f"expected one input graph, got {len(graphs)}")
    return graphs[0]


def _report(args, argv, result, ok=True, problems=(), g=None, started=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "itree",
        "version": __version__,
        "command": {"argv": list(argv), "subcommand": args.command,
                    "seed": getattr(args, "seed", None)},
        "input_digest": digest(g) if g is not None else None,
        "result": result,
        "verdict": {"ok": bool(ok), "problems": list(problems)},
        "timing": {"seconds": round(time.perf_counter() - started, 6) if started else 0.0},
    }


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


# -- generate ---------------------------------------------------------------

def _generate(args):
    fam = args.family
    meta: dict = {"family": fam}
    if fam == "path-of-bicliques":
        g, parts = path_of_bicliques(args.k)
        meta["levels"] = parts
    elif fam == "path-of-bicliques-n":
        if args.n is None:
            raise UsageError("--n is required for path-of-bicliques-n")
        g, parts = path_of_bicliques_subgraph(args.n)
        meta["levels"] = parts
    elif fam == "blow-up":
        base = parse_graph6(args.base) if args.base else path_of_bicliques(2)[0]
        ports = _int_list(args.ports) or list(range(args.r + 1))
        bu = blow_up(base, ports, args.l)
        g = bu.graph
        meta.update(arity=bu.arity, depth=bu.depth, tree_nodes=bu.tree_nodes,
                    base_n=bu.base_n, ports=list(bu.ports))
    elif fam in ("random-trianglefree", "random-bipartite"):
        if args.n is None:
            raise UsageError(f"--n is required for {fam}")
        budget = args.edges if args.edges is not None else args.n
        gen = random_connected_triangle_free if fam == "random-trianglefree" else random_connected_bipartite
        g = gen(args.n, budget, args.seed)
    elif fam == "cycle":
        g = cycle(args.n or 5)
    elif fam == "path":
        g = path(args.n or 3)
    else:
        g = complete_bipartite(args.k, args.r)
    return g, meta


def cmd_generate(args, argv, started) -> int:
    g, meta = _generate(args)
    if args.format == "graph6":
        sys.stdout.write(write_graph6(g).decode("ascii") + "\n")
    elif args.format == "edge-list":
        sys.stdout.write(write_edge_list(g))
    else:
        result = dict(meta, n=g.n, m=g.m, graph6=write_graph6(g).decode("ascii"))
        _emit(_report(args, argv, result, g=g, started=started))
    return 0


# -- extract ----------------------------------------------------------------

def _extract_one(mode: str, g: Graph, t: int | None, c: float, root: int):
    t = t if t is not None else max(3, default_target_size(g.n, c))
    fn = extract_bipartite if mode == "bipartite" else extract_triangle_free
    cert = fn(g, t, root)
    problems = verify_certificate(g, cert)
    result = {
        "mode": mode,
        "t": t,
        "c": c,
        "root": root,
        "n": g.n,
        "tree": cert.vertices,
        "size": cert.size,
        "provenance": cert.provenance,
        "note": cert.note,
        "b": cert.trace.b if cert.trace else 0,
        "trace": cert.trace.as_dict() if cert.trace else None,
    }
    return result, problems, cert


def _extract_job(payload):
    mode, g6, t, c, root = payload
    g = parse_graph6(g6)
    try:
        result, problems, _ = _extract_one(mode, g, t, c, root)
    except GraphError as exc:
        return None, [str(exc)]
    return result, problems


def cmd_extract(args, argv, started) -> int:
    graphs = _read_graphs(args)
    if not graphs:
        raise UsageError("no input graph")
    if len(graphs) == 1:
        g = graphs[0]
        result, problems, cert = _extract_one(args.mode, g, args.t, args.c, args.root)
        if args.trace_out:
            Path(args.trace_out).write_text(json.dumps(result["trace"], indent=2) + "\n")
        _emit(_report(args, argv, result, ok=not problems, problems=problems, g=g,
                      started=started))
        return 1 if problems else 0
    # batch: one JSON line per graph
    payloads = [(args.mode, write_graph6(g), args.t, args.c, args.root) for g in graphs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outs = list(pool.map(_extract_job, payloads, chunksize=8))
    else:
        outs = [_extract_job(p) for p in payloads]
    status = 0
    for g, (result, problems) in zip(graphs, outs):
        if result is None:
            status = max(status, 2)
        elif problems:
            status = max(status, 1)
        _emit(_report(args, argv, result, ok=result is not None and not problems,
                      problems=problems, g=g, started=started))
    return status


# -- exact ------------------------------------------------------------------

def cmd_exact(args, argv, started) -> int:
    g = _read_graph(args)
    op = args.op
    problems = []
    if op == "t":
        res = max_induced_tree(g, budget=args.budget)
        if not is_induced_tree(g, res.witness) and g.n:
            problems.append("witness is not an induced tree")
    elif op == "t-naive":
        res = max_induced_tree_naive(g)
    elif op == "alpha":
        res = independence_number(g)
    elif op == "up-growing":
        levels = bfs_levels(g, args.root)
        if levels.unreachable:
            raise UsageError("graph is not connected")
        res = max_up_growing_top_count(g, levels)
        if args.claim is not None and res.value > args.claim:
            problems.append(f"up-growing tree with {res.value} > {args.claim} top vertices")
    else:
        W = _int_list(args.ports)
        if not W:
            raise UsageError("--ports is required for tree-w")
        res = max_tree_intersection(g, W)
    result = dict(res.as_dict(), op=op, n=g.n)
    _emit(_report(args, argv, result, ok=not problems, problems=problems, g=g, started=started))
    return 1 if problems else 0


# -- fsearch ----------------------------------------------------------------

def cmd_fsearch(args, argv, started) -> int:
    ns = _n_range(args.n)
    golden = {}
    gpath = Path(args.golden) if args.golden else None
    if gpath and gpath.exists():
        golden = json.loads(gpath.read_text())
    stream_lines = None
    if args.source == "stream":
        stream_lines = _read_input(args).splitlines()
    status = 0
    for n in ns:
        res = f_search(n, args.graph_class, source=args.source, stream=stream_lines,
                       jobs=args.jobs, max_witnesses=args.max_witnesses,
                       abort_on_error=args.abort_on_error)
        problems = []
        key = f"{args.graph_class}/{n}/{res.source}"
        if key in golden:
            if golden[key] != res.value:
                problems.append(f"golden value {golden[key]} != {res.value}")
        elif gpath is not None and res.value is not None:
            golden[key] = res.value
        if res.errors:
            problems.extend(f"line {ln}: {msg}" for ln, msg in res.errors)
        if problems:
            status = 1
        _emit(_report(args, argv, res.as_dict(), ok=not problems, problems=problems,
                      started=started))
    if gpath is not None:
        gpath.write_text(json.dumps(golden, indent=2, sort_keys=True) + "\n")
    return status


# -- verify -----------------------------------------------------------------

def cmd_verify(args, argv, started) -> int:
    g = _read_graph(args)
    eta = Fraction(args.eta)
    if args.what == "lemma4":
        top, bottom = _int_list(args.top), _int_list(args.bottom)
        if top is None or bottom is None:
            color = two_coloring(g)
            if color is None:
                raise UsageError("graph is not bipartite; pass --top and --bottom")
            top = top or [v for v in range(g.n) if color[v] == 0]
            bottom = bottom or [v for v in range(g.n) if color[v] == 1]
        view = BipartiteView.from_graph(g, top, bottom)
        out = select_up_forest(view, eta)
        problems = check_up_forest(view, out, eta)
    elif args.what == "lemma5":
        S = _int_list(args.subset)
        S = list(range(g.n)) if S is None else S
        out = split_is_or_im(g, S, eta)
        problems = check_independent_or_matching(g, S, out, eta)
    else:
        S = _int_list(args.vertices) or []
        ok = is_induced_tree(g, S)
        result = {"what": "tree", "vertices": S, "is_induced_tree": ok}
        _emit(_report(args, argv, result, ok=ok,
                      problems=[] if ok else ["not an induced tree"], g=g, started=started))
        return 0 if ok else 1
    result = dict(out.as_dict(), what=args.what, eta=str(eta))
    _emit(_report(args, argv, result, ok=not problems, problems=problems, g=g, started=started))
    return 1 if problems else 0


# -- parser -----------------------------------------------------------------

def _add_input(p):
    p.add_argument("--input", "-i", help="input file (default: stdin)")
    p.add_argument("--input-format", choices=("auto", "graph6", "edge-list"), default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="itree", description="Induced trees in sparse graphs.")
    parser.add_argument("--version", action="version", version=f"itree {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a constructed or random graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, default=2, help="blow-up arity / second side size")
    p.add_argument("--l", type=int, default=1, help="blow-up depth")
    p.add_argument("--base", help="blow-up base graph as graph6 (default: path-of-bicliques k=2)")
    p.add_argument("--ports", help="blow-up ports w_0..w_r (default: 0..r)")
    p.add_argument("--edges", type=int, help="extra-edge attempts for random families")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("graph6", "edge-list", "json"), default="graph6")

    p = sub.add_parser("extract", help="find an induced tree with a certified trace")
    _add_input(p)
    p.add_argument("--mode", choices=("bipartite", "trianglefree"), default="trianglefree")
    p.add_argument("--t", type=int, help="target size (default: from --c)")
    p.add_argument("--c", type=float, default=DEFAULT_C)
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--trace-out", help="also write the trace JSON here")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("exact", help="exact oracles")
    _add_input(p)
    p.add_argument("--op", choices=("t", "t-naive", "alpha", "up-growing", "tree-w"), default="t")
    p.add_argument("--budget", type=int, help="node cap for --op t")
    p.add_argument("--root", type=int, default=0, help="BFS root for --op up-growing")
    p.add_argument("--claim", type=int, help="claimed bound to check for --op up-growing")
    p.add_argument("--ports", help="vertex set W for --op tree-w")

    p = sub.add_parser("fsearch", help="min t(G) over a graph class")
    _add_input(p)
    p.add_argument("--n", required=True, help="vertex count or range lo-hi")
    p.add_argument("--class", dest="graph_class", choices=CLASSES, default="trianglefree")
    p.add_argument("--source", choices=("native", "stream"), default="native")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--golden", help="JSON file of recorded values to check against / extend")
    p.add_argument("--max-witnesses", type=int, default=100)
    p.add_argument("--abort-on-error", action="store_true")

    p = sub.add_parser("verify", help="run a selection lemma and check its witness")
    p.add_argument("what", choices=("lemma4", "lemma5", "tree"))
    _add_input(p)
    p.add_argument("--eta", default="1/2")
    p.add_argument("--top")
    p.add_argument("--bottom")
    p.add_argument("--subset")
    p.add_argument("--vertices")
    return parser


COMMANDS = {
    "generate": cmd_generate,
    "extract": cmd_extract,
    "exact": cmd_exact,
    "fsearch": cmd_fsearch,
    "verify": cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    level = os.environ.get("ITREE_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        return COMMANDS[args.command](args, argv, started)
    except (UsageError, GraphError, FormatError, ValueError, OSError) as exc:
        print(f"itree {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
