"""min t(G) over connected triangle-free or bipartite graphs on n vertices.

Small n is handled by enumerating every labeled graph of the class (no
isomorphism reduction); larger n expects a graph6 stream, typically the
output of an external canonical enumerator.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

from .exact import max_induced_tree
from .formats import iter_graph6, write_graph6
from .graph import Graph, GraphError, from_masks, is_bipartite, is_connected, is_triangle_free

log = logging.getLogger(__name__)

NATIVE_MAX_N = 8
CLASSES = ("trianglefree", "bipartite")


@dataclass
class FSearchResult:
    n: int
    graph_class: str
    value: int | None
    argmin_graphs: list[str]
    argmin_count: int
    graphs_examined: int
    source: str
    skipped: int = 0
    errors: list[tuple[int, str]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "class": self.graph_class,
            "value": self.value,
            "argmin_graphs": self.argmin_graphs,
            "argmin_count": self.argmin_count,
            "graphs_examined": self.graphs_examined,
            "source": self.source,
            "skipped": self.skipped,
            "errors": [{"line": ln, "message": msg} for ln, msg in self.errors],
        }


def _in_class(g: Graph, graph_class: str) -> bool:
    if graph_class == "trianglefree":
        return is_triangle_free(g)
    if graph_class == "bipartite":
        return is_bipartite(g)
    raise ValueError(f"unknown class {graph_class!r}")


def _bipartite_masks(masks: list[int], j: int) -> bool:
    color = [-1] * j
    for s in range(j):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            x = masks[v]
            for u in range(j):
                if x >> u & 1:
                    if color[u] < 0:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
    return True


def enumerate_labeled(n: int, graph_class: str) -> Iterator[Graph]:
    """All labeled graphs on n vertices in the class (connected or not).

    Vertex j picks its neighbors among 0..j-1; both classes are closed under
    induced subgraphs, so a prefix outside the class is cut immediately.
    """
    if graph_class not in CLASSES:
        raise ValueError(f"unknown class {graph_class!r}")
    masks = [0] * n

    def rec(j: int):
        if j == n:
            yield from_masks(n, masks)
            return
        for nb in range(1 << j):
            if graph_class == "trianglefree":
                # the new neighborhood must be independent
                if any(nb >> u & 1 and masks[u] & nb for u in range(j)):
                    continue
            masks[j] = nb
            for u in range(j):
                if nb >> u & 1:
                    masks[u] |= 1 << j
            if graph_class == "trianglefree" or _bipartite_masks(masks, j + 1):
                yield from rec(j + 1)
            for u in range(j):
                masks[u] &= ~(1 << j)
            masks[j] = 0

    if n >= 1:
        yield from rec(0)


def _exact_t(g: Graph) -> int:
    return max_induced_tree(g).value


def _chunked(it: Iterable, size: int):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def f_search(n: int, graph_class: str, source: str = "native",
             stream: Iterable[bytes | str] | None = None, jobs: int = 1,
             max_witnesses: int = 100, abort_on_error: bool = False) -> FSearchResult:
    """Minimum exact t(G) over connected graphs of the class on n vertices."""
    if graph_class not in CLASSES:
        raise ValueError(f"unknown class {graph_class!r}")
    errors: list[tuple[int, str]] = []
    skipped = 0
    if source == "native":
        if not 1 <= n <= NATIVE_MAX_N:
            raise GraphError(f"native enumeration supports 1 <= n <= {NATIVE_MAX_N}, got {n}")
        candidates = (g for g in enumerate_labeled(n, graph_class) if is_connected(g))
        label = "native-enumeration"
    elif source == "stream":
        if stream is None:
            raise ValueError("stream source needs an input stream")
        label = "external-stream"

        def filtered():
            nonlocal skipped
            for _, g in iter_graph6(stream, skip_errors=not abort_on_error, errors=errors):
                if g.n != n or not is_connected(g) or not _in_class(g, graph_class):
                    skipped += 1
                    continue
                yield g
        candidates = filtered()
    else:
        raise ValueError(f"unknown source {source!r}")

    best: int | None = None
    argmin: list[str] = []
    count = 0
    examined = 0

    def consider(g: Graph, value: int | None) -> None:
        nonlocal best, count
        if value is None:
            return
        if best is None or value < best:
            best, count = value, 0
            argmin.clear()
        if value == best:
            count += 1
            if len(argmin) < max_witnesses:
                argmin.append(write_graph6(g).decode("ascii"))

    if jobs <= 1:
        for g in candidates:
            examined += 1
            if best is None:
                consider(g, _exact_t(g))
                continue
            # only trees of size <= best matter; stop as soon as best+1 is found
            res = max_induced_tree(g, stop_at=best + 1)
            consider(g, res.value if res.exhausted else None)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in _chunked(candidates, 256):
                examined += len(chunk)
                for g, value in zip(chunk, pool.map(_exact_t, chunk, chunksize=32)):
                    consider(g, value)
    log.info("f_search n=%d class=%s: value=%s over %d graphs", n, graph_class, best, examined)
    return FSearchResult(n=n, graph_class=graph_class, value=best, argmin_graphs=argmin,
                         argmin_count=count, graphs_examined=examined, source=label,
                         skipped=skipped, errors=errors)
