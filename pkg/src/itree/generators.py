"""Extremal constructions and seeded random test instances."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, from_edge_list, induced_subgraph, is_connected, two_coloring

DEFAULT_VERTEX_CAP = 1_000_000


def _rng(seed: int) -> np.random.Generator:
    # Philox is counter-based, so streams for distinct seeds are independent
    return np.random.Generator(np.random.Philox(seed))


def path_of_bicliques(k: int) -> tuple[Graph, list[list[int]]]:
    """Levels V_{-(k-1)}..V_{k-1} with |V_i| = k - |i|, consecutive levels
    completely joined.

    Returns the graph on k*k vertices and the level vertex lists, ordered
    from V_{-(k-1)} to V_{k-1}. Vertices are numbered level by level.
    """
    if k < 2:
        raise GraphError(f"path_of_bicliques needs k >= 2, got {k}")
    parts: list[list[int]] = []
    nxt = 0
    for i in range(-(k - 1), k):
        size = k - abs(i)
        parts.append(list(range(nxt, nxt + size)))
        nxt += size
    edges = [(u, v) for P, Q in zip(parts, parts[1:]) for u in P for v in Q]
    return from_edge_list(nxt, edges), parts


def path_of_bicliques_subgraph(n: int) -> tuple[Graph, list[list[int]]]:
    """Connected induced subgraph of path_of_bicliques(k) on exactly n vertices,
    with k = ceil(sqrt(n)).

    Vertices are trimmed one at a time from the currently largest level
    (ties broken towards the middle, then the lower side); once every level is
    a single vertex the top level is dropped instead, which keeps it connected.
    Every induced tree of the result is an induced tree of the full
    construction, so t <= 2k - 1.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if n == 1:
        return from_edge_list(1, []), [[0]]
    k = 2
    while k * k < n:
        k += 1
    g, parts = path_of_bicliques(k)
    keep = [list(P) for P in parts]
    centre = k - 1
    for _ in range(k * k - n):
        j = max(range(len(keep)),
                key=lambda j: (len(keep[j]), -abs(j - centre), -j))
        if len(keep[j]) < 2:
            keep.pop()
        else:
            keep[j].pop()
    sub, verts = induced_subgraph(g, [v for P in keep for v in P])
    index = {v: i for i, v in enumerate(verts)}
    return sub, [[index[v] for v in P] for P in keep]


@dataclass(frozen=True)
class BlowUp:
    """Result of blow_up: the graph plus its copy layout.

    Tree nodes are in BFS order (node v has sons r*v+1..r*v+r) and vertex
    `node * base_n + x` is base vertex x inside copy `node`.
    """

    graph: Graph
    base_n: int
    arity: int
    depth: int
    tree_nodes: int
    ports: tuple[int, ...]

    def locate(self, v: int) -> tuple[int, int]:
        return divmod(v, self.base_n)

    def vertex(self, node: int, x: int) -> int:
        return node * self.base_n + x

    def parent_node(self, node: int) -> int | None:
        return None if node == 0 else (node - 1) // self.arity


def tree_size(r: int, depth: int) -> int:
    """Node count of the complete r-ary tree with `depth` levels below the root."""
    return (r ** (depth + 1) - 1) // (r - 1)


def blow_up(base: Graph, W: Sequence[int], depth: int,
            cap: int = DEFAULT_VERTEX_CAP) -> BlowUp:
    """Glue copies of `base` along a complete (m-1)-ary tree of the given depth.

    W = (w_0, ..., w_{m-1}) are the ports: son i of a node (i = 1..m-1) is
    joined by a single edge from w_i in the parent copy to w_0 in its own copy.
    """
    W = tuple(W)
    m = len(W)
    if m < 3:
        raise GraphError(f"need at least 3 ports, got {m}")
    if len(set(W)) != m or not all(0 <= w < base.n for w in W):
        raise GraphError("ports must be distinct vertices of the base graph")
    if not is_connected(base):
        raise GraphError("base graph must be connected")
    if depth < 0:
        raise GraphError(f"depth must be >= 0, got {depth}")
    r = m - 1
    nodes = tree_size(r, depth)
    total = nodes * base.n
    if total > cap:
        raise GraphError(f"blow-up would have {total} vertices (cap {cap})")
    nb = base.n
    base_edges = base.edges()
    edges = []
    for node in range(nodes):
        off = node * nb
        edges.extend((off + u, off + v) for u, v in base_edges)
        if node > 0:
            par = (node - 1) // r
            i = node - r * par
            edges.append((par * nb + W[i], off + W[0]))
    return BlowUp(graph=from_edge_list(total, edges), base_n=nb, arity=r,
                  depth=depth, tree_nodes=nodes, ports=W)


def _random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    order = rng.permutation(n)
    return [(int(order[i]), int(order[rng.integers(i)])) for i in range(1, n)]


def random_connected_triangle_free(n: int, edge_budget: int, seed: int) -> Graph:
    """Random spanning tree plus up to `edge_budget` extra edges, each attempted
    once and skipped if it already exists or would close a triangle."""
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    rng = _rng(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in _random_tree_edges(n, rng):
        nbrs[u].add(v)
        nbrs[v].add(u)
    if n >= 2:
        for _ in range(edge_budget):
            u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
            if v in nbrs[u] or not nbrs[u].isdisjoint(nbrs[v]):
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def random_connected_bipartite(n: int, edge_budget: int, seed: int) -> Graph:
    """Like random_connected_triangle_free, but extra edges must cross the
    2-coloring of the random spanning tree."""
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    rng = _rng(seed)
    tree = from_edge_list(n, _random_tree_edges(n, rng))
    color = two_coloring(tree)
    nbrs = [set(a) for a in tree.adj]
    if n >= 2:
        for _ in range(edge_budget):
            u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
            if color[u] == color[v] or v in nbrs[u]:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p); only used for building test corpora."""
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
