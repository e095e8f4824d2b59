"""Immutable simple graphs on vertices 0..n-1 and the basic predicates on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Graph:
    """Simple undirected graph with sorted neighbor tuples.

    Instances are never mutated after construction, so they can be shared
    freely between threads or processes.
    """

    __slots__ = ("n", "adj", "_nbrsets", "_masks", "_m")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self._nbrsets = None
        self._masks = None
        self._m = sum(len(a) for a in self.adj) // 2

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def nbrset(self, v: int) -> frozenset[int]:
        if self._nbrsets is None:
            self._nbrsets = tuple(frozenset(a) for a in self.adj)
        return self._nbrsets[v]

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as one integer bitmask per vertex."""
        if self._masks is None:
            out = []
            for a in self.adj:
                x = 0
                for u in a:
                    x |= 1 << u
                out.append(x)
            self._masks = tuple(out)
        return self._masks

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrset(u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates are merged, loops rejected."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def from_masks(n: int, masks: Sequence[int]) -> Graph:
    adj = []
    for v in range(n):
        x = masks[v]
        adj.append([u for u in range(n) if x >> u & 1])
    return Graph(n, adj)


@dataclass(frozen=True)
class LevelDecomposition:
    root: int
    levels: tuple[tuple[int, ...], ...]
    level_of: dict[int, int] = field(repr=False)
    unreachable: tuple[int, ...] = ()
    # BFS parent of each reached vertex (lowest-index neighbor one level down)
    parent: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def sizes(self) -> list[int]:
        return [len(L) for L in self.levels]


def bfs_levels(g: Graph, root: int) -> LevelDecomposition:
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} out of range for n={g.n}")
    level_of = {root: 0}
    parent: dict[int, int] = {}
    levels = [[root]]
    dq = deque([root])
    while dq:
        v = dq.popleft()
        d = level_of[v]
        for u in g.adj[v]:
            if u not in level_of:
                level_of[u] = d + 1
                # v is popped in ascending order within a level, so the first
                # discoverer is the lowest-index parent
                parent[u] = v
                if len(levels) == d + 1:
                    levels.append([])
                levels[d + 1].append(u)
                dq.append(u)
    unreachable = tuple(v for v in range(g.n) if v not in level_of)
    return LevelDecomposition(
        root=root,
        levels=tuple(tuple(sorted(L)) for L in levels),
        level_of=level_of,
        unreachable=unreachable,
        parent=parent,
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return not bfs_levels(g, 0).unreachable


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        nu = g.nbrset(u)
        for v in g.adj[u]:
            if v > u and not nu.isdisjoint(g.nbrset(v)):
                return False
    return True


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-coloring (component roots get color 0), or None if not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    dq.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def _induced_edge_count(g: Graph, S: set[int]) -> int:
    return sum(1 for v in S for u in g.adj[v] if u in S) // 2


def _induced_connected(g: Graph, S: set[int]) -> bool:
    if not S:
        return True
    start = next(iter(S))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u in S and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(S)


def _components(g: Graph, S: set[int]) -> list[set[int]]:
    left = set(S)
    comps = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u in left and u not in comp:
                    comp.add(u)
                    stack.append(u)
        left -= comp
        comps.append(comp)
    return comps


def is_forest(g: Graph, S: Iterable[int]) -> bool:
    """True iff the subgraph induced by S is acyclic."""
    S = set(S)
    return _induced_edge_count(g, S) == len(S) - len(_components(g, S))


def is_induced_tree(g: Graph, S: Iterable[int]) -> bool:
    S = set(S)
    if not S:
        return False
    return _induced_edge_count(g, S) == len(S) - 1 and _induced_connected(g, S)


def is_independent(g: Graph, S: Iterable[int]) -> bool:
    S = set(S)
    return all(u not in S for v in S for u in g.adj[v])


def component_of(g: Graph, S: Iterable[int], v: int) -> list[int]:
    """Vertices of the component containing v in the subgraph induced by S."""
    S = set(S)
    if v not in S:
        raise GraphError(f"vertex {v} not in the vertex set")
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for u in g.adj[x]:
            if u in S and u not in seen:
                seen.add(u)
                stack.append(u)
    return sorted(seen)


def induced_subgraph(g: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by S, relabeled 0..|S|-1 in ascending order.

    Returns the graph and the list mapping new labels to original vertices.
    """
    verts = sorted(set(S))
    index = {v: i for i, v in enumerate(verts)}
    adj = [[index[u] for u in g.adj[v] if u in index] for v in verts]
    return Graph(len(verts), adj), verts


def max_degree(g: Graph, S: Iterable[int] | None = None) -> int:
    if S is None:
        return max((len(a) for a in g.adj), default=0)
    S = set(S)
    return max((sum(1 for u in g.adj[v] if u in S) for v in S), default=0)


def greedy_independent_set(g: Graph, S: Iterable[int]) -> list[int]:
    """Independent subset of S with at least ceil(|S| / (deg_S + 1)) vertices.

    Vertices are scanned by (degree inside S, index); every pick discards at
    most deg_S + 1 candidates, which gives the bound.
    """
    S = set(S)
    deg = {v: sum(1 for u in g.adj[v] if u in S) for v in S}
    blocked: set[int] = set()
    out = []
    for v in sorted(S, key=lambda x: (deg[x], x)):
        if v in blocked:
            continue
        out.append(v)
        blocked.update(u for u in g.adj[v] if u in S)
    return sorted(out)
