"""Greedy selection procedures behind the level-descent steps.

``select_up_forest`` picks, in a bipartite top/bottom view, either a large
induced matching or a 2-branching up-forest. ``split_is_or_im`` picks, in an
arbitrary graph, either a large independent set or a large induced matching.
Both return a :class:`SelectionOutcome` whose witness can be checked with the
``check_*`` functions at the bottom of this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .graph import Graph, GraphError

MATCHING = "Matching"
BRANCHING = "BranchingUpForest"
INDEPENDENT_SET = "IndependentSet"
INDUCED_MATCHING = "InducedMatching"


class PreconditionError(GraphError):
    pass


@dataclass(frozen=True)
class BipartiteView:
    """Top class A, bottom class B and the A-B edges between them.

    Top elements may be any sortable hashable (vertices, or contracted edges);
    bottom elements are vertices of the base graph. Edges inside A or inside B
    are invisible to the view.
    """

    top: tuple
    bottom: tuple
    up: Mapping[Hashable, tuple] = field(repr=False)  # top -> sorted bottom nbrs
    down: Mapping[Hashable, tuple] = field(repr=False)  # bottom -> sorted top nbrs
    base: Graph | None = field(default=None, repr=False)

    @classmethod
    def from_graph(cls, g: Graph, A: Iterable[int], B: Iterable[int]) -> "BipartiteView":
        A = sorted(set(A))
        B = sorted(set(B))
        Bset = set(B)
        if not Bset.isdisjoint(A):
            raise GraphError("top and bottom classes must be disjoint")
        up = {a: tuple(u for u in g.adj[a] if u in Bset) for a in A}
        return cls._build(A, B, up, g)

    @classmethod
    def contracted(cls, g: Graph, pairs: Iterable[tuple[int, int]],
                   B: Iterable[int]) -> "BipartiteView":
        """Top vertices are the edges uu' of `pairs`; uu' sees v iff u or u' does."""
        pairs = sorted(tuple(sorted(p)) for p in pairs)
        B = sorted(set(B))
        Bset = set(B)
        up = {}
        for u, w in pairs:
            up[(u, w)] = tuple(sorted({x for x in g.adj[u] if x in Bset}
                                      | {x for x in g.adj[w] if x in Bset}))
        return cls._build(pairs, B, up, g)

    @classmethod
    def _build(cls, A, B, up, g):
        down: dict = {b: [] for b in B}
        for a in A:
            for b in up[a]:
                down[b].append(a)
        return cls(top=tuple(A), bottom=tuple(B), up=up,
                   down={b: tuple(v) for b, v in down.items()}, base=g)

    def max_degree(self) -> int:
        return max([len(v) for v in self.up.values()] + [len(v) for v in self.down.values()],
                   default=0)


@dataclass(frozen=True)
class SelectionOutcome:
    """Tagged result of a selection lemma.

    For Matching/BranchingUpForest the witness is an up-forest given by
    ``top``, ``bottom`` and ``edges`` (top, bottom) pairs. IndependentSet uses
    ``vertices``; InducedMatching uses ``edges`` (u, v) with u < v.
    ``size`` is the quantity the guarantee talks about and ``threshold`` the
    exact rational lower bound it meets.
    """

    tag: str
    size: int
    threshold: Fraction
    top: tuple = ()
    bottom: tuple = ()
    edges: tuple = ()
    vertices: tuple = ()
    max_degree: int = 0

    def as_dict(self) -> dict:
        return {
            "tag": self.tag,
            "size": self.size,
            "threshold": str(self.threshold),
            "max_degree": self.max_degree,
            "top": [list(x) if isinstance(x, tuple) else x for x in self.top],
            "bottom": list(self.bottom),
            "edges": [[list(a) if isinstance(a, tuple) else a, b] for a, b in self.edges],
            "vertices": list(self.vertices),
        }


def select_up_forest(view: BipartiteView, eta) -> SelectionOutcome:
    """Induced matching covering >= (1-eta)|A| of the top, or a 2-branching
    up-forest with at least eta*|A|/Delta^3 bottom vertices."""
    eta = Fraction(eta)
    if not 0 < eta < 1:
        raise ValueError(f"eta must lie in (0, 1), got {eta}")
    a = len(view.top)
    if a == 0:
        return SelectionOutcome(MATCHING, 0, Fraction(0))
    isolated = [x for x in view.top if not view.up[x]]
    if isolated:
        raise PreconditionError(f"top vertex {isolated[0]} has no bottom neighbor")
    delta = view.max_degree()

    # B': bottom vertices of degree one; their top neighbors N(B') can all be
    # matched at once, each with its lowest-index private leaf.
    mate = {}
    for b in view.bottom:
        nb = view.down[b]
        if len(nb) == 1 and nb[0] not in mate:
            mate[nb[0]] = b
    if len(mate) >= (1 - eta) * a:
        tops = tuple(sorted(mate))
        edges = tuple((x, mate[x]) for x in tops)
        return SelectionOutcome(MATCHING, len(edges), (1 - eta) * a,
                                top=tops, bottom=tuple(sorted(mate.values())),
                                edges=edges, max_degree=delta)

    pool = [b for b in view.bottom if len(view.down[b]) >= 2]
    removed: set = set()
    centres = []
    tops = []
    edges = []
    for v in pool:
        if v in removed:
            continue
        centres.append(v)
        for x in view.down[v]:
            tops.append(x)
            edges.append((x, v))
            removed.update(view.up[x])
    return SelectionOutcome(BRANCHING, len(centres), eta * a / delta ** 3,
                            top=tuple(sorted(tops)), bottom=tuple(centres),
                            edges=tuple(sorted(edges)), max_degree=delta)


def split_is_or_im(g: Graph, S: Iterable[int], eta) -> SelectionOutcome:
    """Greedy edge deletion inside the subgraph induced by S.

    Repeatedly take the lexicographically smallest remaining edge and delete
    both endpoints with all their neighbors. If at least (1-eta)|S| vertices
    survive they form an independent set; otherwise the chosen edges form an
    induced matching of at least eta*|S|/(2*Delta) edges.
    """
    eta = Fraction(eta)
    if not 0 <= eta <= 1:
        raise ValueError(f"eta must lie in [0, 1], got {eta}")
    order = sorted(set(S))
    alive = set(order)
    delta = max((sum(1 for u in g.adj[v] if u in alive) for v in order), default=0)
    chosen = []
    for u in order:
        if u not in alive:
            continue
        v = next((w for w in g.adj[u] if w in alive and w > u), None)
        if v is None:
            # earlier vertices are already gone, so u stays isolated for good
            continue
        chosen.append((u, v))
        for x in (u, v):
            alive.difference_update(g.adj[x])
            alive.discard(x)
    n = len(order)
    # an empty survivor set only qualifies when nothing was matched (eta = 1 case)
    if len(alive) >= (1 - eta) * n and (alive or not chosen):
        return SelectionOutcome(INDEPENDENT_SET, len(alive), (1 - eta) * n,
                                vertices=tuple(sorted(alive)), max_degree=delta)
    return SelectionOutcome(INDUCED_MATCHING, len(chosen), eta * n / (2 * delta),
                            edges=tuple(chosen), max_degree=delta)


# -- independent checkers -------------------------------------------------
# These only use the raw adjacency, never the selection code above.

def check_up_forest(view: BipartiteView, out: SelectionOutcome, eta) -> list[str]:
    """Return a list of violated conditions (empty means the witness is valid)."""
    eta = Fraction(eta)
    problems = []
    top, bottom = set(out.top), set(out.bottom)
    if not top <= set(view.top) or not bottom <= set(view.bottom):
        problems.append("witness outside the view")
        return problems
    induced = {(x, b) for x in top for b in view.up[x] if b in bottom}
    if induced != set(out.edges):
        problems.append("edge list differs from the induced edge set")
    deg_top = {x: 0 for x in top}
    deg_bot = {b: 0 for b in bottom}
    for x, b in induced:
        deg_top[x] += 1
        deg_bot[b] += 1
    if any(d != 1 for d in deg_top.values()):
        problems.append("top vertex with degree != 1")
    # every top vertex has degree 1, so the induced graph is a disjoint union
    # of stars centred in the bottom class: acyclic by construction of degrees
    if len(induced) != len(top):
        problems.append("edge count does not match a forest of stars")
    a = len(view.top)
    delta = view.max_degree()
    if out.tag == MATCHING:
        if any(d != 1 for d in deg_bot.values()):
            problems.append("matching has a bottom vertex of degree != 1")
        if len(induced) < math.ceil((1 - eta) * a):
            problems.append(f"matching has {len(induced)} edges < ceil((1-eta)a)")
    elif out.tag == BRANCHING:
        if any(d < 2 for d in deg_bot.values()):
            problems.append("bottom vertex with degree < 2")
        if len(bottom) < eta * a / delta ** 3:
            problems.append(f"b(F)={len(bottom)} below eta*a/Delta^3")
    else:
        problems.append(f"unexpected tag {out.tag}")
    return problems


def check_independent_or_matching(g: Graph, S: Iterable[int], out: SelectionOutcome,
                                  eta) -> list[str]:
    eta = Fraction(eta)
    S = set(S)
    n = len(S)
    problems = []
    if out.tag == INDEPENDENT_SET:
        R = set(out.vertices)
        if not R <= S:
            problems.append("independent set leaves S")
        if any(u in R for v in R for u in g.adj[v]):
            problems.append("independent set has an edge")
        if len(R) < math.ceil((1 - eta) * n):
            problems.append("independent set below ceil((1-eta)n)")
    elif out.tag == INDUCED_MATCHING:
        ends = [x for e in out.edges for x in e]
        V = set(ends)
        if len(V) != len(ends):
            problems.append("matching edges share a vertex")
        if not V <= S:
            problems.append("matching leaves S")
        if not all(g.has_edge(u, v) for u, v in out.edges):
            problems.append("matching uses a non-edge")
        induced = sum(1 for v in V for u in g.adj[v] if u in V) // 2
        if induced != len(out.edges):
            problems.append("matching is not induced")
        delta = max((sum(1 for u in g.adj[v] if u in S) for v in S), default=0)
        if delta == 0 or len(out.edges) < eta * n / (2 * delta):
            problems.append("induced matching below eta*n/(2*Delta)")
    else:
        problems.append(f"unexpected tag {out.tag}")
    return problems
