"""Certificate-producing induced-tree extraction by level descent.

Both extractors pick a root, split the graph into BFS levels, start from a
large level L_k and walk down towards the root, keeping at each level a set
M_i such that the union of the chosen sets induces a forest. The component
of the final singleton M_l is returned, together with a trace whose step
records certify the tree has at least 2**b vertices, b being the number of
branching and double steps.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import (
    Graph,
    GraphError,
    bfs_levels,
    component_of,
    greedy_independent_set,
    is_bipartite,
    is_connected,
    is_forest,
    is_independent,
    is_induced_tree,
    is_triangle_free,
    max_degree,
)
from .lemmas import (
    BRANCHING,
    INDEPENDENT_SET,
    BipartiteView,
    select_up_forest,
    split_is_or_im,
)

log = logging.getLogger(__name__)

STAR = "Star"
INDUCED_PATH = "InducedPath"
LEVELS = "LevelConstruction"

MATCHING_STEP = "Matching"
BRANCHING_STEP = "Branching"
DOUBLE_STEP = "Double"

DEFAULT_C = 0.3


def default_target_size(n: int, c: float = DEFAULT_C) -> int:
    """ceil(exp(c * sqrt(ln n))), never below 2."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    return max(2, math.ceil(math.exp(c * math.sqrt(math.log(n)))))


@dataclass
class StepRecord:
    kind: str
    from_level: int
    to_level: int
    size_before: int
    size_after: int
    lemma_tags: list[str]
    # (label, lhs, rhs): each step asserts lhs >= rhs
    bounds: list[tuple[str, int, Fraction]] = field(default_factory=list)

    def failed_bounds(self) -> list[str]:
        return [f"{name}: {lhs} < {rhs}" for name, lhs, rhs in self.bounds if lhs < rhs]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "from_level": self.from_level,
            "to_level": self.to_level,
            "size_before": self.size_before,
            "size_after": self.size_after,
            "lemma_tags": list(self.lemma_tags),
            "bounds": [{"name": nm, "lhs": lhs, "rhs": str(rhs), "holds": lhs >= rhs}
                       for nm, lhs, rhs in self.bounds],
        }


@dataclass
class ExtractionTrace:
    t: int
    root: int
    k: int
    ell: int
    steps: list[StepRecord]
    level_sets: dict[int, list[int]]

    @property
    def b(self) -> int:
        return sum(1 for s in self.steps if s.kind in (BRANCHING_STEP, DOUBLE_STEP))

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "root": self.root,
            "k": self.k,
            "ell": self.ell,
            "b": self.b,
            "steps": [s.as_dict() for s in self.steps],
            "level_sizes": {str(i): len(M) for i, M in sorted(self.level_sets.items())},
        }


@dataclass
class TreeCertificate:
    vertices: list[int]
    provenance: str
    trace: ExtractionTrace | None = None
    note: str = ""

    @property
    def size(self) -> int:
        return len(self.vertices)


def _check_input(g: Graph, t: int, root: int) -> None:
    if t < 3:
        raise GraphError(f"target size t must be >= 3, got {t}")
    if g.n == 0:
        raise GraphError("empty graph")
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} out of range")
    if not is_connected(g):
        raise GraphError("graph is not connected")


def _early_exit(g: Graph, t: int, root: int):
    """Star of a vertex of degree >= t-1, or a shortest path to level t."""
    delta = max_degree(g)
    if delta >= t - 1:
        v = min(range(g.n), key=lambda x: (-g.degree(x), x))
        return TreeCertificate(sorted((v,) + g.adj[v]), STAR,
                               note=f"vertex {v} has degree {delta} >= t-1"), None
    levels = bfs_levels(g, root)
    if levels.depth >= t:
        x = levels.levels[t][0]
        path = [x]
        while path[-1] != root:
            path.append(levels.parent[path[-1]])
        return TreeCertificate(sorted(path), INDUCED_PATH,
                               note=f"level {t} is nonempty"), None
    return None, levels


def _start_level(levels, n: int, t: int) -> int:
    # largest level, lowest index on ties; with depth < t it has >= n/t vertices
    sizes = levels.sizes()
    k = sizes.index(max(sizes))
    assert sizes[k] * t >= n
    return k


def _finish(g, t, root, k, M, steps):
    i = min(M)
    (v,) = M[i]
    tree = component_of(g, [x for S in M.values() for x in S], v)
    trace = ExtractionTrace(t=t, root=root, k=k, ell=i, steps=steps,
                            level_sets={j: list(S) for j, S in M.items()})
    return TreeCertificate(tree, LEVELS, trace)


def extract_bipartite(g: Graph, t: int, root: int = 0) -> TreeCertificate:
    """Induced tree in a connected bipartite graph by level descent.

    Each step applies select_up_forest with eta = 1/t to (M_i, L_{i-1}) and
    keeps the bottom class of the witness as M_{i-1}.
    """
    _check_input(g, t, root)
    if not is_bipartite(g):
        raise GraphError("graph is not bipartite")
    cert, levels = _early_exit(g, t, root)
    if cert is not None:
        return cert
    eta = Fraction(1, t)
    k = _start_level(levels, g.n, t)
    M = {k: list(levels.levels[k])}
    steps = []
    i = k
    while len(M[i]) > 1:
        view = BipartiteView.from_graph(g, M[i], levels.levels[i - 1])
        out = select_up_forest(view, eta)
        M[i - 1] = list(out.bottom)
        a = len(M[i])
        if out.tag == BRANCHING:
            kind = BRANCHING_STEP
            bounds = [("b(F) >= eta*a/Delta^3", out.size, out.threshold),
                      ("|M_{i-1}| >= |M_i|/t^4", len(M[i - 1]), Fraction(a, t ** 4))]
        else:
            kind = MATCHING_STEP
            bounds = [("|M_{i-1}| >= (1-1/t)|M_i|", len(M[i - 1]), (1 - eta) * a)]
        steps.append(StepRecord(kind, i, i - 1, a, len(M[i - 1]), [out.tag], bounds))
        i -= 1
    log.debug("bipartite extraction: k=%d ell=%d steps=%d", k, i, len(steps))
    return _finish(g, t, root, k, M, steps)


def extract_triangle_free(g: Graph, t: int, root: int = 0,
                          check_forest: bool = True) -> TreeCertificate:
    """Induced tree in a connected triangle-free graph by level descent.

    Levels may now contain edges, so every kept set is thinned to an
    independent set, and an induced matching inside L_{i-1} triggers a
    double step through the contracted view (matched edges, L_{i-2}).
    """
    _check_input(g, t, root)
    if not is_triangle_free(g):
        raise GraphError("graph contains a triangle")
    cert, levels = _early_exit(g, t, root)
    if cert is not None:
        return cert
    eta = Fraction(1, t)
    k = _start_level(levels, g.n, t)
    L = levels.levels
    M = {k: greedy_independent_set(g, L[k])}
    steps = []
    i = k
    while len(M[i]) > 1:
        a = len(M[i])
        out = select_up_forest(BipartiteView.from_graph(g, M[i], L[i - 1]), eta)
        cand = list(out.bottom)
        if out.tag == BRANCHING:
            M[i - 1] = greedy_independent_set(g, cand)
            steps.append(StepRecord(BRANCHING_STEP, i, i - 1, a, len(M[i - 1]), [out.tag], [
                ("|M'_{i-1}| >= eta*a/Delta^3", len(cand), out.threshold),
                ("|M_{i-1}| >= |M_i|/t^5", len(M[i - 1]), Fraction(a, t ** 5)),
            ]))
            i -= 1
        else:
            split = split_is_or_im(g, cand, eta)
            if split.tag == INDEPENDENT_SET:
                M[i - 1] = list(split.vertices)
                steps.append(StepRecord(MATCHING_STEP, i, i - 1, a, len(M[i - 1]),
                                        [out.tag, split.tag], [
                    ("|M'_{i-1}| >= (1-1/t)|M_i|", len(cand), (1 - eta) * a),
                    ("|M_{i-1}| >= (1-1/t)^2|M_i|", len(M[i - 1]), (1 - eta) ** 2 * a),
                ]))
                i -= 1
            else:
                # level 0 is a single vertex, so an induced matching needs i >= 2
                assert i >= 2, "induced matching found next to the root"
                pairs = list(split.edges)
                M[i - 1] = sorted(x for e in pairs for x in e)
                view = BipartiteView.contracted(g, pairs, L[i - 2])
                out2 = select_up_forest(view, Fraction(1, 2))
                mid = list(out2.bottom)
                M[i - 2] = greedy_independent_set(g, mid)
                mi1 = len(M[i - 1])
                bounds = [
                    ("|M_{i-1}| >= (1-1/t)|M_i|/t^2", mi1, (1 - eta) * a / t ** 2),
                    ("|M'_{i-2}| >= |M_{i-1}|/(32t^3)", len(mid), Fraction(mi1, 32 * t ** 3)),
                    ("|M_{i-2}| >= |M'_{i-2}|/t", len(M[i - 2]), Fraction(len(mid), t)),
                    ("|M_{i-2}| >= (1-1/t)|M_i|/(32t^6)", len(M[i - 2]),
                     (1 - eta) * a / (32 * t ** 6)),
                ]
                if t >= 33:
                    # (1-1/t)/(32 t^6) >= 1/t^7 exactly when t >= 33
                    bounds.append(("|M_{i-2}| >= |M_i|/t^7", len(M[i - 2]), Fraction(a, t ** 7)))
                steps.append(StepRecord(DOUBLE_STEP, i, i - 2, a, len(M[i - 2]),
                                        [out.tag, split.tag, out2.tag], bounds))
                i -= 2
        if check_forest:
            assert is_independent(g, M[i]), f"M_{i} is not independent"
            assert is_forest(g, [x for S in M.values() for x in S]), "level sets left a cycle"
    log.debug("triangle-free extraction: k=%d ell=%d steps=%d", k, i, len(steps))
    return _finish(g, t, root, k, M, steps)


def verify_certificate(g: Graph, cert: TreeCertificate) -> list[str]:
    """Independent re-check of a certificate; returns the list of problems."""
    problems = []
    if not is_induced_tree(g, cert.vertices):
        problems.append("vertex set does not induce a tree")
    tr = cert.trace
    if cert.provenance == STAR:
        if len(cert.vertices) < 2:
            problems.append("star too small")
    elif cert.provenance == INDUCED_PATH:
        pass
    elif tr is None:
        problems.append("level construction without trace")
    else:
        if len(tr.level_sets.get(tr.ell, ())) != 1:
            problems.append("final level set is not a singleton")
        if any(not S for S in tr.level_sets.values()):
            problems.append("empty level set")
        union = [x for S in tr.level_sets.values() for x in S]
        if not is_forest(g, union):
            problems.append("level sets do not induce a forest")
        for s in tr.steps:
            problems.extend(f"step {s.from_level}->{s.to_level}: {msg}" for msg in s.failed_bounds())
            want = 2 if s.kind == DOUBLE_STEP else 1
            if s.from_level - s.to_level != want:
                problems.append(f"step {s.kind} descends {s.from_level - s.to_level} levels")
        if len(cert.vertices) < 2 ** tr.b:
            problems.append(f"tree has {len(cert.vertices)} < 2^b = {2 ** tr.b} vertices")
        if sum(1 for s in tr.steps if s.kind == MATCHING_STEP) > tr.k:
            problems.append("more matching steps than levels")
    return problems
