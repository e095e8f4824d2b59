"""Exact (exponential-time) oracles used to validate everything else."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, GraphError, LevelDecomposition, is_independent

NAIVE_MAX_N = 20
ALPHA_MAX_N = 40
UP_GROWING_MAX_N = 40


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int
    exhausted: bool

    def as_dict(self) -> dict:
        return {"value": self.value, "witness": list(self.witness),
                "nodes_explored": self.nodes_explored, "exhausted": self.exhausted}


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


class _Budget(Exception):
    pass


def max_induced_tree(g: Graph, budget: int | None = None,
                     stop_at: int | None = None) -> ExactResult:
    """Largest induced tree by connected expansion with branch and bound.

    For each anchor v (in increasing order) the search grows trees whose
    minimum vertex is v. A node holds the current tree S, its candidate set
    (vertices outside S with exactly one neighbor in S) and an exclusion set;
    it branches on the lowest candidate: take it, or exclude it for the rest
    of the subtree. Taking w kills the other candidates adjacent to w, since
    they would close a cycle. A subtree is cut when |S| plus everything
    reachable from the candidates through free vertices cannot beat the best.

    `budget` caps the number of search nodes (exhausted=False when hit);
    `stop_at` ends the search as soon as a tree of that size is found, and
    the result is then only a lower bound (exhausted=False).
    """
    n = g.n
    if n == 0:
        return ExactResult(0, (), 0, True)
    adj = g.masks
    best = [1, 1]  # size, mask
    nodes = [0]
    full = (1 << n) - 1

    def reach_count(cand: int, free: int) -> int:
        seen = cand
        frontier = cand
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & free & ~seen
            seen |= frontier
        return seen.bit_count()

    def search(S: int, size: int, cand: int, free: int) -> None:
        # free: vertices neither in S nor excluded (within the anchor's range)
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _Budget
        if size > best[0]:
            best[0], best[1] = size, S
            if stop_at is not None and size >= stop_at:
                raise _Budget
        if not cand:
            return
        if size + reach_count(cand, free) <= best[0]:
            return
        low = cand & -cand
        w = low.bit_length() - 1
        aw = adj[w]
        dead = aw & cand
        new = aw & free & ~cand & ~low
        # new vertices are not adjacent to S (else they would be candidates)
        search(S | low, size + 1, (cand & ~aw & ~low) | new, free & ~low & ~dead)
        search(S, size, cand & ~low, free & ~low)

    complete = True
    try:
        for v in range(n):
            allowed = full & ~((1 << (v + 1)) - 1)
            if 1 + reach_count(adj[v] & allowed, allowed) <= best[0]:
                continue
            search(1 << v, 1, adj[v] & allowed, allowed)
    except _Budget:
        complete = False
    return ExactResult(best[0], tuple(_bits(best[1])), nodes[0], complete)


def max_induced_tree_naive(g: Graph) -> ExactResult:
    """Reference oracle: test every vertex subset (n <= 20)."""
    n = g.n
    if n > NAIVE_MAX_N:
        raise GraphError(f"naive search capped at n={NAIVE_MAX_N}, got {n}")
    if n == 0:
        return ExactResult(0, (), 1, True)
    adj = g.masks
    total = 1 << n
    # edge count of the subgraph induced by each mask, built from mask minus its lowest bit
    ecount = [0] * total
    best, best_mask = 0, 0
    for mask in range(1, total):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        e = ecount[rest] + (adj[v] & rest).bit_count()
        ecount[mask] = e
        size = mask.bit_count()
        if size <= best or e != size - 1:
            continue
        # size-1 edges: a tree iff connected
        seen = low
        frontier = low
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & mask & ~seen
            seen |= frontier
        if seen == mask:
            best, best_mask = size, mask
    return ExactResult(best, tuple(_bits(best_mask)), total, True)


def independence_number(g: Graph) -> ExactResult:
    """Exact alpha(G) by branching on a maximum-degree vertex (n <= 40)."""
    n = g.n
    if n > ALPHA_MAX_N:
        raise GraphError(f"independence_number capped at n={ALPHA_MAX_N}, got {n}")
    adj = g.masks
    best = [0, 0]
    nodes = [0]

    def rec(P: int, chosen: int, size: int) -> None:
        nodes[0] += 1
        # vertices of degree <= 1 inside P are always safe to take
        while P:
            for v in _bits(P):
                if (adj[v] & P).bit_count() <= 1:
                    chosen |= 1 << v
                    size += 1
                    P &= ~(adj[v] | 1 << v)
                    break
            else:
                break
        if size > best[0]:
            best[0], best[1] = size, chosen
        if not P or size + P.bit_count() <= best[0]:
            return
        v = max(_bits(P), key=lambda x: (adj[x] & P).bit_count())
        rec(P & ~(adj[v] | 1 << v), chosen | 1 << v, size + 1)
        rec(P & ~(1 << v), chosen, size)

    rec((1 << n) - 1, 0, 0)
    wit = tuple(_bits(best[1]))
    assert is_independent(g, wit)
    return ExactResult(best[0], wit, nodes[0], True)


def induced_trees(g: Graph) -> Iterator[int]:
    """Every induced tree of g exactly once, as a bitmask (no pruning)."""
    n = g.n
    adj = g.masks
    full = (1 << n) - 1

    def grow(S, cand, free):
        # take each candidate in turn, excluding it from the later siblings
        while cand:
            low = cand & -cand
            aw = adj[low.bit_length() - 1]
            dead = aw & cand
            new = aw & free & ~cand & ~low
            yield S | low
            yield from grow(S | low, (cand & ~aw & ~low) | new, free & ~low & ~dead)
            cand &= ~low
            free &= ~low

    for v in range(n):
        allowed = full & ~((1 << (v + 1)) - 1)
        yield 1 << v
        yield from grow(1 << v, adj[v] & allowed, allowed)


def max_tree_intersection(g: Graph, W: Iterable[int]) -> ExactResult:
    """Max over induced trees T of |T ∩ W|."""
    wmask = 0
    for w in W:
        wmask |= 1 << w
    best, best_mask, count = 0, 0, 0
    for T in induced_trees(g):
        count += 1
        c = (T & wmask).bit_count()
        if c > best:
            best, best_mask = c, T
    return ExactResult(best, tuple(_bits(best_mask)), count, True)


def max_up_growing_top_count(g: Graph, levels: LevelDecomposition) -> ExactResult:
    """Most top-level vertices an up-growing induced tree can contain.

    An up-growing tree has a single vertex on its lowest level; every other
    vertex has exactly one tree neighbor one level down and none on its own
    level. Search goes level by level from each possible root, trying every
    independent subset of the vertices with exactly one neighbor below.
    """
    if g.n > UP_GROWING_MAX_N:
        raise GraphError(f"up-growing search capped at n={UP_GROWING_MAX_N}, got {g.n}")
    adj = g.masks
    lv = [sum(1 << v for v in L) for L in levels.levels]
    top_index = len(lv) - 1
    top = lv[top_index]
    best = [0, 0]
    nodes = [0]

    def extend(layer: int, cur: int, tree: int) -> None:
        nodes[0] += 1
        if layer == top_index or not cur:
            c = (tree & top).bit_count()
            if c > best[0]:
                best[0], best[1] = c, tree
            return
        cand = 0
        for x in _bits(lv[layer + 1]):
            if (adj[x] & cur).bit_count() == 1:
                cand |= 1 << x
        cand_list = _bits(cand)

        def pick(idx: int, chosen: int) -> None:
            if idx == len(cand_list):
                if chosen:
                    extend(layer + 1, chosen, tree | chosen)
                else:
                    extend(top_index, 0, tree)
                return
            x = cand_list[idx]
            if not adj[x] & chosen:
                pick(idx + 1, chosen | 1 << x)
            pick(idx + 1, chosen)

        pick(0, 0)

    for j, mask in enumerate(lv):
        for r in _bits(mask):
            extend(j, 1 << r, 1 << r)
    return ExactResult(best[0], tuple(_bits(best[1])), nodes[0], True)
