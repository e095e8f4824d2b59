import itertools

import pytest

from itree.exact import (
    independence_number,
    induced_trees,
    max_induced_tree,
    max_induced_tree_naive,
    max_tree_intersection,
    max_up_growing_top_count,
)
from itree.generators import complete, complete_bipartite, cycle, path, path_of_bicliques, random_graph
from itree.graph import GraphError, bfs_levels, from_edge_list, is_independent, is_induced_tree


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_path(n):
    assert max_induced_tree(path(n)).value == n
    assert max_induced_tree_naive(path(n)).value == n


def test_known_values():
    assert max_induced_tree(path_of_bicliques(3)[0]).value == 5
    # K_{3,3}: a star K_{1,3}; C_5: delete one vertex to get P_4
    for fn in (max_induced_tree, max_induced_tree_naive):
        assert fn(complete_bipartite(3, 3)).value == 4
        assert fn(cycle(5)).value == 4
        assert fn(complete(4)).value == 2
    assert max_induced_tree(from_edge_list(0, [])).value == 0


def test_witness_and_determinism():
    g = random_graph(13, 0.3, 11)
    r1, r2 = max_induced_tree(g), max_induced_tree(g)
    assert r1 == r2 and r1.exhausted
    assert is_induced_tree(g, r1.witness) and len(r1.witness) == r1.value


def test_budget_reports_not_exhausted():
    g = random_graph(30, 0.2, 2)
    res = max_induced_tree(g, budget=50)
    assert not res.exhausted and res.nodes_explored > 50
    assert is_induced_tree(g, res.witness)
    full = max_induced_tree(g)
    assert full.exhausted and full.value >= res.value


def test_stop_at():
    res = max_induced_tree(path(10), stop_at=4)
    assert not res.exhausted and res.value >= 4


def test_naive_cap():
    with pytest.raises(GraphError):
        max_induced_tree_naive(path(21))


def test_oracle_equivalence_atlas(atlas):
    for g in atlas:
        assert max_induced_tree(g).value == max_induced_tree_naive(g).value


def _alpha_naive(g):
    return max(len(S) for r in range(g.n + 1) for S in itertools.combinations(range(g.n), r)
               if is_independent(g, S))


def test_independence_number():
    assert independence_number(cycle(5)).value == 2
    assert independence_number(complete_bipartite(3, 3)).value == 3
    for seed in range(60):
        g = random_graph(seed % 12 + 1, 0.1 + (seed % 5) / 6, seed)
        res = independence_number(g)
        assert res.value == _alpha_naive(g)
        assert is_independent(g, res.witness) and len(res.witness) == res.value


def test_induced_trees_enumerates_each_once():
    g = random_graph(9, 0.35, 4)
    got = list(induced_trees(g))
    assert len(got) == len(set(got))
    expected = {sum(1 << v for v in S) for r in range(1, g.n + 1)
                for S in itertools.combinations(range(g.n), r) if is_induced_tree(g, S)}
    assert set(got) == expected


def test_max_tree_intersection():
    g, _ = path_of_bicliques(2)
    assert max_tree_intersection(g, [0, 1, 2]).value == 3
    assert max_tree_intersection(cycle(6), range(6)).value == 5


def test_up_growing_examples():
    g, parts = path_of_bicliques(3)
    levels = bfs_levels(g, parts[0][0])
    assert [list(L) for L in levels.levels] == parts
    assert max_up_growing_top_count(g, levels).value == 1
    star = complete_bipartite(1, 6)
    assert max_up_growing_top_count(star, bfs_levels(star, 0)).value == 6


def test_up_growing_respects_single_down_neighbor():
    # C_4 rooted at 0: top vertex 2 has two neighbors on level 1
    c4 = cycle(4)
    assert max_up_growing_top_count(c4, bfs_levels(c4, 0)).value == 1
    # K_{2,3} rooted in the 3-side: level 2 = other two of the 3-side
    g = complete_bipartite(2, 3)
    res = max_up_growing_top_count(g, bfs_levels(g, 2))
    assert res.value == 2
    assert is_induced_tree(g, res.witness)
