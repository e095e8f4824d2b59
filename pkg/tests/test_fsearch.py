import json
import math

import pytest

from itree.exact import max_induced_tree
from itree.formats import parse_graph6, write_graph6
from itree.fsearch import enumerate_labeled, f_search
from itree.generators import cycle, path_of_bicliques_subgraph, random_connected_bipartite
from itree.graph import GraphError, is_bipartite, is_connected, is_triangle_free

from conftest import DATA

GOLDEN = json.loads((DATA / "fsearch_golden.json").read_text())


def test_trivial_values():
    for cls in ("trianglefree", "bipartite"):
        assert f_search(1, cls).value == 1
        assert f_search(2, cls).value == 2


def test_labeled_counts():
    # labeled triangle-free graphs on 1..5 vertices
    assert [sum(1 for _ in enumerate_labeled(n, "trianglefree")) for n in range(1, 6)] == [1, 2, 7, 41, 388]


@pytest.mark.parametrize("cls", ["trianglefree", "bipartite"])
@pytest.mark.parametrize("n", range(1, 6))
def test_matches_golden(cls, n):
    res = f_search(n, cls)
    gold = GOLDEN[cls][str(n)]
    assert res.value == gold["value"]
    assert res.argmin_count == gold["argmin_count"]
    assert res.graphs_examined == gold["connected_members"]
    for g6 in res.argmin_graphs:
        g = parse_graph6(g6)
        assert is_connected(g) and max_induced_tree(g).value == res.value
        assert is_triangle_free(g) if cls == "trianglefree" else is_bipartite(g)


def test_parallel_agrees():
    a = f_search(5, "trianglefree")
    b = f_search(5, "trianglefree", jobs=2)
    assert (a.value, a.argmin_count, a.graphs_examined) == (b.value, b.argmin_count, b.graphs_examined)


def test_native_cap():
    with pytest.raises(GraphError):
        f_search(9, "trianglefree")


def test_stream_source():
    lines = [write_graph6(cycle(5)), b"garbage!", write_graph6(cycle(4)),
             write_graph6(path_of_bicliques_subgraph(5)[0]), write_graph6(cycle(3))]
    res = f_search(5, "trianglefree", source="stream", stream=lines)
    # the trimmed construction on 5 vertices is P_5, so only C_5 attains 4
    assert res.value == 4 and res.argmin_count == 1 and res.graphs_examined == 2
    assert res.skipped == 2  # C_4 has the wrong order; C_3 is not in the class
    assert res.errors and res.errors[0][0] == 2
    assert res.source == "external-stream"


def test_stream_abort():
    with pytest.raises(GraphError, match="line 1"):
        f_search(5, "trianglefree", source="stream", stream=[b"C"], abort_on_error=True)


@pytest.mark.parametrize("n", range(1, 9))
def test_bipartite_upper_bound(n):
    # the trimmed biclique path caps f_B(n) by 2*ceil(sqrt n) - 1
    g, _ = path_of_bicliques_subgraph(n)
    assert max_induced_tree(g).value <= 2 * math.ceil(math.sqrt(n)) + 1
    if n <= 5:
        assert GOLDEN["bipartite"][str(n)]["value"] <= 2 * math.ceil(math.sqrt(n)) + 1


def test_stream_random_bipartite_bound():
    n = 9
    lines = [write_graph6(random_connected_bipartite(n, s % 12, s)) for s in range(40)]
    lines.append(write_graph6(path_of_bicliques_subgraph(n)[0]))
    res = f_search(n, "bipartite", source="stream", stream=lines)
    assert res.value <= 2 * math.ceil(math.sqrt(n)) + 1
