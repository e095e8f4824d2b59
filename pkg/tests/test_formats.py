import itertools
import random

import networkx as nx
import pytest

from itree.formats import (
    FormatError,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
    write_edge_list,
    write_graph6,
)
from itree.generators import complete, cycle, random_graph
from itree.graph import from_edge_list


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield from_edge_list(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def nx_graph6(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).strip()


def test_k1_and_c5():
    assert write_graph6(from_edge_list(1, [])) == b"@"
    assert parse_graph6(write_graph6(cycle(5))) == cycle(5)


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_networkx_exhaustive(n):
    for g in all_graphs(n):
        enc = write_graph6(g)
        assert enc == nx_graph6(g)
        assert parse_graph6(enc) == g


def test_large_header():
    g = random_graph(70, 0.05, 1)
    enc = write_graph6(g)
    assert enc[0] == 126 and enc == nx_graph6(g)
    assert parse_graph6(enc) == g


def test_known_string():
    # K_4 and the header prefix
    assert write_graph6(complete(4)) == b"C~"
    assert parse_graph6(b">>graph6<<C~\n") == complete(4)


@pytest.mark.parametrize("bad", [b"", b"C", b"C~~", b"C\x7f", b"C ", b"~", b"~??", b"A`"])
def test_malformed(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_stream_reports_line_numbers():
    errors = []
    lines = [b"C~", b"", b"C", b"@"]
    got = list(iter_graph6(lines, skip_errors=True, errors=errors))
    assert [ln for ln, _ in got] == [1, 4]
    assert errors and errors[0][0] == 3
    with pytest.raises(FormatError, match="line 3"):
        list(iter_graph6(lines))


def test_edge_list_roundtrip():
    g = random_graph(12, 0.3, 3)
    text = write_edge_list(g)
    assert text.splitlines()[0] == f"12 {g.m}"
    assert parse_edge_list(text) == g
    with pytest.raises(FormatError):
        parse_edge_list("3 2\n0 1\n")


def test_read_graph_autodetect():
    g = cycle(5)
    assert read_graph(write_edge_list(g).encode()) == g
    assert read_graph(write_graph6(g) + b"\n") == g


def test_random_roundtrip_sample():
    rng = random.Random(7)
    for i in range(100):
        g = random_graph(rng.randint(0, 62), rng.random(), i)
        assert parse_graph6(write_graph6(g)) == g
