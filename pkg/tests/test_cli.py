import io
import json
import sys

import jsonschema
import pytest

from itree.cli import SCHEMA_PATH, run
from itree.formats import parse_graph6, write_graph6
from itree.generators import complete, complete_bipartite, cycle, path_of_bicliques

SCHEMA = json.loads(SCHEMA_PATH.read_text())


def call(argv, stdin=b"", capsys=None, monkeypatch=None):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    def _call(argv, stdin=b""):
        return call(argv, stdin, capsys, monkeypatch)
    return _call


def reports(out):
    docs = [json.loads(line) for line in out.splitlines() if line.strip()]
    for d in docs:
        jsonschema.validate(d, SCHEMA)
    return docs


def test_generate_graph6(cli):
    code, out, _ = cli(["generate", "--family", "path-of-bicliques", "--k", "3", "--format", "graph6"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1 and parse_graph6(lines[0]).n == 9


def test_generate_json_and_edge_list(cli):
    code, out, _ = cli(["generate", "--family", "blow-up", "--l", "2", "--format", "json"])
    (doc,) = reports(out)
    assert doc["result"]["n"] == 4 * 7 and doc["result"]["tree_nodes"] == 7
    code, out, _ = cli(["generate", "--family", "random-trianglefree", "--n", "30",
                        "--seed", "4", "--format", "edge-list"])
    assert code == 0 and out.splitlines()[0].startswith("30 ")
    code2, out2, _ = cli(["generate", "--family", "random-trianglefree", "--n", "30",
                          "--seed", "4", "--format", "edge-list"])
    assert out2 == out


def test_extract_c5(cli):
    code, out, _ = cli(["extract", "--mode", "trianglefree", "--t", "5"], write_graph6(cycle(5)))
    (doc,) = reports(out)
    assert code == 0 and doc["verdict"]["ok"]
    jsonschema.validate(doc["result"], SCHEMA["$defs"]["extract_result"])
    assert doc["result"]["size"] == 3


def test_extract_trace_out_and_reproducible(cli, tmp_path):
    g, _ = path_of_bicliques(6)
    argv = ["extract", "--mode", "bipartite", "--t", "14", "--trace-out", str(tmp_path / "tr.json")]
    code, out, _ = cli(argv, write_graph6(g))
    code2, out2, _ = cli(argv, write_graph6(g))
    (a,), (b,) = reports(out), reports(out2)
    assert code == code2 == 0
    a.pop("timing"), b.pop("timing")
    assert a == b
    trace = json.loads((tmp_path / "tr.json").read_text())
    assert trace["b"] == a["result"]["b"]
    assert a["result"]["provenance"] == "LevelConstruction"


def test_extract_batch(cli):
    data = b"\n".join(write_graph6(g) for g in (cycle(5), cycle(7), complete_bipartite(2, 3)))
    code, out, _ = cli(["extract", "--t", "4"], data)
    docs = reports(out)
    assert code == 0 and len(docs) == 3 and all(d["verdict"]["ok"] for d in docs)


def test_extract_rejects_triangle(cli):
    code, out, err = cli(["extract", "--mode", "trianglefree", "--t", "5"], write_graph6(complete(3)))
    assert code == 2 and "triangle" in err and out == ""


def test_extract_edge_list_input(cli):
    code, out, _ = cli(["extract", "--t", "3"], b"5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert code == 0 and reports(out)[0]["verdict"]["ok"]


def test_exact_t(cli):
    g, _ = path_of_bicliques(3)
    code, out, _ = cli(["exact", "--op", "t"], write_graph6(g))
    (doc,) = reports(out)
    assert code == 0 and doc["result"]["value"] == 5
    code, out, _ = cli(["exact", "--op", "alpha"], write_graph6(cycle(5)))
    assert reports(out)[0]["result"]["value"] == 2


def test_exact_up_growing_claim(cli):
    star = complete_bipartite(1, 4)
    code, out, _ = cli(["exact", "--op", "up-growing", "--claim", "2"], write_graph6(star))
    (doc,) = reports(out)
    assert code == 1 and doc["result"]["value"] == 4 and not doc["verdict"]["ok"]


def test_fsearch_jsonl_and_golden(cli, tmp_path):
    golden = tmp_path / "golden.json"
    code, out, _ = cli(["fsearch", "--n", "1-4", "--class", "trianglefree", "--golden", str(golden)])
    docs = reports(out)
    assert code == 0 and [d["result"]["value"] for d in docs] == [1, 2, 3, 3]
    for d in docs:
        jsonschema.validate(d["result"], SCHEMA["$defs"]["fsearch_result"])
    stored = json.loads(golden.read_text())
    stored["trianglefree/4/native-enumeration"] = 2
    golden.write_text(json.dumps(stored))
    code, out, _ = cli(["fsearch", "--n", "4", "--golden", str(golden)])
    assert code == 1 and not reports(out)[0]["verdict"]["ok"]


def test_fsearch_stream(cli):
    data = b"\n".join([write_graph6(cycle(5)), b"C", write_graph6(cycle(4))])
    code, out, _ = cli(["fsearch", "--n", "5", "--source", "stream"], data)
    (doc,) = reports(out)
    assert doc["result"]["value"] == 4 and doc["result"]["errors"][0]["line"] == 2
    assert code == 1


def test_verify_lemmas(cli):
    g = complete_bipartite(3, 4)
    code, out, _ = cli(["verify", "lemma4", "--eta", "1/3"], write_graph6(g))
    (doc,) = reports(out)
    assert code == 0 and doc["result"]["tag"] == "BranchingUpForest"
    code, out, _ = cli(["verify", "lemma5", "--eta", "9/10"], write_graph6(cycle(5)))
    (doc,) = reports(out)
    assert code == 0 and doc["result"]["vertices"] == [3]
    code, out, _ = cli(["verify", "tree", "--vertices", "0,1,2"], write_graph6(cycle(5)))
    assert code == 0
    code, out, _ = cli(["verify", "tree", "--vertices", "0,1,2,3,4"], write_graph6(cycle(5)))
    assert code == 1


def test_usage_errors(cli):
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 2
    code, _, err = cli(["extract"], b"not a graph\x01")
    assert code == 2 and err
