import json

import pytest

from wordrep import families
from wordrep.cli import main, parse_graph, parse_word
from wordrep.graphs import Graph
from wordrep.io import to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return json.loads(out) if out.strip() else None, code


def test_parse_word():
    assert parse_word("1,2,13") == (1, 2, 13)
    assert parse_word("1213423") == (1, 2, 1, 3, 4, 2, 3)
    assert parse_word("138(10)7") == (1, 3, 8, 10, 7)
    assert parse_word("(10)(11)") == (10, 11)
    with pytest.raises(ValueError):
        parse_word("")


def test_parse_graph_specs(tmp_path):
    assert parse_graph("family:wheel:5") == families.wheel(5)
    assert parse_graph("family:petersen") == families.petersen()
    assert parse_graph("edges:3:1-2,2-3") == Graph(3, [(1, 2), (2, 3)])
    edge_path = tmp_path / "g.txt"
    edge_path.write_text("3 2\n1 2\n2 3\n")
    assert parse_graph(str(edge_path)) == Graph(3, [(1, 2), (2, 3)])
    g6_path = tmp_path / "g.g6"
    g6_path.write_text(to_graph6(families.prism(3)) + "\n")
    assert parse_graph(str(g6_path)) == families.prism(3)
    with pytest.raises(ValueError):
        parse_graph("nonsense:spec")


def test_decide_exit_codes(capsys):
    payload, code = run(capsys, "decide", "family:wheel:5")
    assert payload["verdict"] is False and code == 1
    payload, code = run(capsys, "decide", "family:prism:3")
    assert payload["verdict"] is True and code == 0


def test_check_word(capsys, tmp_path):
    path = tmp_path / "fig1.txt"
    path.write_text("4 4\n1 2\n2 3\n2 4\n3 4\n")
    payload, code = run(capsys, "check-word", "1,2,1,3,4,2,3", "--graph", str(path))
    assert payload["verdict"] is True and code == 0
    payload, code = run(capsys, "check-word", "1213423", "--graph", str(path))
    assert payload["verdict"] is True and code == 0
    payload, code = run(capsys, "check-word", "1,2,1,2", "--graph", "family:empty:2")
    assert payload["verdict"] is False and code == 1


def test_repnum(capsys):
    payload, code = run(capsys, "repnum", "family:prism:3")
    assert payload["repnum"] == 3 and code == 0
    payload, code = run(capsys, "repnum", "family:wheel:5")
    assert payload["repnum"] is None and payload["verdict"] is False and code == 1


def test_word_graph_formats(capsys):
    payload, code = run(capsys, "word-graph", "1213423")
    assert code == 0 and payload["edges"] == [[1, 2], [2, 3], [2, 4], [3, 4]]
    payload, code = run(capsys, "word-graph", "1213423", "--format", "graph6")
    assert payload["graph6"] == to_graph6(Graph(4, [(1, 2), (2, 3), (2, 4), (3, 4)]))
    payload, code = run(capsys, "word-graph", "1213423", "--format", "dot")
    assert "1 -- 2;" in payload["dot"]


def test_orient_word(capsys):
    payload, code = run(capsys, "orient-word", "2421341")
    assert code == 0
    assert sorted(tuple(a) for a in payload["witness_orientation"]) == [
        (1, 3), (2, 4), (4, 1), (4, 3),
    ]
    assert payload["semi_transitive"] is True


def test_orient(capsys):
    payload, code = run(capsys, "orient", "family:petersen", "--format", "dot")
    assert code == 0 and payload["verdict"] is True and "->" in payload["dot"]
    payload, code = run(capsys, "orient", "family:wheel:5")
    assert code == 1 and payload["verdict"] is False
    assert payload["stats"]["exhaustive"] is True


def test_represent(capsys):
    payload, code = run(capsys, "represent", "family:cycle:6", "--k", "2")
    assert code == 0 and payload["witness_word"]
    payload, code = run(capsys, "represent", "family:prism:3", "--k", "2")
    assert code == 1 and payload["verdict"] is False
    payload, code = run(capsys, "represent", "family:prism:3")
    assert code == 0 and payload["k"] == 3
    payload, code = run(capsys, "represent", "family:star:6", "--pattern", "123")
    assert code == 1 and payload["refutation_complete"] is True
    payload, code = run(capsys, "represent", "family:cycle:5", "--pattern", "132")
    assert code == 0 and payload["witness_word"]


def test_perm_repnum(capsys):
    payload, code = run(capsys, "perm-repnum", "family:crown:3")
    assert code == 0 and payload["perm_repnum"] == 3
    payload, code = run(capsys, "perm-repnum", "family:cycle:5")
    assert code == 1 and payload["perm_repnum"] is None


def test_family(capsys):
    payload, code = run(capsys, "family", "wheel:5")
    assert code == 0 and payload["n"] == 6
    payload, code = run(capsys, "family", "cycle:6")
    assert payload["known_representant"] == "1,6,2,1,3,2,4,3,5,4,6,5"


def test_op(capsys):
    payload, code = run(capsys, "op", "complement", "family:complete:3", "--format", "edges")
    assert code == 0 and payload["edges"] == []
    payload, code = run(capsys, "op", "apex", "family:cycle:5", "--format", "graph6")
    assert payload["graph6"] == to_graph6(families.wheel(5))
    payload, code = run(
        capsys, "op", "cartesian", "family:path:2", "--other", "family:path:2"
    )
    assert payload["m"] == 4
    payload, code = run(
        capsys, "op", "subdivide", "family:complete:2", "--edge", "1", "2", "--parts", "2"
    )
    assert payload["n"] == 3
    payload, code = run(
        capsys, "op", "glue", "family:complete:2", "--other", "family:complete:2",
        "--mode", "by-edge", "--u", "2", "--v", "1",
    )
    assert payload["n"] == 4 and payload["m"] == 3


def test_enumerate(capsys):
    payload, code = run(capsys, "enumerate", "5", "--count-nonrep")
    assert code == 0
    assert payload["corpus_size"] == 21 and payload["count_non_representable"] == 0
    payload, code = run(capsys, "enumerate", "6", "--count-nonrep", "--minimal")
    assert payload["count_non_representable"] == 1
    assert payload["minimal_count"] == 1


def test_enumerate_checkpoint_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("WORDREP_CHECKPOINT_DIR", str(tmp_path))
    payload, code = run(capsys, "enumerate", "5", "--count-nonrep")
    assert code == 0
    assert (tmp_path / "n5_connected.ckpt").exists()


def test_pattern_count(capsys):
    payload, code = run(
        capsys, "pattern-count", "family:complete:4", "--pattern", "132", "--max-len", "7"
    )
    assert code == 0 and payload["count"] == 27


def test_budget_exit_code(capsys):
    payload, code = run(capsys, "orient", "family:wheel:7", "--max-nodes", "3")
    assert code == 3


def test_input_error_exit_code(capsys):
    code = main(["decide", "family:nosuch:3"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error" in captured.err


def test_deterministic_output(capsys):
    a, _ = run(capsys, "represent", "family:cycle:6", "--k", "2")
    b, _ = run(capsys, "represent", "family:cycle:6", "--k", "2")
    a.pop("stats"), b.pop("stats")
    assert a == b
