import json

import pytest

from tropmod.canon import canonical_form, is_isomorphic
from tropmod.cli import main
from tropmod.formats import (
    curve_from_json,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    model_from_json,
    model_to_json,
)
from tropmod.graph import GraphError, WeightedGraph
from tropmod.valuation import NodalModel, parse_series

THETA_JSON = {
    "vertices": [{"id": 0, "genus": 0}, {"id": 1, "genus": 0}],
    "edges": [{"id": 1, "ends": [0, 1]}, {"id": 2, "ends": [0, 1]}, {"id": 3, "ends": [1, 0]}],
    "legs": [],
}


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_enumerate_genus2(capsys):
    status, out, _ = run(capsys, "enumerate", "--genus", "2")
    data = json.loads(out)
    assert status == 0
    assert len(data["classes"]) == 7
    assert data["counts_by_edges"] == {"0": 1, "1": 2, "2": 2, "3": 2}


def test_enumerate_round_trip(capsys):
    _, out, _ = run(capsys, "enumerate", "--genus", "2", "--legs", "1")
    for row in json.loads(out)["classes"]:
        G = graph_from_json(row["graph"])
        assert canonical_form(G).hex() == row["key"]


def test_deterministic_output(capsys):
    outs = [run(capsys, "complex", "-g", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_jinv(capsys):
    assert run(capsys, "jinv", "--a", "-3", "--b", "2")[1] == "discriminant 0\nsingular\n"
    assert run(capsys, "jinv", "--a", "1", "--b", "0")[1] == "discriminant 4\nj 1\n"
    assert run(capsys, "jinv", "--a", "1/2", "--b", "1")[1] == "discriminant 55/2\nj 1/55\n"


def test_contract_theta(capsys, tmp_path):
    path = tmp_path / "theta.json"
    path.write_text(json.dumps(THETA_JSON))
    status, out, _ = run(capsys, "contract", "--input", str(path), "--edges", "e1")
    assert status == 0
    H = graph_from_json(json.loads(out))
    assert is_isomorphic(H, WeightedGraph.build([0], [(0, 0), (0, 0)]))
    status, out, _ = run(capsys, "contract", "-i", str(path), "--edges", "1,2", "3")
    assert graph_from_json(json.loads(out)).genus_of == {0: 2}


def test_contract_unknown_edge(capsys, tmp_path):
    path = tmp_path / "theta.json"
    path.write_text(json.dumps(THETA_JSON))
    status, _, err = run(capsys, "contract", "--input", str(path), "--edges", "e9")
    assert status == 1 and "unknown edge" in err


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": [\n  {"id": 0, }\n]}')
    status, _, err = run(capsys, "contract", "--input", str(path), "--edges", "0")
    assert status == 1
    assert "line 2 column" in err


def test_guard(capsys, monkeypatch):
    status, _, err = run(capsys, "enumerate", "--genus", "6", "--legs", "3")
    assert status == 1 and "guard" in err
    monkeypatch.setenv("TMW_MAX_COMPLEXITY", "1")
    assert run(capsys, "enumerate", "--genus", "2")[0] == 1
    assert run(capsys, "enumerate", "--genus", "2", "--force")[0] == 0


def test_unstable_range(capsys):
    status, _, err = run(capsys, "poset", "--genus", "0", "--legs", "2")
    assert status == 1 and "unstable range" in err


def test_check_reversal(capsys):
    status, out, _ = run(capsys, "check-reversal", "--genus", "2")
    assert status == 0 and out.startswith("PASS") and "covers=8" in out


def test_check_reversal_failure_exit_code(capsys, monkeypatch):
    import tropmod.cli as cli
    from tropmod.tropical import ReversalReport

    monkeypatch.setattr(cli, "check_order_reversal",
                        lambda g, n, force: ReversalReport(g, n, False, 0, 0, 0, ["boom"]))
    status, _, err = run(capsys, "check-reversal", "--genus", "2")
    assert status == 2 and "boom" in err


def test_poset_formats(capsys):
    data = json.loads(run(capsys, "poset", "-g", "2")[1])
    assert len(data["elements"]) == 7 and len(data["covers"]) == 8
    keys = {e["key"] for e in data["elements"]}
    assert all(c in keys and p in keys for c, p in data["covers"])
    dot = run(capsys, "poset", "-g", "2", "--format", "dot")[1]
    assert dot.startswith("digraph") and dot.count("->") == 8 and dot.count("rank=same") == 4


def test_complex_json(capsys):
    data = json.loads(run(capsys, "complex", "-g", "2")[1])
    assert data["dim"] == 3 and len(data["cones"]) == 7
    assert sorted(c["autOrder"] for c in data["cones"] if c["dim"] == 3) == [8, 12]
    assert all(len(f["contract"]) == 1 for f in data["faces"])


def test_tropicalize(capsys, tmp_path):
    model = dict(THETA_JSON, node_eq={"1": "1*t^2 + 1*t^5", "2": "t", "3": "0"})
    path = tmp_path / "model.json"
    path.write_text(json.dumps(model))
    status, out, _ = run(capsys, "tropicalize", "--input", str(path))
    assert status == 0
    assert json.loads(out)["lengths"] == {"1": "2", "2": "1", "3": "inf"}
    T = curve_from_json(json.loads(out))
    assert T.lengths[3] == float("inf")


def test_tropicalize_unit_is_rejected(capsys, tmp_path):
    model = dict(THETA_JSON, node_eq={"1": "1 + t", "2": "t", "3": "t"})
    path = tmp_path / "model.json"
    path.write_text(json.dumps(model))
    status, _, err = run(capsys, "tropicalize", "--input", str(path))
    assert status == 1 and "not a node" in err


def test_output_file(capsys, tmp_path):
    out = tmp_path / "g2.dot"
    assert run(capsys, "enumerate", "-g", "2", "--format", "dot", "-o", str(out))[0] == 0
    text = out.read_text()
    assert text.count("subgraph cluster_") == 7


def test_graph_json_round_trip(dumbbell):
    G = WeightedGraph.build([1, 0, 2], {4: (0, 1), 9: (1, 1), 2: (1, 2)}, {1: 0, 3: 1})
    assert graph_from_json(json.loads(json.dumps(graph_to_json(G)))) == G


@pytest.mark.parametrize("bad", [
    [],
    {"edges": []},
    {"vertices": [{"id": 0, "genus": "1"}]},
    {"vertices": [{"id": 0, "genus": 1}, {"id": 0, "genus": 1}]},
    {"vertices": [{"id": 0, "genus": 1}], "edges": [{"id": 0, "ends": [0]}]},
    {"vertices": [{"id": 0, "genus": 1}], "edges": [{"id": 0, "ends": [0, 3]}]},
])
def test_graph_json_errors(bad):
    with pytest.raises(GraphError):
        graph_from_json(bad)


def test_model_json_round_trip(theta):
    m = NodalModel(theta, {0: parse_series("t^(3/2) - t^2"), 1: parse_series("t"),
                           2: parse_series("0")})
    back = model_from_json(json.loads(json.dumps(model_to_json(m))))
    assert back.graph == theta and dict(back.node_eq) == dict(m.node_eq)


def test_dot_export_keeps_loops_and_multi_edges(dumbbell, theta):
    dot = graph_to_dot(dumbbell)
    assert 'v0 [label="v0 (g=0)"]' in dot
    assert "v0 -- v0" in dot and "v1 -- v1" in dot
    assert graph_to_dot(theta).count("v0 -- v1") == 3
