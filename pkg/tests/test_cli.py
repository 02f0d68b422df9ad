import json

import pytest

from graphsearch.cli import main, parse_sizes
from graphsearch.decision_tree import load_tree, save_tree, validate
from graphsearch.instance import (
    SearchInstance,
    gen_random_graph,
    hardness_reduction,
    is_connected,
    load_instance,
    path_instance,
    save_instance,
)


def write(path, g):
    path.write_bytes(save_instance(g))
    return str(path)


def test_gen_tree_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "tree", "--n", "8", "--seed", "7", "--out", str(a)]) == 0
    assert main(["gen", "tree", "--n", "8", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    t = load_instance(a.read_bytes())
    assert t.n == 8 and len(t.edges) == 7


def test_gen_graph_connected(tmp_path):
    out = tmp_path / "g.json"
    assert main(["gen", "graph", "--n", "5", "--p", "0.5", "--seed", "1", "--out", str(out)]) == 0
    g = load_instance(out.read_bytes())
    assert g == gen_random_graph(5, 0.5, 1, 1, 1)
    assert is_connected(g, g.all)


def test_gen_reduction_matches_library(tmp_path, capsys):
    t = path_instance(4)
    src = write(tmp_path / "t.json", t)
    out = tmp_path / "r.json"
    assert main(["gen", "reduction", "--in", src, "--budget", "3", "--out", str(out)]) == 0
    expected, budget = hardness_reduction(t, 3)
    assert load_instance(out.read_bytes()) == expected
    assert f"reduced budget: {budget}" in capsys.readouterr().err


def test_gen_reduction_needs_input():
    assert main(["gen", "reduction"]) == 2


def test_solve_oracle_p3(tmp_path, capsys):
    src = write(tmp_path / "p3.json", path_instance(3))
    assert main(["solve", "--in", src, "--oracle"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["stats"]["cost"] == 5 and out["root"] == 1


@pytest.mark.parametrize("algo", ["tree", "graph"])
def test_solve_output_reloads(tmp_path, capsys, algo):
    g = path_instance(6)
    src = write(tmp_path / "p6.json", g)
    out = tmp_path / "d.json"
    assert main(["solve", "--in", src, "--algo", algo, "--epsilon", "0.25", "--out", str(out)]) == 0
    d = load_tree(out.read_bytes())
    validate(g, d)
    stats = json.loads(out.read_bytes())["stats"]
    assert stats["recursion_depth"] >= 1 and stats["separators"]


def test_solve_tree_on_cycle_exits_2(tmp_path, capsys):
    cycle = SearchInstance.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    src = write(tmp_path / "c.json", cycle)
    assert main(["solve", "--in", src, "--algo", "tree"]) == 2
    assert "NotATree" in capsys.readouterr().err


def test_solve_exact_graph_too_large(tmp_path, capsys):
    src = write(tmp_path / "big.json", gen_random_graph(20, 0.2, seed=1))
    assert main(["solve", "--in", src, "--algo", "graph", "--solver", "exact"]) == 3
    assert main(["solve", "--in", src, "--oracle"]) == 3


def test_solve_heuristic_graph_large(tmp_path, capsys):
    g = gen_random_graph(20, 0.2, seed=1)
    src = write(tmp_path / "big.json", g)
    assert main(["solve", "--in", src, "--algo", "graph", "--solver", "heuristic"]) == 0
    validate(g, load_tree(capsys.readouterr().out))


def test_eval_letters12(tmp_path, capsys, letters12):
    g, d = letters12
    src = write(tmp_path / "g.json", g)
    tree = tmp_path / "d.json"
    tree.write_bytes(save_tree(d))
    assert main(["eval", "--in", src, "--tree", str(tree)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"valid": True, "cost_pathsum": 44, "cost_contribution": 44}


def test_eval_corrupted_tree(tmp_path, capsys):
    src = write(tmp_path / "g.json", path_instance(3))
    tree = tmp_path / "d.json"
    tree.write_text('{"root": 0, "parent": [null, 0, 0]}')
    assert main(["eval", "--in", src, "--tree", str(tree)]) == 2
    assert "InvalidTree" in capsys.readouterr().err


def test_eval_single_vertex(tmp_path, capsys):
    src = write(tmp_path / "g.json", SearchInstance.from_edges(1, [], [3], [4]))
    tree = tmp_path / "d.json"
    tree.write_text('{"root": 0, "parent": [null]}')
    assert main(["eval", "--in", src, "--tree", str(tree)]) == 0
    assert json.loads(capsys.readouterr().out)["cost_pathsum"] == 12


def test_missing_file_exits_2(tmp_path, capsys):
    assert main(["eval", "--in", str(tmp_path / "nope.json"), "--tree", "x"]) == 2


def test_separator_command(tmp_path, capsys):
    src = write(tmp_path / "p4.json", path_instance(4))
    assert main(["separator", "--in", src, "--k", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["cost"] == 1
    assert main(["separator", "--in", src, "--delta", "1/9"]) == 0
    assert json.loads(capsys.readouterr().out)["cost"] <= 1
    assert main(["separator", "--in", src, "--bruteforce"]) == 0
    assert json.loads(capsys.readouterr().out)["cost"] == 1


def test_cut_command(tmp_path, capsys):
    src = write(tmp_path / "p3.json", path_instance(3))
    assert main(["cut", "--in", src]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"A": [0], "S": [1], "B": [2], "ratio": "1/4"}
    big = write(tmp_path / "p30.json", path_instance(30))
    assert main(["cut", "--in", big]) == 3
    assert main(["cut", "--in", big, "--heuristic"]) == 0


def test_compare_empty_suite(capsys):
    assert main(["compare", "--sizes", ""]) == 0
    assert capsys.readouterr().out == "instance,n,total_weight,algorithm,param,cost,opt,ratio,seed\n"


def test_compare_rows_and_bounds(capsys):
    assert main(["compare", "--kind", "tree", "--sizes", "2-5", "--seeds", "3", "--epsilons", "0.5,1"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 1 + 4 * 3 * 2
    ratios = [float(line.split(",")[7]) for line in lines[1:]]
    assert max(ratios) <= 4.5


def test_compare_graph_json(capsys):
    assert main(["compare", "--kind", "graph", "--sizes", "3,4", "--seeds", "2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 4 and all(r["param"] == "exact" for r in rows)


def test_compare_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["compare", "--kind", "tree", "--sizes", "2-6", "--seeds", "4", "--max-weight", "9"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_parse_sizes():
    assert parse_sizes("2-4,7") == [2, 3, 4, 7]
    assert parse_sizes("") == []
