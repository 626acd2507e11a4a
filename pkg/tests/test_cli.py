from __future__ import annotations

import io
import json
import re
import subprocess
import sys

import pytest

from cominuscule.cli import render_poset, run_command
from cominuscule.posets import box_embedding, parabolic, radical_poset


def run(*argv):
    buf = io.StringIO()
    code = run_command(list(argv), buf)
    return code, buf.getvalue()


def report(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


# a minimal DOT grammar: header, attribute/node/edge/subgraph statements, closing brace
_DOT_STMT = re.compile(
    r'^\s*(?:rankdir=\w+;'
    r'|n\d+ \[label="[^"]*"\];'
    r'|n\d+ -> n\d+ \[label="[^"]*"\];'
    r'|\{ rank=same;(?: n\d+;)+ \}'
    r'|// .*)$'
)


def parse_dot(text):
    lines = text.strip().splitlines()
    assert lines[0] == "digraph radical_poset {" and lines[-1] == "}"
    nodes, edges = set(), []
    for line in lines[1:-1]:
        assert _DOT_STMT.match(line), line
        m = re.match(r"\s*(n\d+) -> (n\d+) \[label=\"α(\d+)\"\];", line)
        if m:
            edges.append((m.group(1), m.group(2), int(m.group(3))))
            continue
        m = re.match(r'\s*(n\d+) \[label="(\([-\d,]+\))"\];', line)
        if m:
            nodes.add(m.group(1))
    assert {a for a, _, _ in edges} | {b for _, b, _ in edges} <= nodes
    return nodes, edges


def test_classify_e6():
    code, rep = report("classify", "--type", "E6")
    assert code == 0
    assert rep["result"]["cominuscule_nodes"] == [1, 5]
    assert rep["schema_version"] == 1 and "tool_version" in rep


def test_classify_family_and_rank():
    code, rep = report("classify", "--type", "C", "--rank", "3")
    assert code == 0 and rep["result"]["cominuscule_nodes"] == [3]


def test_counterexample_preset():
    code, rep = report("counterexample")
    assert code == 1
    viol = rep["result"]["violation"]
    assert viol["identity"] == "ξ4 - ξ2 = ξ5 - ξ1"
    assert viol["lhs"] == {"(1,2,1)": 1, "(0,1,1)": -1}
    assert viol["rhs"] == {"(0,0,1)": -1, "(1,1,1)": 1}
    assert rep["result"]["split"] == "unsplit"


def test_verify_symbolic_c3():
    code, rep = report("verify", "--type", "C", "--rank", "3", "--node", "3", "--canonical",
                       "--method", "symbolic")
    assert code == 0
    assert rep["result"]["pairs"] == 36 and rep["result"]["in_levi"] == 36


def test_verify_symbolic_unsplit_c3_fails():
    code, rep = report("verify", "--type", "C3", "--word", "3 2 3 2 1 2 3 2 1", "--method", "symbolic")
    assert code == 1
    assert rep["result"]["in_levi"] < rep["result"]["pairs"]


def test_feasibility_report():
    code, rep = report("feasibility", "--type", "C3")
    assert code == 0
    assert rep["result"]["pairs"] == 15 and rep["result"]["violations"] == 0
    code, rep = report("feasibility", "--type", "C3", "--method", "oracle")
    assert code == 0 and rep["result"]["violations"] == 0


def test_feasibility_lemma_refuses_unsplit_order():
    code, _ = run("feasibility", "--type", "C3", "--word", "3 2 3 2 1 2 3 2 1", "--method", "lemma")
    assert code == 2
    code, rep = report("feasibility", "--type", "C3", "--word", "3 2 3 2 1 2 3 2 1", "--method", "oracle")
    assert code == 1 and rep["result"]["violations"] >= 1


def test_order_command():
    code, rep = report("order", "--type", "C3", "--word", "3,2,3,2,1,2,3,2,1")
    assert code == 0
    assert rep["result"]["split"] == "unsplit" and rep["result"]["convex"]


def test_conjecture_command():
    code, rep = report("conjecture", "--type", "C3")
    assert code == 0 and rep["result"]["violations"] == []


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["classify"],
    ["classify", "--type", "Q5"],
    ["poset", "--type", "C3", "--node", "1"],
    ["poset", "--type", "D5"],
    ["order", "--type", "C3", "--word", "1 1"],
    ["classify", "--type", "E6", "--frobnicate"],
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2
    assert capsys.readouterr().err


def test_no_command(capsys):
    assert run()[0] == 2


def test_b3_dot_path():
    _, text = run("poset", "--type", "B3")
    nodes, edges = parse_dot(text)
    assert len(nodes) == 5
    assert [lab for _, _, lab in edges] == [2, 3, 3, 2]


def test_e6_render_counts():
    _, dot = run("poset", "--type", "E6", "--node", "5")
    nodes, edges = parse_dot(dot)
    _, js = run("poset", "--type", "E6", "--node", "5", "--format", "json")
    doc = json.loads(js)
    assert len(nodes) == len(doc["nodes"]) == 16
    assert len(edges) == len(doc["edges"]) == 20
    ids = {tuple(n["root"]): n["id"] for n in doc["nodes"]}
    top = (ids[(1, 2, 3, 2, 1, 1)], ids[(1, 2, 3, 2, 1, 2)], 6)
    assert top in edges
    assert {(e["source"], e["target"], e["label"]) for e in doc["edges"]} == {(a, b, f"α{c}") for a, b, c in edges}


def test_e6_dot_labels_are_roots():
    _, dot = run("poset", "--type", "E6", "--node", "5")
    assert '[label="(1,2,3,2,1,2)"]' in dot


def test_json_without_embedding_omits_coords():
    poset = radical_poset(parabolic("C3", 3))
    doc = json.loads(render_poset(poset, None, "json"))
    assert all("coords" not in n for n in doc["nodes"])
    doc = json.loads(render_poset(poset, box_embedding(poset), "json"))
    assert all("coords" in n for n in doc["nodes"])


def test_ascii_layout():
    _, text = run("poset", "--type", "C3", "--format", "ascii")
    assert text.splitlines() == ["(0,0,1)", "(0,1,1) (0,2,1)", "(1,1,1) (1,2,1) (2,2,1)"]


@pytest.mark.parametrize("argv", [
    ["classify", "--type", "E7"],
    ["counterexample"],
    ["feasibility", "--type", "E6", "--node", "1"],
    ["poset", "--type", "D6", "--node", "6", "--format", "dot"],
])
def test_byte_identical(argv):
    assert run(*argv) == run(*argv)


def test_timing_flag():
    _, rep = report("--timing", "classify", "--type", "A3")
    assert "seconds" in rep
    _, rep = report("classify", "--type", "A3")
    assert "seconds" not in rep


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cominuscule", "classify", "--type", "G2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["cominuscule_nodes"] == []
