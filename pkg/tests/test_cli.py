import json
import subprocess
import sys

import pytest

from automata_logic.cli import main

from graphs import DATA

FIG1 = str(DATA / "fig1.txt")
K3 = str(DATA / "k3.txt")


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_fig1(capsys):
    code, out, err = invoke(capsys, "analyze", FIG1)
    assert code == 0 and err == ""
    assert "MO3" in out
    assert "inputs 1,4: V = {1,2} ∪ {3,4}" in out
    assert "proper testable sets: {1}, {4}, {1,2}, {3,4}" in out
    assert "orthomodular: no (counterexample a = {1}, b = {1,2})" in out
    assert "ortholattice: pass" in out
    assert "micro only: {1,2,3}, {2,3,4}" in out


def test_analyze_k3(capsys):
    code, out, _ = invoke(capsys, "analyze", K3)
    assert code == 0
    assert "MO0 with 2 elements" in out
    assert "macro logic: 2 closed sets" in out


def test_analyze_json_schema(capsys):
    code, out, _ = invoke(capsys, "analyze", FIG1, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert sorted(doc) == ["compare", "graph", "macro", "micro"]
    assert doc["micro"]["mo_n"] == 3
    assert doc["macro"]["closed_sets"] == [[], [1], [4], [1, 2], [3, 4], [1, 2, 3, 4]]
    assert doc["macro"]["orthomodular_counterexample"] == [[1], [1, 2]]
    assert doc["macro"]["ortho"][1] == [[1], [3, 4]]
    assert doc["compare"]["micro_only"] == [[1, 2, 3], [2, 3, 4]]
    assert out == json.dumps(doc, sort_keys=True, indent=2) + "\n"


def test_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("4\n1 2\n3 3\n", encoding="utf-8")
    code, out, err = invoke(capsys, "analyze", str(bad))
    assert code != 0
    assert out == ""
    assert "line 3" in err and "self-loop" in err


def test_missing_file(capsys, tmp_path):
    code, out, err = invoke(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code != 0 and out == "" and "cannot read" in err


@pytest.mark.parametrize("command, edges, nodes", [("micro", 12, 8), ("macro", 6, 6)])
def test_dot_output(capsys, command, edges, nodes):
    code, out, _ = invoke(capsys, command, FIG1, "--format", "dot")
    assert code == 0
    assert out.startswith(f"digraph {command} {{")
    assert sum("->" in line for line in out.splitlines()) == edges
    assert out.count("[label=") == nodes


def test_dot_rejected_for_other_commands(capsys):
    code, out, err = invoke(capsys, "compare", FIG1, "--format", "dot")
    assert code != 0 and out == ""


def test_simulate_exhaustive(capsys):
    code, out, _ = invoke(capsys, "simulate", FIG1, "--support", "1", "--exhaustive")
    assert code == 0
    assert "input 3: 0\n" in out
    assert "zero rows: {3,4}" in out
    assert out.endswith("inference: {1}\n")
    code, out, _ = invoke(capsys, "simulate", FIG1, "--support", "1,2,3", "--exhaustive")
    assert out.endswith("inference: V = {1,2,3,4}\n")


def test_simulate_sampled_json(capsys):
    code, out, _ = invoke(capsys, "simulate", FIG1, "--support", "1", "--samples", "5", "--seed", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"]["3"] == "00000"
    assert doc["inference"] == [1]
    assert doc["seed"] == 3 and doc["mode"] == "sampled"


@pytest.mark.parametrize("support", ["5", "", "0", "a,b"])
def test_simulate_bad_support(capsys, support):
    code, out, err = invoke(capsys, "simulate", FIG1, "--support", support)
    assert code != 0 and out == "" and err


def test_bad_samples(capsys):
    code, out, _ = invoke(capsys, "simulate", FIG1, "--support", "1", "--samples", "0")
    assert code != 0 and out == ""


def test_run_command(capsys):
    assert invoke(capsys, "run", FIG1, "--initial", "1", "--inputs", "2 3 3")[1] == "1 1 1\n"
    assert invoke(capsys, "run", FIG1, "--initial", "1", "--inputs", "3")[1] == "0\n"
    assert invoke(capsys, "run", FIG1, "--initial", "0", "--inputs", "1")[1] == "0\n"
    code, out, err = invoke(capsys, "run", FIG1, "--initial", "9", "--inputs", "1")
    assert code != 0 and out == ""
    code, out, err = invoke(capsys, "run", FIG1, "--inputs", "1")
    assert code != 0 and "--initial" in err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "automata_logic", "compare", FIG1],
        capture_output=True, text=True, encoding="utf-8", check=False,
    )
    assert result.returncode == 0
    assert "macro only: (none)" in result.stdout
