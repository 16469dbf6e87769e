"""Tests for the command-line entry point and its exit codes"""
import json

import pytest

from main import main

CROWN = "4\n0 < 2\n0 < 3\n1 < 2\n1 < 3\n"


@pytest.fixture
def graphs(tmp_path):
    files = {
        "k2": "0 1\n",
        "k3": "0 1\n1 2\n2 0\n",
        "c6": "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n",
        "bad": "0 1\n1 x\n",
    }
    paths = {}
    for name, text in files.items():
        path = tmp_path / f"{name}.txt"
        path.write_text(text)
        paths[name] = str(path)
    crown = tmp_path / "crown.poset"
    crown.write_text(CROWN)
    paths["crown"] = str(crown)
    return paths


def run(capsys, *argv, environ=None):
    code = main(list(argv), environ=environ or {})
    return code, capsys.readouterr().out


def test_classify_json(capsys, graphs):
    code, out = run(capsys, "classify", graphs["k3"], "--json")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["tool"] == "homtop"
    assert envelope["kind"] == "classification"
    assert envelope["report"]["verdict"] == "NP-complete"
    assert envelope["report"]["core"]["core_n"] == 3


def test_json_output_is_byte_identical(capsys, graphs):
    _, first = run(capsys, "complex", graphs["k3"], "--json")
    _, second = run(capsys, "complex", graphs["k3"], "--json")
    assert first == second
    report = json.loads(first)["report"]
    assert report["elements"] == 12
    assert report["betti"] == [1, 1]
    assert report["flip"] == {"fixed_elements": [], "lefschetz": 0}


def test_several_inputs_give_one_line_each(capsys, graphs):
    code, out = run(capsys, "classify", graphs["k2"], graphs["k3"], "--json")
    assert code == 0
    lines = out.splitlines()
    assert [json.loads(line)["report"]["verdict"] for line in lines] == ["P", "NP-complete"]


def test_text_output(capsys, graphs):
    code, out = run(capsys, "classify", graphs["k2"])
    assert code == 0
    assert out.strip()


def test_poly_outcomes(capsys, graphs):
    code, out = run(capsys, "poly", graphs["k3"], "--json")
    assert code == 0
    assert json.loads(out)["report"]["search"]["status"] == "UNSAT"

    code, out = run(capsys, "poly", graphs["k2"], "--json")
    assert code == 0
    report = json.loads(out)["report"]
    assert report["verification"]["passed"] is True
    assert report["taylor"]["succeeded"] is True


def test_poly_timeout_exit_code(capsys, graphs):
    code, out = run(capsys, "poly", graphs["c6"], "--no-idempotent", "--max-nodes", "1", "--json")
    assert code == 75
    assert json.loads(out)["report"]["search"]["status"] == "TIMEOUT"


def test_poset_command(capsys, graphs):
    code, out = run(capsys, "poset", graphs["crown"], "--json")
    assert code == 0
    report = json.loads(out)["report"]
    assert report["betti"] == [1, 1]
    assert report["dismantles_to_point"] is False


def test_input_errors(capsys, graphs, tmp_path):
    assert run(capsys, "classify", graphs["bad"])[0] == 65
    assert run(capsys, "classify", str(tmp_path / "missing.txt"))[0] == 65
    assert run(capsys, "poset", graphs["k2"])[0] == 65


def test_usage_errors(capsys, graphs):
    assert run(capsys, "classify")[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    assert run(capsys, "classify", graphs["k2"], "--max-elements", "0")[0] == 64
    assert run(capsys, "poly", graphs["k2"], "--identity", "no-such-system")[0] == 64
    assert run(capsys, "corpus", "--atlas-max-vertices", "9")[0] == 64


def test_bad_environment_is_a_usage_error(capsys, graphs):
    assert run(capsys, "classify", graphs["k2"], environ={"HOMTOP_SEED": "x"})[0] == 64


def test_budget_exit_code(capsys, graphs):
    assert run(capsys, "complex", graphs["k3"], "--max-faces", "5")[0] == 75


def test_corpus_json_lines(capsys):
    code, out = run(capsys, "corpus", "--atlas-max-vertices", "3", "--json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 8
    assert lines[-1]["kind"] == "corpus-summary"
    assert lines[-1]["config"]["atlas_max_vertices"] == 3
    assert lines[-1]["report"]["processed"] == 7


def test_corpus_from_graph6_file(capsys, tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("Bw\nB\x7f\nA_\n")
    code, out = run(capsys, "corpus", str(path), "--format", "graph6", "--json")
    assert code == 0
    summary = json.loads(out.splitlines()[-1])["report"]
    assert summary["skipped"] == 1
    assert summary["verdicts"] == {"NP-complete": 1, "P": 1}


def test_verify_paper_selected_checks(capsys):
    code, out = run(capsys, "verify-paper", "--check", "dodecagon", "--check", "taylor-patterns", "--json")
    assert code == 0
    payload = json.loads(out)["report"]
    assert payload["passed"] is True
    assert len(payload["checks"]) == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"], environ={})
    assert info.value.code == 0
    assert "homtop 0.1.0" in capsys.readouterr().out
