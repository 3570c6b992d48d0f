from __future__ import annotations

import json

from mutalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mutate_example_matrix(capsys, tmp_path):
    payload = {
        "n": 3,
        "d": [1, 1, 2],
        "entries": [
            [{"a": 0, "b": 0}, {"a": 0, "b": -1}, {"a": 0, "b": 0}],
            [{"a": 0, "b": 1}, {"a": 0, "b": 0}, {"a": 0, "b": -2}],
            [{"a": 0, "b": 0}, {"a": 0, "b": 1}, {"a": 0, "b": 0}],
        ],
    }
    path = tmp_path / "b.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "mutate", "-i", str(path), "-s", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["pure"] is True
    entries = data["result"]["matrix"]["entries"]
    assert entries[1][2] == {"a": 2, "b": 0}
    assert entries[0][2] == {"a": 0, "b": -2}
    assert data["result"]["matrix"]["d"] == [1, 1, 2]
    assert data["warnings"] == []


def test_mutate_empty_sequence_echoes_input(capsys):
    code, out, _ = run(capsys, "mutate", "-t", "A3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["matrix"]["entries"][0][1] == {"a": 0, "b": -1}
    assert data["sequence"] == []


def test_mutate_warns_and_emits_non_pure(capsys):
    dsl = "1 -(-1,-1)-> 2; 2 -(-1,-1)-> 3; 3 -(-1,-1)-> 1"
    code, out, _ = run(capsys, "mutate", "--dsl", dsl, "-s", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["pure"] is False
    assert data["result"]["quiver"] is None
    assert "positive 3-cycle" in data["warnings"][0]
    assert data["result"]["matrix"]["entries"][0][2] == {"a": -1, "b": 1}


def test_class_a1(capsys):
    code, out, _ = run(capsys, "class", "-t", "A1", "--json")
    assert code == 0
    assert json.loads(out)["count"] == 1


def test_roots_of_mutated_a3(capsys):
    code, out, _ = run(capsys, "roots", "-t", "A3", "-s", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 12
    assert [0, -1, 1] in data["roots"]


def test_verify_worked_example(capsys):
    code, out, _ = run(capsys, "verify", "-t", "A3", "-s", "2")
    assert code == 0
    assert "dimension 15" in out
    assert "isomorphism: true" in out


def test_verify_random_sequences_reproducible(capsys):
    code, out1, _ = run(capsys, "verify", "-t", "B3", "--random", "2",
                        "--seed", "5", "--json")
    assert code == 0
    code, out2, _ = run(capsys, "verify", "-t", "B3", "--random", "2",
                        "--seed", "5", "--json")
    assert out1 == out2
    data = json.loads(out1)
    assert all(r["report"]["isomorphism"] for r in data["results"])


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "mutate", "--dsl", "nonsense")
    assert code == 2
    assert "error" in err


def test_semantic_error_exit_code(capsys):
    code, _, err = run(capsys, "roots", "--dsl", "1 -(2,2)-> 2")
    assert code == 3


def test_budget_error_exit_code(capsys):
    code, _, err = run(capsys, "class", "-t", "D4", "--budget", "5")
    assert code == 4


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "-t", "B3")
    assert code == 0
    assert "digraph quiver" in out and "style=solid" in out


def test_byte_identical_json_runs(capsys):
    args = ("roots", "-t", "B3", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
