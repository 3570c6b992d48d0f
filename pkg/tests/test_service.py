from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from mutalg.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def create_a3(client):
    res = client.post("/sessions", json={"type": "A3"})
    assert res.status_code == 201
    body = res.json()
    return body["id"], body["state"]


def test_create_preset_session(client):
    _, state = create_a3(client)
    assert state["dynkin"] == "A3"
    assert state["root_count"] == 12
    assert state["cartan"] == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    assert state["companion_basis"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert state["dangerous_cycles"] == []
    assert state["relation_summary"]["R5"] == 0


def test_mutate_matches_worked_example(client):
    sid, _ = create_a3(client)
    res = client.post(f"/sessions/{sid}/mutate", json={"vertex": 2})
    assert res.status_code == 200
    state = res.json()
    assert state["cartan"] == [[2, -1, -1], [-1, 2, 1], [-1, 1, 2]]
    arrows = {(a["src"], a["tgt"], tuple(a["v"])) for a in state["quiver"]["arrows"]}
    assert arrows == {(1, 2, (-1, -1)), (2, 3, (1, 1)), (3, 1, (-1, -1))}
    assert state["root_count"] == 12
    assert state["relation_summary"]["R5"] == 12
    assert state["companion_basis"] == [[1, 0, 0], [0, 1, 0], [0, 1, 1]]
    assert state["history"] == [2]


def test_undo_restores_initial_state(client):
    sid, initial = create_a3(client)
    client.post(f"/sessions/{sid}/mutate", json={"vertex": 2})
    res = client.post(f"/sessions/{sid}/undo")
    assert res.status_code == 200
    assert res.json() == initial


def test_undo_on_fresh_session_conflicts(client):
    sid, _ = create_a3(client)
    res = client.post(f"/sessions/{sid}/undo")
    assert res.status_code == 409


def test_blocked_mutation_carries_triple_and_preview(client):
    quiver = {
        "n": 3,
        "arrows": [
            {"src": 1, "tgt": 2, "v": [-1, -1]},
            {"src": 2, "tgt": 3, "v": [-1, -1]},
            {"src": 3, "tgt": 1, "v": [-1, -1]},
        ],
    }
    res = client.post("/sessions", json={"quiver": quiver})
    assert res.status_code == 201
    sid = res.json()["id"]
    assert res.json()["state"]["dynkin"] is None  # dangerous cycle
    blocked = client.post(f"/sessions/{sid}/mutate", json={"vertex": 2})
    assert blocked.status_code == 409
    body = blocked.json()
    i, j, k = body["triple"]
    assert k == 2 and {i, j} == {1, 3}
    assert body["preview_pure"] is False
    entries = body["matrix_preview"]["entries"]
    assert entries[0][2] == {"a": -1, "b": 1}
    # the failed attempt leaves the session untouched
    after = client.get(f"/sessions/{sid}").json()
    assert after["history"] == []


def test_unknown_session_404(client):
    assert client.get("/sessions/nope").status_code == 404
    assert client.post("/sessions/nope/mutate", json={"vertex": 1}).status_code == 404


def test_malformed_create_422(client):
    assert client.post("/sessions", json={}).status_code == 422
    assert (
        client.post("/sessions", json={"type": "A3", "quiver": {"n": 1}}).status_code
        == 422
    )
    assert client.post("/sessions", json={"type": "Z9"}).status_code == 422
    bad_quiver = {"n": 2, "arrows": [{"src": 1, "tgt": 2, "v": [1, -1]}]}
    assert client.post("/sessions", json={"quiver": bad_quiver}).status_code == 422


def test_vertex_out_of_range_422(client):
    sid, _ = create_a3(client)
    assert (
        client.post(f"/sessions/{sid}/mutate", json={"vertex": 9}).status_code == 422
    )


def test_export_formats(client):
    sid, state = create_a3(client)
    as_json = client.get(f"/sessions/{sid}/export", params={"format": "json"})
    assert as_json.status_code == 200
    assert as_json.json()["quiver"] == state["quiver"]
    as_dot = client.get(f"/sessions/{sid}/export", params={"format": "dot"})
    assert as_dot.status_code == 200
    assert "digraph quiver" in as_dot.text
    bad = client.get(f"/sessions/{sid}/export", params={"format": "xml"})
    assert bad.status_code == 422


def test_imported_quiver_session_has_companion_route(client):
    # a mutated, relabel-free import still gets a companion basis through
    # the discovered route back to a Dynkin seed
    quiver = {
        "n": 3,
        "arrows": [
            {"src": 1, "tgt": 2, "v": [-1, -1]},
            {"src": 2, "tgt": 3, "v": [1, 1]},
            {"src": 3, "tgt": 1, "v": [-1, -1]},
        ],
    }
    res = client.post("/sessions", json={"quiver": quiver})
    assert res.status_code == 201
    state = res.json()["state"]
    assert state["dynkin"] == "A3"
    assert state["root_count"] == 12
    assert state["companion_basis"] is not None


def test_sessions_are_isolated(client):
    sid1, _ = create_a3(client)
    sid2, _ = create_a3(client)
    client.post(f"/sessions/{sid1}/mutate", json={"vertex": 2})
    assert client.get(f"/sessions/{sid2}").json()["history"] == []


def test_replay_invariant_under_interleaving(client):
    import random

    from mutalg.cartan import dynkin_quiver
    from mutalg.diagram import DynkinType
    from mutalg.quiver import mutate_quiver_sequence
    from mutalg.serialize import quiver_to_json

    sid, _ = create_a3(client)
    rng = random.Random(101)
    for _ in range(25):
        state = client.get(f"/sessions/{sid}").json()
        if rng.random() < 0.4 and state["history"]:
            res = client.post(f"/sessions/{sid}/undo")
            assert res.status_code == 200
            continue
        vertex = rng.randint(1, 3)
        res = client.post(f"/sessions/{sid}/mutate", json={"vertex": vertex})
        assert res.status_code in (200, 409)
    final = client.get(f"/sessions/{sid}").json()
    replayed = mutate_quiver_sequence(
        dynkin_quiver(DynkinType.parse("A3")), final["history"]
    )
    assert quiver_to_json(replayed) == final["quiver"]
