#!/usr/bin/env python3
"""Regenerate the frontend test fixtures from the live service code, so the
mocked API in frontend tests cannot drift from the real wire format."""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from mutalg.service import create_app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"

CYCLE_QUIVER = {
    "n": 3,
    "arrows": [
        {"src": 1, "tgt": 2, "v": [-1, -1]},
        {"src": 2, "tgt": 3, "v": [-1, -1]},
        {"src": 3, "tgt": 1, "v": [-1, -1]},
    ],
}


def scrub(payload: dict, session_id: str = "fixture") -> dict:
    out = json.loads(json.dumps(payload))
    if "id" in out:
        out["id"] = session_id
    return out


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    res = client.post("/sessions", json={"type": "A3"})
    res.raise_for_status()
    sid = res.json()["id"]
    initial = scrub(res.json()["state"])
    (OUT / "a3_initial.json").write_text(json.dumps(initial, indent=2))

    res = client.post(f"/sessions/{sid}/mutate", json={"vertex": 2})
    res.raise_for_status()
    (OUT / "a3_after_mut2.json").write_text(
        json.dumps(scrub(res.json()), indent=2)
    )

    res = client.post("/sessions", json={"quiver": CYCLE_QUIVER})
    res.raise_for_status()
    cid = res.json()["id"]
    (OUT / "cycle_initial.json").write_text(
        json.dumps(scrub(res.json()["state"], "fixture-cycle"), indent=2)
    )
    res = client.post(f"/sessions/{cid}/mutate", json={"vertex": 2})
    assert res.status_code == 409
    (OUT / "cycle_blocked.json").write_text(json.dumps(res.json(), indent=2))

    print(f"fixtures written to {OUT}")


if __name__ == "__main__":
    main()
