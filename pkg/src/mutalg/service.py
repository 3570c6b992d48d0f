"""HTTP session API backing the interactive explorer.

Endpoints:
  POST /sessions                {"type": "A3"} or {"quiver": {...}} -> {id, state}
  GET  /sessions/{id}           -> state
  POST /sessions/{id}/mutate    {"vertex": k} -> state, or 409 with the
                                offending triple and a matrix-level preview
  POST /sessions/{id}/undo      -> state (409 when the history is empty)
  GET  /sessions/{id}/export    ?format=json|dot

State payloads are produced by sessions.session_state; cross-session state
is isolated and per-session operations are serialized by a lock.
"""

from __future__ import annotations

import secrets
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .diagram import DynkinType
from .errors import MutalgError, PositiveThreeCycleViolation
from .cartan import dynkin_quiver
from .gss import mutate_matrix
from .quiver import matrix_from_quiver
from .serialize import gss_to_json, quiver_from_json, quiver_to_dot
from .sessions import Session, session_state


class CreateSession(BaseModel):
    type: Optional[str] = None
    quiver: Optional[dict] = None


class MutateRequest(BaseModel):
    vertex: int


def create_app() -> FastAPI:
    app = FastAPI(title="mutalg explorer API")
    store: dict[str, Session] = {}

    def get_session(session_id: str) -> Session:
        session = store.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session

    @app.post("/sessions", status_code=201)
    def create(body: CreateSession):
        if (body.type is None) == (body.quiver is None):
            raise HTTPException(
                status_code=422, detail="provide exactly one of type, quiver"
            )
        try:
            if body.type is not None:
                quiver = dynkin_quiver(DynkinType.parse(body.type))
            else:
                quiver = quiver_from_json(body.quiver)
        except MutalgError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        session_id = secrets.token_hex(8)
        session = Session(session_id, quiver)
        store[session_id] = session
        return {"id": session_id, "state": session_state(session)}

    @app.get("/sessions/{session_id}")
    def state(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return session_state(session)

    @app.post("/sessions/{session_id}/mutate")
    def mutate(session_id: str, body: MutateRequest):
        session = get_session(session_id)
        with session.lock:
            current = session.current()
            if not 1 <= body.vertex <= current.n:
                raise HTTPException(status_code=422, detail="vertex out of range")
            try:
                session.mutate(body.vertex)
            except PositiveThreeCycleViolation as exc:
                preview = mutate_matrix(matrix_from_quiver(current), body.vertex)
                return JSONResponse(
                    status_code=409,
                    content={
                        "error": "positive 3-cycle violation",
                        "triple": list(exc.triple),
                        "matrix_preview": gss_to_json(preview),
                        "preview_pure": preview.is_pure(),
                    },
                )
            return session_state(session)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = get_session(session_id)
        with session.lock:
            if not session.history:
                return JSONResponse(
                    status_code=409, content={"error": "nothing to undo"}
                )
            session.undo()
            return session_state(session)

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str, format: str = "json"):
        session = get_session(session_id)
        with session.lock:
            if format == "json":
                return session_state(session)
            if format == "dot":
                return PlainTextResponse(quiver_to_dot(session.current()))
        raise HTTPException(status_code=422, detail=f"unknown format {format!r}")

    return app
