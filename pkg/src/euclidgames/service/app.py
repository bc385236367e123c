"""FastAPI app: session play endpoints plus stateless analysis.

Invalid positions and illegal moves answer 400, unknown sessions 404.
Request-body validation failures are folded into 400 as well so the error
contract has a single shape. When a static directory is given it is mounted
at the root, serving the web client next to the API.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..cf import cf_expand, grundy_formula, winning_move
from ..errors import (
    IllegalMoveError,
    InvalidPositionError,
    OracleBoundError,
    UnknownSessionError,
)
from ..rules import Position, TargetEntry, Variant, is_terminal, legal_moves, oracle_grundy
from .schemas import (
    AnalysisSummary,
    AnalyzeResponse,
    CreateSessionRequest,
    HistoryEntry,
    MoveModel,
    MoveRequest,
    SessionResponse,
)
from .sessions import GameSession, SessionStore

ANALYZE_ORACLE_CAP = 1000


def _session_response(session: GameSession) -> SessionResponse:
    moves = legal_moves(session.variant, session.position)
    report = grundy_formula(session.variant, session.position)
    return SessionResponse(
        id=session.id,
        variant=session.variant.value,
        position=(session.position.a, session.position.b),
        turn=session.turn,
        status=session.status,
        history=[
            HistoryEntry(mover=mover, move=MoveModel.from_move(move))
            for mover, move in session.history
        ],
        legal_moves=[MoveModel.from_move(m) for m in moves],
        analysis=AnalysisSummary(
            grundy_value=report.value,
            winning_move_exists=report.value > 0,
        ),
    )


def _parse_variant(text: str) -> Variant:
    try:
        return Variant.parse(text)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def create_app(
    *, session_capacity: int = 1000, static_dir: str | Path | None = None
) -> FastAPI:
    """Build the service app with its own session store."""
    app = FastAPI(title="euclid-games", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(capacity=session_capacity)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def _validation_to_400(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(InvalidPositionError)
    async def _invalid_position(request: Request, exc: InvalidPositionError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(IllegalMoveError)
    async def _illegal_move(request: Request, exc: IllegalMoveError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(UnknownSessionError)
    async def _unknown_session(request: Request, exc: UnknownSessionError):
        return JSONResponse(status_code=404, content={"detail": "unknown session"})

    @app.post("/sessions", response_model=SessionResponse, status_code=201)
    def create_session(body: CreateSessionRequest) -> SessionResponse:
        variant = _parse_variant(body.variant)
        session = store.create(variant, body.a, body.b, human_first=body.human_first)
        return _session_response(session)

    @app.get("/sessions/{session_id}", response_model=SessionResponse)
    def get_state(session_id: str) -> SessionResponse:
        return _session_response(store.get(session_id))

    @app.post("/sessions/{session_id}/moves", response_model=SessionResponse)
    def play_move(session_id: str, body: MoveRequest) -> SessionResponse:
        session = store.play_human_move(
            session_id, TargetEntry(body.target_entry), body.multiplier
        )
        return _session_response(session)

    @app.get("/analyze", response_model=AnalyzeResponse)
    def analyze_position(
        variant: str,
        a: int = Query(ge=0),
        b: int = Query(ge=0),
        oracle: bool = False,
    ) -> AnalyzeResponse:
        parsed = _parse_variant(variant)
        position = Position(a, b).validate_for(parsed)
        terminal = is_terminal(parsed, position)
        report = grundy_formula(parsed, position)
        cf = cf_expand(position.a, position.b) if position.a > 0 else None
        moves = []
        if not terminal and report.value > 0:
            first = winning_move(parsed, position)
            moves = [
                m
                for m in legal_moves(parsed, position)
                if grundy_formula(parsed, m.result).value == 0
            ]
            assert first in moves
        oracle_value = None
        if oracle and position.b <= ANALYZE_ORACLE_CAP:
            try:
                oracle_value = oracle_grundy(parsed, position, bound=ANALYZE_ORACLE_CAP).value
            except OracleBoundError:  # env bound tighter than the cap
                oracle_value = None
        return AnalyzeResponse.from_report(
            parsed.value, position, terminal, report, cf, moves, oracle_value
        )

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "sessions": len(store)}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
