"""Stateless JSON HTTP facade over the solver.

Every request carries the full game description (variant, k, piles), so the
server holds no sessions; clients own their board state.  A shared solve
cache accelerates repeated queries under the benign-race contract of
:class:`ringnim.solver.SolveCache`.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import __version__
from .ring import (
    BudgetExceededError,
    InvalidMoveError,
    InvalidPositionError,
    Move,
    Position,
    Rules,
    TerminalPositionError,
    Variant,
    apply_move,
    canonicalize,
    is_terminal,
    validate_position,
)
from .solver import (
    DEFAULT_SOLVE_BUDGET,
    SolveCache,
    best_move,
    status,
    winning_moves,
)

DEFAULT_WINNING_MOVES_CAP = 16


class MoveBody(BaseModel):
    window_start: int
    removals: list[int]


class StatusRequest(BaseModel):
    variant: Literal["cn", "scn"]
    k: int
    piles: list[int]


class ApplyRequest(StatusRequest):
    move: MoveBody
    reply: bool = False


def _error(
    status_code: int, code: str, message: str, reason: Optional[str] = None
) -> HTTPException:
    detail: dict = {"code": code, "message": message}
    if reason is not None:
        detail["reason"] = reason
    return HTTPException(status_code=status_code, detail=detail)


def _move_payload(move: Move, result: Position) -> dict:
    return {
        "window_start": move.window_start,
        "removals": list(move.removals),
        "result": list(result),
    }


def create_app(
    max_total: int = DEFAULT_SOLVE_BUDGET,
    winning_moves_cap: int = DEFAULT_WINNING_MOVES_CAP,
    static_dir: Optional[str] = None,
) -> FastAPI:
    """Build the service with a request cap on total stones."""
    app = FastAPI(title="ringnim service", version=__version__)
    cache = SolveCache()

    def load(req: StatusRequest) -> tuple[Rules, Position]:
        try:
            rules = Rules(Variant(req.variant), req.k)
        except ValueError as exc:
            raise _error(400, "invalid-position", str(exc))
        pos = tuple(req.piles)
        try:
            validate_position(rules, pos)
        except InvalidPositionError as exc:
            raise _error(400, "invalid-position", str(exc))
        if rules.variant is Variant.STATIC and len(pos) < rules.k:
            raise _error(
                400,
                "invalid-position",
                f"static ring of {len(pos)} piles cannot host a window of {rules.k}",
            )
        total = sum(pos)
        if total > max_total:
            raise _error(
                422,
                "budget-exceeded",
                f"total stones {total} above the server cap {max_total}",
            )
        return rules, pos

    @app.get("/api/v1/health")
    def health() -> dict:
        return {"ok": True}

    @app.post("/api/v1/status")
    def handle_status(req: StatusRequest) -> dict:
        rules, pos = load(req)
        wins = winning_moves(rules, pos, cache, max_total=max_total)
        return {
            "canonical": list(canonicalize(pos)),
            "status": "N" if wins else "P",
            "winning_moves": [
                _move_payload(move, succ)
                for move, succ in wins[:winning_moves_cap]
            ],
        }

    @app.post("/api/v1/apply")
    def handle_apply(req: ApplyRequest) -> dict:
        rules, pos = load(req)
        move = Move(req.move.window_start, tuple(req.move.removals))
        try:
            result = apply_move(rules, pos, move)
        except TerminalPositionError as exc:
            # A terminal ring hosts no window at all.
            raise _error(400, "illegal-move", str(exc), reason="window")
        except InvalidMoveError as exc:
            raise _error(400, "illegal-move", str(exc), reason=exc.reason)
        wins = winning_moves(rules, result, cache, max_total=max_total)
        result_status = "N" if wins else "P"
        payload: dict = {
            "canonical": list(canonicalize(result)),
            "status": result_status,
            "winning_moves": [
                _move_payload(mv, succ)
                for mv, succ in wins[:winning_moves_cap]
            ],
            "applied": {"result": list(result), "status": result_status},
            "reply": None,
        }
        if req.reply and not is_terminal(rules, result):
            engine = best_move(rules, result, cache, max_total=max_total)
            after = apply_move(rules, result, engine)
            payload["reply"] = {
                "window_start": engine.window_start,
                "removals": list(engine.removals),
                "result": list(after),
                "status": status(rules, after, cache, max_total=max_total).value,
            }
        return payload

    @app.exception_handler(RequestValidationError)
    async def on_malformed(request: Request, exc: RequestValidationError):
        # The default would be 422, which this API reserves for the stone cap.
        return JSONResponse(
            status_code=400,
            content={
                "detail": {
                    "code": "invalid-position",
                    "message": "malformed request body",
                }
            },
        )

    @app.exception_handler(BudgetExceededError)
    async def on_budget(request: Request, exc: BudgetExceededError):
        return JSONResponse(
            status_code=422,
            content={"detail": {"code": "budget-exceeded", "message": str(exc)}},
        )

    @app.exception_handler(Exception)
    async def on_internal(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"detail": {"code": "internal", "message": "internal error"}},
        )

    # Host the built web client when it is around.  API routes are matched
    # before the mount, so this never shadows /api/v1/*.
    client = Path(static_dir) if static_dir else _default_client_dir()
    if client.is_dir():
        app.mount("/", StaticFiles(directory=str(client), html=True), name="client")

    return app


def _default_client_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "frontend" / "dist"
