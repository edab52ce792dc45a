"""Session service: the game engine behind a small JSON API.

One process, in-memory sessions keyed by unguessable tokens, all rules
enforced server-side; every state transition goes through the rules
engine. Endpoints live under /api/v1; payload shapes are frozen (see
README). An optional snapshot file persists sessions across restarts.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .blockers import build_edges, ears_of, parse_structure
from .game import (
    BreakerMemory,
    FirstAvailable,
    GameConfig,
    GameError,
    GameState,
    MakerMemory,
    PaperBreaker,
    PaperMaker,
    Player,
    Status,
    StrategyError,
    apply_move,
    new_game,
    reconstruct_breaker_memory,
    reconstruct_maker_memory,
    breaker_strategy_moves,
    maker_strategy_move,
    solve_state,
)
from .polygon import Diagonal, make_diagonal
from .triangulation import FeasibilityError

SNAPSHOT_VERSION = 1
MIN_N, MAX_N = 4, 50

BIASES = {
    "1:1": dict(maker_per_turn=1, breaker_per_turn=1, breaker_double_first=False),
    "1:2": dict(maker_per_turn=1, breaker_per_turn=1, breaker_double_first=True),
}


class ApiError(Exception):
    def __init__(self, status_code: int, error: str, detail: str) -> None:
        super().__init__(detail)
        self.status_code = status_code
        self.error = error
        self.detail = detail


def _bad_request(detail: str) -> ApiError:
    return ApiError(400, "bad_request", detail)


def _engine_strategy(config: GameConfig, role: Player):
    """Deterministic default strategy for the engine in the given role."""
    unbiased = (
        config.maker_per_turn == 1
        and config.breaker_per_turn == 1
        and not config.breaker_double_first
    )
    if role is Player.MAKER and unbiased:
        return PaperMaker(config)
    if (
        role is Player.BREAKER
        and config.breaker_double_first
        and config.first_mover is Player.MAKER
        and config.n >= 5
    ):
        return PaperBreaker(config)
    return FirstAvailable(config)


@dataclass
class Session:
    id: str
    config: GameConfig
    human_role: Optional[Player]
    state: GameState
    strategies: dict[Player, object]
    created: float
    updated: float
    lock: threading.RLock = field(default_factory=threading.RLock)

    def engine_roles(self) -> tuple[Player, ...]:
        if self.human_role is None:
            return (Player.MAKER, Player.BREAKER)
        return (self.human_role.opponent,)


def state_to_json(state: GameState) -> dict:
    """The wire form of a game state (shape is part of the protocol)."""
    structure = None
    if len(state.breaker):
        st = parse_structure(state.breaker)
        if st is not None:
            edges = build_edges(st)
            net = ears_of(edges)
            structure = {
                "offset": st.offset,
                "net": st.net,
                "beams": list(st.beams),
                "net_edges": [[d.i, d.j] for d in net],
                "beam_edges": [[d.i, d.j] for d in edges - net],
            }
    return {
        "n": state.n,
        "maker": [[d.i, d.j] for d in state.maker],
        "breaker": [[d.i, d.j] for d in state.breaker],
        "turn": state.to_move.value,
        "status": state.status.value,
        "history": [
            {"player": m.player.value, "diagonals": [[d.i, d.j] for d in m.diagonals]}
            for m in state.history
        ],
        "witness": [[d.i, d.j] for d in state.witness] if state.witness else None,
        "breaker_structure": structure,
    }


class SessionRegistry:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.RLock()

    def create(self, n: int, human: Optional[Player], bias: str, first: Player) -> Session:
        if not MIN_N <= n <= MAX_N:
            raise _bad_request(f"n must be in [{MIN_N}, {MAX_N}]")
        if bias not in BIASES:
            raise _bad_request(f"bias must be one of {sorted(BIASES)}")
        config = GameConfig(n, first_mover=first, **BIASES[bias])
        session = Session(
            id=secrets.token_urlsafe(16),
            config=config,
            human_role=human,
            state=new_game(config),
            strategies={},
            created=time.time(),
            updated=time.time(),
        )
        for role in session.engine_roles():
            session.strategies[role] = _engine_strategy(config, role)
        _advance_engine(session)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, "not_found", f"no session {session_id!r}")
        return session

    def delete(self, session_id: str) -> None:
        with self._lock:
            if session_id not in self._sessions:
                raise ApiError(404, "not_found", f"no session {session_id!r}")
            del self._sessions[session_id]

    def all_sessions(self) -> list[Session]:
        with self._lock:
            return list(self._sessions.values())

    # -- persistence ---------------------------------------------------

    def snapshot(self, path: Path) -> None:
        payload = {
            "version": SNAPSHOT_VERSION,
            "sessions": [_session_to_snapshot(s) for s in self.all_sessions()],
        }
        path.write_text(json.dumps(payload, indent=1))

    def restore(self, path: Path) -> int:
        payload = json.loads(path.read_text())
        if payload.get("version") != SNAPSHOT_VERSION:
            raise ValueError(f"unsupported snapshot version {payload.get('version')!r}")
        count = 0
        for item in payload["sessions"]:
            session = _session_from_snapshot(item)
            with self._lock:
                self._sessions[session.id] = session
            count += 1
        return count


def _session_to_snapshot(session: Session) -> dict:
    cfg = session.config
    strategies = {}
    for role, strategy in session.strategies.items():
        entry: dict = {"type": strategy.name}
        if isinstance(strategy, PaperMaker):
            entry["alive"] = list(strategy.memory.alive)
        if isinstance(strategy, PaperBreaker):
            entry["anchor"] = strategy.memory.anchor
            entry["secured"] = sorted(strategy.memory.secured)
        strategies[role.value] = entry
    return {
        "id": session.id,
        "n": cfg.n,
        "maker_per_turn": cfg.maker_per_turn,
        "breaker_per_turn": cfg.breaker_per_turn,
        "first": cfg.first_mover.value,
        "double_first": cfg.breaker_double_first,
        "human": session.human_role.value if session.human_role else None,
        "history": [
            {"player": m.player.value, "diagonals": [[d.i, d.j] for d in m.diagonals]}
            for m in session.state.history
        ],
        "strategies": strategies,
        "created": session.created,
        "updated": session.updated,
    }


def _session_from_snapshot(item: dict) -> Session:
    config = GameConfig(
        item["n"],
        maker_per_turn=item["maker_per_turn"],
        breaker_per_turn=item["breaker_per_turn"],
        first_mover=Player(item["first"]),
        breaker_double_first=item["double_first"],
    )
    state = new_game(config)
    for move in item["history"]:
        diagonals = [make_diagonal(config.n, a, b) for a, b in move["diagonals"]]
        state = apply_move(state, Player(move["player"]), diagonals)
    strategies: dict[Player, object] = {}
    for role_name, entry in item["strategies"].items():
        role = Player(role_name)
        if entry["type"] == "paper_maker":
            strategy = PaperMaker(config)
            strategy.memory = MakerMemory(tuple(entry["alive"]))
        elif entry["type"] == "paper_breaker":
            strategy = PaperBreaker(config)
            strategy.memory = BreakerMemory(
                config.n, entry["anchor"], frozenset(entry["secured"])
            )
        else:
            strategy = FirstAvailable(config)
        strategies[role] = strategy
    return Session(
        id=item["id"],
        config=config,
        human_role=Player(item["human"]) if item["human"] else None,
        state=state,
        strategies=strategies,
        created=item["created"],
        updated=item["updated"],
    )


def _advance_engine(session: Session) -> list[Diagonal]:
    """Let the engine move while the game is ongoing and it is its turn."""
    played: list[Diagonal] = []
    while (
        session.state.status is Status.ONGOING
        and session.state.to_move in session.strategies
    ):
        strategy = session.strategies[session.state.to_move]
        moves = strategy.moves(session.state)
        session.state = apply_move(session.state, session.state.to_move, moves)
        played.extend(moves)
    session.updated = time.time()
    return played


def _hint(session: Session) -> list[Diagonal]:
    """Best advice for the human: the matching optimal strategy when it
    applies, else the exact solver on small boards, else first available."""
    state = session.state
    if state.status is not Status.ONGOING:
        raise ApiError(409, "finished", "the game is over")
    role = session.human_role
    if role is None or state.to_move is not role:
        raise ApiError(409, "not_your_turn", "hints are for the human player's turn")
    config = session.config
    if role is Player.MAKER and not config.breaker_double_first and config.breaker_per_turn == 1:
        memory = reconstruct_maker_memory(state)
        if memory is not None:
            try:
                chord, _ = maker_strategy_move(state, memory)
                return [chord]
            except StrategyError:
                pass
    if role is Player.BREAKER and config.breaker_double_first:
        memory = reconstruct_breaker_memory(state)
        if memory is not None:
            try:
                chords, _ = breaker_strategy_moves(state, memory)
                return list(chords)
            except StrategyError:
                pass
    try:
        return list(solve_state(state).best_move)
    except FeasibilityError:
        pass
    return list(FirstAvailable(config).moves(state))


class CreateGame(BaseModel):
    n: int
    human: str = "maker"
    bias: str = "1:1"
    first: str = "maker"


class SubmitMove(BaseModel):
    diagonals: list[tuple[int, int]]


def create_app(snapshot_path: Optional[Path] = None, static_dir: Optional[Path] = None) -> FastAPI:
    registry = SessionRegistry()
    if snapshot_path is not None and snapshot_path.exists():
        registry.restore(snapshot_path)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        if snapshot_path is not None:
            registry.snapshot(snapshot_path)

    app = FastAPI(title="triblock", docs_url=None, redoc_url=None, lifespan=lifespan)
    app.state.registry = registry

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status_code,
            content={"error": exc.error, "detail": exc.detail},
        )

    def game_error(exc: GameError) -> ApiError:
        status = {
            "not_your_turn": 409,
            "occupied": 409,
            "finished": 409,
            "bad_request": 400,
        }[exc.code]
        return ApiError(status, exc.code, str(exc))

    @app.post("/api/v1/games", status_code=201)
    def create_game(body: CreateGame):
        if body.human not in ("maker", "breaker", "none"):
            raise _bad_request("human must be maker, breaker or none")
        if body.first not in ("maker", "breaker"):
            raise _bad_request("first must be maker or breaker")
        human = None if body.human == "none" else Player(body.human)
        try:
            session = registry.create(body.n, human, body.bias, Player(body.first))
        except ValueError as exc:
            raise _bad_request(str(exc)) from None
        return {"id": session.id, "state": state_to_json(session.state)}

    @app.get("/api/v1/games/{session_id}")
    def get_game(session_id: str):
        session = registry.get(session_id)
        with session.lock:
            return state_to_json(session.state)

    @app.post("/api/v1/games/{session_id}/moves")
    def post_move(session_id: str, body: SubmitMove):
        session = registry.get(session_id)
        with session.lock:
            state = session.state
            if state.status is not Status.ONGOING:
                raise ApiError(409, "finished", f"game finished: {state.status.value}")
            if session.human_role is None or state.to_move is not session.human_role:
                raise ApiError(409, "not_your_turn", f"it is {state.to_move.value}'s turn")
            try:
                diagonals = [make_diagonal(state.n, a, b) for a, b in body.diagonals]
            except Exception as exc:
                raise _bad_request(str(exc)) from None
            try:
                session.state = apply_move(state, session.human_role, diagonals)
            except GameError as exc:
                raise game_error(exc) from None
            reply = _advance_engine(session)
            payload = state_to_json(session.state)
            payload["engine_reply"] = [[d.i, d.j] for d in reply]
            return payload

    @app.get("/api/v1/games/{session_id}/hint")
    def get_hint(session_id: str):
        session = registry.get(session_id)
        with session.lock:
            return {"diagonals": [[d.i, d.j] for d in _hint(session)]}

    @app.delete("/api/v1/games/{session_id}", status_code=204)
    def delete_game(session_id: str):
        registry.delete(session_id)
        return Response(status_code=204)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def serve(port: int, static_dir: Optional[Path], snapshot_path: Optional[Path] = None) -> None:
    import uvicorn

    app = create_app(snapshot_path=snapshot_path, static_dir=static_dir)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
