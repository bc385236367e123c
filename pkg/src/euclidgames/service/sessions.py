"""In-memory game sessions: a human plays one variant against the engine.

The engine always moves to a Grundy-0 position when one exists and
otherwise plays the first legal move, so it wins every game it enters from
a winning position and behaves deterministically in lost ones. Sessions
live in a capacity-capped store with least-recently-used eviction; there is
no persistence. Mutations of one session are serialized by a per-session
lock, map operations by a store lock.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field

from ..cf import winning_move
from ..errors import IllegalMoveError, InvalidPositionError, UnknownSessionError
from ..rules import Move, Position, TargetEntry, Variant, is_terminal, legal_moves, resolve_move

HUMAN = "human"
ENGINE = "engine"

IN_PROGRESS = "in_progress"
HUMAN_WON = "human_won"
ENGINE_WON = "engine_won"


@dataclass
class GameSession:
    """One game in progress or finished.

    ``history`` lists ``(mover, move)`` in play order; replaying it from
    ``initial`` reproduces ``position``. The game ends exactly when
    ``position`` is terminal, and the winner is whoever moved last.
    """

    id: str
    variant: Variant
    initial: Position
    position: Position
    turn: str = HUMAN
    status: str = IN_PROGRESS
    history: list[tuple[str, Move]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def _record(self, mover: str, move: Move) -> None:
        self.history.append((mover, move))
        self.position = move.result
        if is_terminal(self.variant, self.position):
            self.status = HUMAN_WON if mover == HUMAN else ENGINE_WON
        self.turn = ENGINE if mover == HUMAN else HUMAN


def engine_choice(variant: Variant, p: Position) -> Move:
    """The engine's move: to Grundy 0 when possible, else the first legal."""
    move = winning_move(variant, p)
    return move if move is not None else legal_moves(variant, p)[0]


class SessionStore:
    """Thread-safe LRU map of session id to :class:`GameSession`."""

    def __init__(self, capacity: int = 1000):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, GameSession] = OrderedDict()

    def __len__(self) -> int:
        return len(self._sessions)

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            try:
                session = self._sessions[session_id]
            except KeyError:
                raise UnknownSessionError(session_id) from None
            self._sessions.move_to_end(session_id)
            return session

    def create(self, variant: Variant, a: int, b: int, human_first: bool = True) -> GameSession:
        """Open a session at ``(a, b)``; the position must be nonterminal.

        With ``human_first`` false the engine plays its opening move before
        the session is returned.
        """
        position = Position(a, b).validate_for(variant)
        if is_terminal(variant, position):
            raise InvalidPositionError(
                f"starting position {position} is terminal under {variant.value}"
            )
        session = GameSession(
            id=uuid.uuid4().hex,
            variant=variant,
            initial=position,
            position=position,
        )
        if not human_first:
            session._record(ENGINE, engine_choice(variant, position))
        with self._lock:
            while len(self._sessions) >= self.capacity:
                self._sessions.popitem(last=False)
            self._sessions[session.id] = session
        return session

    def play_human_move(
        self, session_id: str, target_entry: TargetEntry, multiplier: int
    ) -> GameSession:
        """Apply the human's move; the engine replies while the game is on.

        Raises :class:`IllegalMoveError` for finished sessions, wrong-turn
        submissions, and moves that are not legal from the current position.
        """
        session = self.get(session_id)
        with session.lock:
            if session.status != IN_PROGRESS:
                raise IllegalMoveError(f"session {session_id} is finished")
            if session.turn != HUMAN:
                raise IllegalMoveError("it is not the human's turn")
            move = resolve_move(session.variant, session.position, target_entry, multiplier)
            session._record(HUMAN, move)
            if session.status == IN_PROGRESS:
                session._record(ENGINE, engine_choice(session.variant, session.position))
        return session
