"""HTTP play service: session store, wire schemas, and the FastAPI app."""

from .app import create_app
from .sessions import GameSession, SessionStore

__all__ = ["GameSession", "SessionStore", "create_app"]
