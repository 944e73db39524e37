from .session import (
    DisplayView,
    JoinResult,
    Phase,
    PlayerState,
    PlayerView,
    PressOutcome,
    Session,
    create_session,
)

__all__ = [
    "DisplayView",
    "JoinResult",
    "Phase",
    "PlayerState",
    "PlayerView",
    "PressOutcome",
    "Session",
    "create_session",
]
