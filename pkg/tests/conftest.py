"""Shared helpers for driving sessions in tests."""

from puzzlegram.core.config import GameConfig
from puzzlegram.engine.session import Session, create_session

DEFAULT_NAMES = ("ana", "ben", "cho")


def make_active_session(seed: int = 42, muted: bool = False) -> Session:
    session = create_session(GameConfig(seed=seed, muted=muted))
    for name in DEFAULT_NAMES:
        session.join_player(name)
    return session


def correct_region(session: Session, player_id: int) -> int:
    """The one region whose color equals the current reference color."""
    target = session.reference_color_index
    return session.players[player_id].color_map.mapping.index(target)


def play_level(session: Session, tick: int) -> int:
    """Press each player's correct region once; returns the next free tick."""
    for pid in range(3):
        session.handle_press(pid, correct_region(session, pid), tick)
        tick += 1
    return tick


def play_full_game(session: Session) -> int:
    tick = session.tick + 1
    while session.phase.value != "complete":
        tick = play_level(session, tick)
    return tick
