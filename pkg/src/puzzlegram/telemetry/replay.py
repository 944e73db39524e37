"""Replay a recorded event log through a fresh engine.

Feeding the recorded joins/presses/mute changes back into a new session
with the same config must reproduce the same match/advance/complete
events in the same order -- the determinism check the fixtures pin down.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from ..core.config import GameConfig
from ..engine.session import create_session
from .events import EventRecord, SessionRecorder, read_log

DERIVED_EVENTS = ("match", "level_advance", "complete")


def replay_log(config: GameConfig, source: str | Path | Iterable[EventRecord]) -> list[EventRecord]:
    """Re-run the inputs from a log; returns the full replayed event list."""
    if isinstance(source, (str, Path)):
        records, _ = read_log(source)
    else:
        records = list(source)

    session = create_session(config)
    recorder = SessionRecorder(session, records[0].session_id if records else "replay")
    for rec in records:
        if rec.event == "join":
            recorder.join_player(f"player-{rec.player_id}", ts_ms=rec.ts_ms)
        elif rec.event == "press":
            recorder.handle_press(rec.player_id, rec.region, tick=rec.tick, ts_ms=rec.ts_ms)
        elif rec.event == "mute_change":
            recorder.set_muted(rec.muted, ts_ms=rec.ts_ms)
        # match/level_advance/complete are derived; the replay regenerates them
    return recorder.records


def derived_events(records: Iterable[EventRecord]) -> list[EventRecord]:
    return [r for r in records if r.event in DERIVED_EVENTS]
