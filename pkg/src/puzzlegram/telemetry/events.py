"""Append-only gameplay event log.

One JSON object per line, flushed per event so a crash can only truncate
the tail. Records are never rewritten. The SessionRecorder wraps a live
engine session and emits the canonical event stream for it; the server
and the simulation harness both record through it, so their logs are
interchangeable for replay and metrics.

Event kinds:
    join           a controller joined (3rd join starts the game)
    press          every accepted press, matched or not
    match          a press that newly matched its player this level
    level_advance  all three matched; level ends (carries the ended level)
    complete       the 16th level ended; game over
    mute_change    the muted flag was toggled
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO

from ..engine.session import Phase, PressOutcome, Session

logger = logging.getLogger(__name__)

EVENT_KINDS = ("join", "press", "match", "level_advance", "complete", "mute_change")

# Canonical field order for serialized records.
_FIELDS = ("ts_ms", "tick", "session_id", "event", "player_id", "region", "color_hex", "matched", "level", "muted")


@dataclass(slots=True, frozen=True)
class EventRecord:
    ts_ms: int
    tick: int
    session_id: str
    event: str
    level: int
    muted: bool
    player_id: int | None = None
    region: int | None = None
    color_hex: str | None = None
    matched: bool | None = None

    def to_json(self) -> str:
        doc = {}
        for name in _FIELDS:
            value = getattr(self, name)
            if value is not None:
                doc[name] = value
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict) -> "EventRecord":
        if doc.get("event") not in EVENT_KINDS:
            raise ValueError(f"unknown event kind: {doc.get('event')!r}")
        return cls(
            ts_ms=int(doc["ts_ms"]),
            tick=int(doc["tick"]),
            session_id=str(doc["session_id"]),
            event=doc["event"],
            level=int(doc["level"]),
            muted=bool(doc["muted"]),
            player_id=doc.get("player_id"),
            region=doc.get("region"),
            color_hex=doc.get("color_hex"),
            matched=doc.get("matched"),
        )


class JsonlEventLog:
    """Writer that appends and flushes one line per record."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh: TextIO = open(self.path, "a", encoding="utf-8")

    def append(self, record: EventRecord) -> None:
        try:
            self._fh.write(record.to_json() + "\n")
            self._fh.flush()
        except OSError:
            logger.exception("event log append failed: %s", self.path)
            raise

    def close(self) -> None:
        self._fh.close()


def _rgb_hex(rgb: tuple[int, int, int]) -> str:
    return "#{:02X}{:02X}{:02X}".format(*rgb)


class SessionRecorder:
    """Drives a Session and records the event stream it produces.

    All operations go through the recorder so engine state and log stay in
    step. Records accumulate in .records; pass a JsonlEventLog (or any
    object with .append) to also persist them.
    """

    def __init__(
        self,
        session: Session,
        session_id: str,
        writer: JsonlEventLog | None = None,
        clock: Callable[[], int] | None = None,
    ):
        self.session = session
        self.session_id = session_id
        self.writer = writer
        self.clock = clock or (lambda: int(time.time() * 1000))
        self.records: list[EventRecord] = []
        self.write_error: OSError | None = None

    def _emit(self, record: EventRecord) -> None:
        self.records.append(record)
        if self.writer is not None:
            try:
                self.writer.append(record)
            except OSError as exc:
                # Degraded mode: keep the session alive without persistence.
                # The server notices write_error and broadcasts a warning.
                self.write_error = exc
                self.writer = None

    def _record(self, event: str, ts_ms: int | None, *, level: int, **optional) -> None:
        self._emit(
            EventRecord(
                ts_ms=self.clock() if ts_ms is None else ts_ms,
                tick=self.session.tick,
                session_id=self.session_id,
                event=event,
                level=level,
                muted=self.session.muted,
                **optional,
            )
        )

    def join_player(self, name: str, ts_ms: int | None = None):
        result = self.session.join_player(name)
        self._record("join", ts_ms, level=self.session.level, player_id=result.player_id)
        return result

    def handle_press(self, player_id: int, region: int, tick: int, ts_ms: int | None = None) -> PressOutcome:
        level_before = self.session.level
        was_matched = self.session.phase is Phase.COMPLETE or self.session.players[player_id].matched
        outcome = self.session.handle_press(player_id, region, tick)
        if ts_ms is None:
            # one timestamp for the whole operation: the match/advance/complete
            # records ARE the press, so replays reproduce ts_ms exactly
            ts_ms = self.clock()
        color_hex = _rgb_hex(outcome.shown_color)
        self._record(
            "press", ts_ms,
            level=level_before, player_id=player_id, region=region,
            color_hex=color_hex, matched=outcome.matched,
        )
        if outcome.matched and not was_matched:
            self._record(
                "match", ts_ms,
                level=level_before, player_id=player_id, region=region,
                color_hex=color_hex, matched=True,
            )
        if outcome.level_advanced:
            self._record("level_advance", ts_ms, level=level_before)
        if outcome.game_complete:
            self._record("complete", ts_ms, level=level_before)
        return outcome

    def set_muted(self, flag: bool, ts_ms: int | None = None) -> None:
        self.session.set_muted(flag)
        self._record("mute_change", ts_ms, level=self.session.level)


def parse_log_lines(lines: Iterable[str]) -> tuple[list[EventRecord], int]:
    """Parse JSONL lines into records; malformed lines are skipped and
    counted, not fatal."""
    records: list[EventRecord] = []
    parse_errors = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            records.append(EventRecord.from_dict(json.loads(line)))
        except (ValueError, KeyError, TypeError):
            parse_errors += 1
    return records, parse_errors


def read_log(path: str | Path) -> tuple[list[EventRecord], int]:
    with open(path, encoding="utf-8") as fh:
        return parse_log_lines(fh)


def iter_records(source: str | Path | Iterable[EventRecord]) -> Iterator[EventRecord]:
    if isinstance(source, (str, Path)):
        records, _ = read_log(source)
        yield from records
    else:
        yield from source
