"""Session hosting: rooms, membership, routing and broadcasts.

The hub is transport-agnostic: handle_frame() takes one raw inbound frame
and returns the ordered list of (connection_id, encoded_frame) to
deliver. The caller (the WebSocket app, or a test harness driving frames
directly) serializes calls per hub, which makes every broadcast reflect a
single engine snapshot and makes the observable sequence equal the
arrival order.

Broadcast order after a press: press_result, state, then level_advanced
and game_complete when the outcome flags say so.

A controller that drops can rejoin by name while the game is running and
resumes its player slot; displays are read-only and unlimited.
"""

from __future__ import annotations

import logging
import secrets
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from ..core.config import GameConfig
from ..core.palette import PALETTE
from ..engine.session import Phase, PressOutcome, Session, create_session
from ..errors import DomainError, NotStartedError, ProtocolError, SessionFullError
from ..telemetry.events import JsonlEventLog, SessionRecorder
from .protocol import (
    AudioCue,
    ClientMessage,
    ErrorMessage,
    GameCompleteMessage,
    JoinedMessage,
    JoinMessage,
    LeaveMessage,
    LevelAdvancedMessage,
    PlayerStatus,
    PressMessage,
    PressResultMessage,
    ServerMessage,
    SetMutedMessage,
    StateMessage,
    decode_message,
    encode_message,
)

logger = logging.getLogger(__name__)

Effects = list[tuple[int, str]]


@dataclass
class Member:
    conn_id: int
    role: str
    name: str
    player_id: int | None = None


@dataclass
class Room:
    session_id: str
    session: Session
    recorder: SessionRecorder
    members: dict[int, Member] = field(default_factory=dict)
    # player_id -> conn_id of the live controller, None after a disconnect
    player_conns: dict[int, int | None] = field(default_factory=dict)
    degraded_warned: bool = False

    def state_message(self) -> StateMessage:
        s = self.session
        ref = s.reference_color_index
        return StateMessage(
            phase=s.phase.value,
            level=s.level,
            reference_color_hex=None if ref is None else PALETTE.hex(ref),
            players=[
                PlayerStatus(
                    player_id=p.player_id,
                    name=p.name,
                    matched=p.matched,
                    presses_this_level=p.presses_this_level,
                )
                for p in s.players
            ],
            unlocked=s.unlocked,
            muted=s.muted,
        )

    def summary(self) -> dict:
        presses_by_player: dict[int, int] = {}
        first_ts = last_ts = None
        for rec in self.recorder.records:
            if first_ts is None:
                first_ts = rec.ts_ms
            last_ts = rec.ts_ms
            if rec.event == "press":
                presses_by_player[rec.player_id] = presses_by_player.get(rec.player_id, 0) + 1
        return {
            "levels_completed": self.session.unlocked,
            "total_presses": sum(presses_by_player.values()),
            "duration_ms": (last_ts - first_ts) if first_ts is not None else 0,
            "players": [
                {"player_id": p.player_id, "name": p.name, "presses": presses_by_player.get(p.player_id, 0)}
                for p in self.session.players
            ],
        }


class SessionHub:
    """All rooms on one server. Single-writer: callers serialize handle_frame."""

    def __init__(
        self,
        pinned_seed: int | None = None,
        log_dir: str | Path | None = None,
        manifest_path: str | Path | None = None,
        clock: Callable[[], int] | None = None,
        seed_source: Callable[[], int] | None = None,
    ):
        self.pinned_seed = pinned_seed
        self.log_dir = Path(log_dir) if log_dir else None
        self.manifest_path = str(manifest_path) if manifest_path else None
        self.clock = clock or (lambda: int(time.time() * 1000))
        self.seed_source = seed_source or (lambda: secrets.randbits(64))
        self.rooms: dict[str, Room] = {}
        self.conn_rooms: dict[int, str] = {}

    # -- membership ----------------------------------------------------

    def _room_for(self, session_id: str) -> Room:
        room = self.rooms.get(session_id)
        if room is None:
            seed = self.pinned_seed if self.pinned_seed is not None else self.seed_source()
            session = create_session(GameConfig(seed=seed, manifest_path=self.manifest_path))
            writer = JsonlEventLog(self.log_dir / f"{session_id}.jsonl") if self.log_dir else None
            recorder = SessionRecorder(session, session_id, writer=writer, clock=self.clock)
            room = Room(session_id=session_id, session=session, recorder=recorder)
            self.rooms[session_id] = room
            logger.info("session %s created with seed %d", session_id, seed)
        return room

    def disconnect(self, conn_id: int) -> None:
        session_id = self.conn_rooms.pop(conn_id, None)
        if session_id is None:
            return
        room = self.rooms.get(session_id)
        if room is None:
            return
        member = room.members.pop(conn_id, None)
        if member and member.player_id is not None:
            room.player_conns[member.player_id] = None

    # -- routing ---------------------------------------------------------

    def handle_frame(self, conn_id: int, raw: str | bytes) -> Effects:
        try:
            message = decode_message(raw)
        except ProtocolError as exc:
            return [self._send(conn_id, ErrorMessage(code=exc.code, message=str(exc)))]
        return self.route(conn_id, message)

    def route(self, conn_id: int, message: ClientMessage) -> Effects:
        if isinstance(message, JoinMessage):
            return self._handle_join(conn_id, message)
        if isinstance(message, LeaveMessage):
            self.disconnect(conn_id)
            return []

        session_id = self.conn_rooms.get(conn_id)
        if session_id is None:
            return [self._send(conn_id, ErrorMessage(code="not_joined", message="join a session first"))]
        room = self.rooms[session_id]
        member = room.members[conn_id]

        if isinstance(message, PressMessage):
            return self._handle_press(room, member, message)
        if isinstance(message, SetMutedMessage):
            return self._handle_set_muted(room, member, message)
        raise AssertionError(f"unroutable message: {message!r}")

    # -- handlers --------------------------------------------------------

    def _handle_join(self, conn_id: int, message: JoinMessage) -> Effects:
        if conn_id in self.conn_rooms:
            return [self._send(conn_id, ErrorMessage(code="already_joined", message="this connection already joined"))]
        room = self._room_for(message.session_id)

        if message.role == "display":
            room.members[conn_id] = Member(conn_id, "display", message.name)
            self.conn_rooms[conn_id] = room.session_id
            return [self._send(conn_id, room.state_message())]

        # Controller: fresh join while pairing, else rejoin by name.
        if room.session.phase is Phase.PAIRING:
            result = room.recorder.join_player(message.name)
            member = Member(conn_id, "controller", message.name, player_id=result.player_id)
            room.members[conn_id] = member
            room.player_conns[result.player_id] = conn_id
            self.conn_rooms[conn_id] = room.session_id
            effects = [self._send(conn_id, JoinedMessage(player_id=result.player_id, layer_id=result.layer_id))]
            effects += self._broadcast(room, room.state_message())
            effects += self._degraded_warning(room)
            return effects

        for player in room.session.players:
            if player.name == message.name:
                if room.player_conns.get(player.player_id) is not None:
                    return [self._send(conn_id, ErrorMessage(code="name_taken", message=f"{message.name!r} is already connected"))]
                member = Member(conn_id, "controller", message.name, player_id=player.player_id)
                room.members[conn_id] = member
                room.player_conns[player.player_id] = conn_id
                self.conn_rooms[conn_id] = room.session_id
                return [
                    self._send(conn_id, JoinedMessage(player_id=player.player_id, layer_id=player.layer_id)),
                    self._send(conn_id, room.state_message()),
                ]
        return [self._send(conn_id, ErrorMessage(code="session_full", message="session already has three players"))]

    def _handle_press(self, room: Room, member: Member, message: PressMessage) -> Effects:
        if member.role != "controller" or member.player_id is None:
            return [self._send(member.conn_id, ErrorMessage(code="role_denied", message="displays cannot press"))]
        try:
            outcome = room.recorder.handle_press(
                member.player_id, message.region, tick=room.session.tick + 1
            )
        except NotStartedError as exc:
            return [self._send(member.conn_id, ErrorMessage(code="not_started", message=str(exc)))]
        except DomainError as exc:
            return [self._send(member.conn_id, ErrorMessage(code="domain", message=str(exc)))]
        return self._press_effects(room, outcome)

    def _press_effects(self, room: Room, outcome: PressOutcome) -> Effects:
        cue = None
        if outcome.audio_cue is not None:
            cue = AudioCue(layer=outcome.audio_cue[0], segment=outcome.audio_cue[1])
        effects = self._broadcast(
            room,
            PressResultMessage(
                player_id=outcome.player_id,
                region=outcome.region,
                color_hex="#{:02X}{:02X}{:02X}".format(*outcome.shown_color),
                matched=outcome.matched,
                audio_cue=cue,
            ),
        )
        effects += self._broadcast(room, room.state_message())
        if outcome.level_advanced:
            effects += self._broadcast(
                room,
                LevelAdvancedMessage(
                    new_level=room.session.level,
                    loop_segment_indices=list(range(1, room.session.unlocked + 1)),
                ),
            )
        if outcome.game_complete:
            effects += self._broadcast(room, GameCompleteMessage(summary=room.summary()))
        effects += self._degraded_warning(room)
        return effects

    def _handle_set_muted(self, room: Room, member: Member, message: SetMutedMessage) -> Effects:
        if member.role != "controller":
            return [self._send(member.conn_id, ErrorMessage(code="role_denied", message="displays cannot change the mute flag"))]
        room.recorder.set_muted(message.muted)
        return self._broadcast(room, room.state_message()) + self._degraded_warning(room)

    # -- plumbing --------------------------------------------------------

    def _send(self, conn_id: int, message: ServerMessage) -> tuple[int, str]:
        return (conn_id, encode_message(message))

    def _broadcast(self, room: Room, message: ServerMessage) -> Effects:
        frame = encode_message(message)
        return [(conn_id, frame) for conn_id in room.members]

    def _degraded_warning(self, room: Room) -> Effects:
        if room.recorder.write_error is None or room.degraded_warned:
            return []
        room.degraded_warned = True
        return self._broadcast(
            room,
            ErrorMessage(code="telemetry_degraded", message="event log write failed; logging disabled for this session"),
        )
