"""Wire protocol: one JSON object per frame, UTF-8, "type" discriminator.

Decoding is strict about field types and ranges but ignores unknown
fields; anything else is a ProtocolError with code "bad_message" and the
session is untouched. Encoding is canonical -- fixed key order per
message type, compact separators, colors as uppercase "#RRGGBB", integer
timestamps only -- so identical states produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import ProtocolError

_STRICT = ConfigDict(extra="ignore", strict=True)


# -- client -> server ---------------------------------------------------


class JoinMessage(BaseModel):
    model_config = _STRICT
    type: Literal["join"] = "join"
    session_id: str = Field(min_length=1, max_length=64)
    name: str = Field(min_length=1, max_length=64)
    role: Literal["controller", "display"]


class PressMessage(BaseModel):
    model_config = _STRICT
    type: Literal["press"] = "press"
    region: int = Field(ge=0, le=15)
    client_ts_ms: int = Field(ge=0)


class SetMutedMessage(BaseModel):
    model_config = _STRICT
    type: Literal["set_muted"] = "set_muted"
    muted: bool


class LeaveMessage(BaseModel):
    model_config = _STRICT
    type: Literal["leave"] = "leave"


ClientMessage = Union[JoinMessage, PressMessage, SetMutedMessage, LeaveMessage]

_CLIENT_TYPES = {
    "join": JoinMessage,
    "press": PressMessage,
    "set_muted": SetMutedMessage,
    "leave": LeaveMessage,
}


# -- server -> client ---------------------------------------------------


class JoinedMessage(BaseModel):
    type: Literal["joined"] = "joined"
    player_id: int
    layer_id: str


class PlayerStatus(BaseModel):
    player_id: int
    name: str
    matched: bool
    presses_this_level: int


class StateMessage(BaseModel):
    type: Literal["state"] = "state"
    phase: str
    level: int
    reference_color_hex: str | None
    players: list[PlayerStatus]
    unlocked: int
    muted: bool


class AudioCue(BaseModel):
    layer: str
    segment: int


class PressResultMessage(BaseModel):
    type: Literal["press_result"] = "press_result"
    player_id: int
    region: int
    color_hex: str
    matched: bool
    audio_cue: AudioCue | None = None


class LevelAdvancedMessage(BaseModel):
    type: Literal["level_advanced"] = "level_advanced"
    new_level: int
    loop_segment_indices: list[int]


class GameCompleteMessage(BaseModel):
    type: Literal["game_complete"] = "game_complete"
    summary: dict


class ErrorMessage(BaseModel):
    type: Literal["error"] = "error"
    code: str
    message: str


ServerMessage = Union[
    JoinedMessage,
    StateMessage,
    PressResultMessage,
    LevelAdvancedMessage,
    GameCompleteMessage,
    ErrorMessage,
]


def decode_message(raw: str | bytes) -> ClientMessage:
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ProtocolError(f"frame is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(raw)
    except (json.JSONDecodeError, RecursionError) as exc:
        raise ProtocolError(f"frame is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ProtocolError("frame must be a JSON object")
    msg_type = doc.get("type")
    model = _CLIENT_TYPES.get(msg_type) if isinstance(msg_type, str) else None
    if model is None:
        raise ProtocolError(f"unknown message type: {msg_type!r}")
    try:
        return model.model_validate(doc)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"]) or "message"
        raise ProtocolError(f"invalid {msg_type}: {where}: {first['msg']}") from exc


def encode_message(message: ClientMessage | ServerMessage) -> str:
    """Canonical frame: model field order, compact separators.

    press_result omits audio_cue entirely when there is no cue (muted);
    every other optional is emitted explicitly (e.g. reference_color_hex
    is null while pairing).
    """
    doc = message.model_dump()
    if isinstance(message, PressResultMessage) and message.audio_cue is None:
        del doc["audio_cue"]
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
