"""Wire protocol: decoding strictness, canonical encoding, fuzz."""

import json
import random
import string
from pathlib import Path

import pytest

from puzzlegram.errors import ProtocolError
from puzzlegram.server.protocol import (
    AudioCue,
    ErrorMessage,
    GameCompleteMessage,
    JoinedMessage,
    JoinMessage,
    LeaveMessage,
    LevelAdvancedMessage,
    PlayerStatus,
    PressMessage,
    PressResultMessage,
    SetMutedMessage,
    StateMessage,
    decode_message,
    encode_message,
)

FIXTURES = json.loads(
    (Path(__file__).parent / "fixtures" / "protocol_messages.json").read_text()
)

SERVER_MODELS = {
    "joined": JoinedMessage,
    "state": StateMessage,
    "press_result": PressResultMessage,
    "level_advanced": LevelAdvancedMessage,
    "game_complete": GameCompleteMessage,
    "error": ErrorMessage,
}


def test_every_client_fixture_decodes_and_round_trips():
    for doc in FIXTURES["client"]:
        msg = decode_message(json.dumps(doc))
        assert msg.type == doc["type"]
        assert json.loads(encode_message(msg)) == doc


def test_every_server_fixture_round_trips_canonically():
    for doc in FIXTURES["server"]:
        model = SERVER_MODELS[doc["type"]]
        msg = model.model_validate(doc)
        encoded = encode_message(msg)
        assert json.loads(encoded) == doc
        # canonical: compact separators, model field order
        assert encoded == json.dumps(doc, separators=(",", ":"))


def test_every_rejected_fixture_raises_protocol_error():
    for raw in FIXTURES["rejected"]:
        with pytest.raises(ProtocolError) as err:
            decode_message(raw)
        assert err.value.code == "bad_message"


def test_decode_accepts_bytes_and_rejects_non_utf8():
    msg = decode_message('{"type":"leave"}'.encode())
    assert isinstance(msg, LeaveMessage)
    with pytest.raises(ProtocolError):
        decode_message(b"\xff\xfe{}")


def test_unknown_fields_are_ignored():
    msg = decode_message('{"type":"press","region":3,"client_ts_ms":1,"extra":"x"}')
    assert isinstance(msg, PressMessage)
    assert msg.region == 3
    assert "extra" not in encode_message(msg)


def test_strict_types_reject_coercion():
    # strings that look like numbers / numbers that look like bools stay invalid
    for raw in (
        '{"type":"press","region":"3","client_ts_ms":1}',
        '{"type":"press","region":3,"client_ts_ms":1.5}',
        '{"type":"press","region":true,"client_ts_ms":1}',
        '{"type":"set_muted","muted":1}',
        '{"type":"join","session_id":"s","name":"a","role":"Controller"}',
    ):
        with pytest.raises(ProtocolError):
            decode_message(raw)


def test_press_result_omits_cue_only_when_muted():
    cued = PressResultMessage(
        player_id=0, region=1, color_hex="#E62E2E", matched=False,
        audio_cue=AudioCue(layer="harmony1", segment=4),
    )
    silent = PressResultMessage(player_id=0, region=1, color_hex="#E62E2E", matched=False)
    assert '"audio_cue":{"layer":"harmony1","segment":4}' in encode_message(cued)
    assert "audio_cue" not in encode_message(silent)


def test_state_keeps_null_reference_while_pairing():
    msg = StateMessage(
        phase="pairing", level=0, reference_color_hex=None,
        players=[PlayerStatus(player_id=0, name="ana", matched=False, presses_this_level=0)],
        unlocked=0, muted=False,
    )
    assert '"reference_color_hex":null' in encode_message(msg)


def test_identical_messages_encode_to_identical_bytes():
    a = JoinMessage(session_id="s", name="n", role="controller")
    b = JoinMessage(session_id="s", name="n", role="controller")
    assert encode_message(a) == encode_message(b)
    assert encode_message(SetMutedMessage(muted=True)) == '{"type":"set_muted","muted":true}'
    assert encode_message(LeaveMessage()) == '{"type":"leave"}'


def test_fuzz_decode_never_raises_anything_but_protocol_error():
    rng = random.Random(1234)
    alphabet = string.printable + "é☃"
    valid_types = ["join", "press", "set_muted", "leave"]
    for _ in range(2000):
        shape = rng.randrange(4)
        if shape == 0:  # raw noise
            raw = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 60)))
        elif shape == 1:  # JSON of the wrong shape
            raw = json.dumps(rng.choice([None, 1, 2.5, "x", [1, 2], {"a": 1}]))
        elif shape == 2:  # right type, mangled fields
            doc = {"type": rng.choice(valid_types)}
            for _ in range(rng.randrange(0, 4)):
                key = rng.choice(["region", "client_ts_ms", "muted", "session_id", "name", "role", "zzz"])
                doc[key] = rng.choice([None, -5, 99, "x" * rng.randrange(0, 80), True, [1], {"y": 2}])
            raw = json.dumps(doc)
        else:  # truncated valid frame
            full = '{"type":"press","region":3,"client_ts_ms":42}'
            raw = full[: rng.randrange(0, len(full))]
        try:
            decode_message(raw)
        except ProtocolError as exc:
            assert exc.code == "bad_message"
        # any other exception propagates and fails the test
