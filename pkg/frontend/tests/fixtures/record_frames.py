"""Records a full seeded game's wire traffic for the frontend tests.

Drives the server's session hub exactly like the WebSocket app does and
dumps every frame delivered to one controller (ana, conn 1) and to a
display that joins mid-game (conn 4). The frontend consumes only these
recorded frames -- the same bytes a live server would send.

Run from the repository root after installing the package:

    python3 frontend/tests/fixtures/record_frames.py
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from puzzlegram.core.mappings import derive_player_color_map, derive_reference_sequence
from puzzlegram.server.sessions import SessionHub

SEED = 77
OUT = Path(__file__).parent / "session_frames.json"


def main() -> None:
    clock = itertools.count(1000, 250)
    hub = SessionHub(pinned_seed=SEED, clock=lambda: next(clock))
    received: dict[int, list[str]] = {1: [], 4: []}

    def feed(conn_id: int, doc: dict) -> None:
        for target, frame in hub.handle_frame(conn_id, json.dumps(doc)):
            if target in received:
                received[target].append(frame)

    def press(conn_id: int, region: int) -> None:
        feed(conn_id, {"type": "press", "region": region, "client_ts_ms": 0})

    reference = derive_reference_sequence(SEED).colors
    maps = {pid: derive_player_color_map(SEED, pid).mapping for pid in range(3)}
    conns = {0: 1, 1: 2, 2: 3}  # player_id -> conn_id

    feed(1, {"type": "join", "session_id": "fixture", "name": "ana", "role": "controller"})
    feed(2, {"type": "join", "session_id": "fixture", "name": "ben", "role": "controller"})
    feed(3, {"type": "join", "session_id": "fixture", "name": "cho", "role": "controller"})

    for level in range(1, 17):
        if level == 3:
            feed(4, {"type": "join", "session_id": "fixture", "name": "big-screen", "role": "display"})
        if level == 5:
            feed(1, {"type": "set_muted", "muted": True})
        if level == 6:
            feed(1, {"type": "set_muted", "muted": False})
        target_color = reference[level - 1]
        for player_id in range(3):
            correct = maps[player_id].index(target_color)
            press(conns[player_id], (correct + 1) % 16)  # one miss first
            press(conns[player_id], correct)

    doc = {
        "seed": SEED,
        "controller_conn": 1,
        "display_conn": 4,
        "frames": {str(conn): frames for conn, frames in received.items()},
    }
    OUT.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({sum(len(f) for f in received.values())} frames)")


if __name__ == "__main__":
    main()
