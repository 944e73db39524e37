"""Puzzlegram: a cooperative three-player color/music matching game.

Subpackages:
    core       -- palette, seeded RNG and per-player assignment maps
    engine     -- the deterministic session state machine
    audio      -- stem splitting, song manifests, synthesized test stems
    telemetry  -- JSONL event logs, session metrics, exposure trend
    sim        -- scripted bots and the Monte Carlo simulation runner
    server     -- FastAPI/WebSocket session server
"""

__version__ = "0.1.0"
