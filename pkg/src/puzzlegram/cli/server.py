"""puzzlegram-server: host game sessions over WebSocket.

    puzzlegram-server --port 8000 --manifest segments/manifest.json \
        [--seed 42] [--log-dir logs] [--ui-dir frontend/dist] [--host 0.0.0.0]

--seed pins the seed used for every auto-created session (reproducible
demos); otherwise each session gets a fresh entropy seed, logged at
creation. PUZZLEGRAM_LOG_DIR is the fallback for --log-dir.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="puzzlegram-server", description="Puzzlegram session server")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--manifest", required=True, help="path to a built manifest.json")
    parser.add_argument("--seed", type=int, default=None, help="pin the session seed (u64)")
    parser.add_argument("--log-dir", default=None, help="telemetry directory (fallback: $PUZZLEGRAM_LOG_DIR)")
    parser.add_argument("--ui-dir", default=None, help="serve a built web UI from this directory at /ui")
    return parser


def main(argv: list[str] | None = None) -> int:
    import uvicorn

    from ..server.app import create_app
    from ..server.sessions import SessionHub

    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(levelname)s %(message)s")

    log_dir = args.log_dir or os.environ.get("PUZZLEGRAM_LOG_DIR") or "puzzlegram_logs"
    hub = SessionHub(pinned_seed=args.seed, log_dir=log_dir, manifest_path=args.manifest)
    app = create_app(hub, manifest_file=args.manifest, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


if __name__ == "__main__":
    sys.exit(main())
