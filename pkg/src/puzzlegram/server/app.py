"""FastAPI application: the WebSocket front door plus a small REST surface.

Every inbound frame is handled under one lock, so hub state mutations and
the resulting broadcasts are strictly serialized -- each connection observes
frames in hub order. Outbound frames are routed through a per-connection
queue owned by that connection's event loop, so a broadcast never touches
another connection's socket directly (connections are not guaranteed to
share a loop). Static segment assets are served from the manifest directory
under /assets.
"""

from __future__ import annotations

import asyncio
import contextlib
import itertools
import logging
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from fastapi.responses import FileResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .. import __version__
from ..audio.manifest import load_manifest
from .sessions import SessionHub

logger = logging.getLogger(__name__)


class HealthResponse(BaseModel):
    status: str
    version: str


class SessionSummary(BaseModel):
    session_id: str
    phase: str
    level: int
    unlocked: int
    muted: bool
    players: list[str]
    connections: int


class SessionListResponse(BaseModel):
    sessions: list[SessionSummary]


def create_app(hub: SessionHub, manifest_file: str | Path | None = None, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="puzzlegram", version=__version__)
    app.state.hub = hub
    # conn_id -> (owning loop, outbound frame queue created on that loop)
    outboxes: dict[int, tuple[asyncio.AbstractEventLoop, asyncio.Queue[str]]] = {}
    conn_ids = itertools.count(1)
    lock = threading.Lock()

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.get("/sessions", response_model=SessionListResponse)
    def sessions() -> SessionListResponse:
        return SessionListResponse(
            sessions=[
                SessionSummary(
                    session_id=room.session_id,
                    phase=room.session.phase.value,
                    level=room.session.level,
                    unlocked=room.session.unlocked,
                    muted=room.session.muted,
                    players=[p.name for p in room.session.players],
                    connections=len(room.members),
                )
                for room in hub.rooms.values()
            ]
        )

    if manifest_file is not None:
        manifest_file = Path(manifest_file)
        load_manifest(manifest_file)  # fail fast on an unreadable manifest

        @app.get("/manifest")
        def manifest() -> FileResponse:
            return FileResponse(manifest_file, media_type="application/json")

        app.mount("/assets", StaticFiles(directory=manifest_file.parent), name="assets")
    else:

        @app.get("/manifest")
        def manifest_missing():
            raise HTTPException(status_code=404, detail="server started without a manifest")

    if ui_dir is not None:
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    def _dispatch(effects: list[tuple[int, str]]) -> None:
        # caller holds the lock; puts are handed to each target's own loop,
        # which keeps per-connection delivery order equal to hub order
        for target, frame in effects:
            entry = outboxes.get(target)
            if entry is None:
                continue
            target_loop, outbox = entry
            target_loop.call_soon_threadsafe(outbox.put_nowait, frame)

    @app.websocket("/ws")
    async def ws_endpoint(websocket: WebSocket) -> None:
        await websocket.accept()
        loop = asyncio.get_running_loop()
        outbox: asyncio.Queue[str] = asyncio.Queue()
        with lock:
            conn_id = next(conn_ids)
            outboxes[conn_id] = (loop, outbox)

        async def _writer() -> None:
            try:
                while True:
                    await websocket.send_text(await outbox.get())
            except Exception:
                pass  # the reader sees the disconnect and cleans up

        writer = asyncio.create_task(_writer())
        try:
            while True:
                raw = await websocket.receive_text()
                with lock:
                    _dispatch(hub.handle_frame(conn_id, raw))
        except WebSocketDisconnect:
            pass
        finally:
            writer.cancel()
            with contextlib.suppress(asyncio.CancelledError):
                await writer
            with lock:
                outboxes.pop(conn_id, None)
                hub.disconnect(conn_id)

    return app
