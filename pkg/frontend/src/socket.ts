/**
 * GameSocket: one WebSocket to the server's /ws endpoint with automatic
 * reconnect. The join arguments are remembered and replayed after every
 * reconnect; the server's rejoin-by-name rule then puts a controller back
 * into its player slot, so a page reload or a dropped connection costs
 * nothing but the round trip.
 */

import {
  encodeClientFrame,
  decodeServerFrame,
  ProtocolViolation,
  type ClientFrame,
  type JoinFrame,
  type Role,
  type ServerFrame,
} from "./protocol.js";

/** The subset of the browser WebSocket this module relies on. */
export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: (() => void) | null;
  onclose: (() => void) | null;
  onmessage: ((event: { data: unknown }) => void) | null;
}

export interface GameSocketOptions {
  makeSocket?: (url: string) => SocketLike;
  reconnectDelayMs?: number;
  now?: () => number;
  onFrame?: (frame: ServerFrame) => void;
  onStatus?: (status: "connecting" | "open" | "closed") => void;
}

export class GameSocket {
  private readonly url: string;
  private readonly makeSocket: (url: string) => SocketLike;
  private readonly reconnectDelayMs: number;
  private readonly now: () => number;
  private readonly onFrame: (frame: ServerFrame) => void;
  private readonly onStatus: (status: "connecting" | "open" | "closed") => void;

  private socket: SocketLike | null = null;
  private joinFrame: JoinFrame | null = null;
  private stopped = false;
  private reconnectTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(url: string, options: GameSocketOptions = {}) {
    this.url = url;
    this.makeSocket = options.makeSocket ?? ((u) => new WebSocket(u) as unknown as SocketLike);
    this.reconnectDelayMs = options.reconnectDelayMs ?? 1000;
    this.now = options.now ?? Date.now;
    this.onFrame = options.onFrame ?? (() => undefined);
    this.onStatus = options.onStatus ?? (() => undefined);
    this.connect();
  }

  private connect(): void {
    this.onStatus("connecting");
    const socket = this.makeSocket(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.onStatus("open");
      if (this.joinFrame !== null) {
        socket.send(encodeClientFrame(this.joinFrame));
      }
    };
    socket.onmessage = (event) => {
      if (typeof event.data !== "string") {
        return; // the server only speaks text frames
      }
      let frame: ServerFrame;
      try {
        frame = decodeServerFrame(event.data);
      } catch (exc) {
        if (exc instanceof ProtocolViolation) {
          console.warn("dropping unintelligible server frame:", exc.message);
          return;
        }
        throw exc;
      }
      this.onFrame(frame);
    };
    socket.onclose = () => {
      this.onStatus("closed");
      this.socket = null;
      if (!this.stopped && this.reconnectTimer === null) {
        this.reconnectTimer = setTimeout(() => {
          this.reconnectTimer = null;
          if (!this.stopped) {
            this.connect();
          }
        }, this.reconnectDelayMs);
      }
    };
  }

  private send(frame: ClientFrame): void {
    this.socket?.send(encodeClientFrame(frame));
  }

  join(sessionId: string, name: string, role: Role): void {
    this.joinFrame = { type: "join", session_id: sessionId, name, role };
    this.send(this.joinFrame);
  }

  press(region: number): void {
    this.send({ type: "press", region, client_ts_ms: Math.max(0, Math.round(this.now())) });
  }

  setMuted(muted: boolean): void {
    this.send({ type: "set_muted", muted });
  }

  leave(): void {
    this.joinFrame = null;
    this.send({ type: "leave" });
  }

  /** Stops reconnecting and closes the underlying socket. */
  close(): void {
    this.stopped = true;
    if (this.reconnectTimer !== null) {
      clearTimeout(this.reconnectTimer);
      this.reconnectTimer = null;
    }
    this.socket?.close();
    this.socket = null;
  }
}
