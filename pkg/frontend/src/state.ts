/**
 * Client-side session state: a pure reducer over server frames.
 *
 * The server is the single source of truth; this module only accumulates
 * what it says. The one piece of purely local state is `revealed`: the
 * colors this client has uncovered on its own grid during the current
 * level (the server repeats them in press_result frames, the reducer
 * remembers them so the grid stays painted between presses). Revealed
 * colors are wiped on every level advance because the reference changes.
 */

import type {
  GameCompleteFrame,
  PlayerStatus,
  Role,
  ServerFrame,
} from "./protocol.js";

export const NUM_REGIONS = 16;

export type ConnectionStatus = "connecting" | "open" | "closed";

export interface ClientState {
  connection: ConnectionStatus;
  role: Role | null;
  playerId: number | null;
  layerId: string | null;
  phase: string;
  level: number;
  unlocked: number;
  muted: boolean;
  referenceColorHex: string | null;
  players: PlayerStatus[];
  revealed: (string | null)[]; // own grid, index = region
  loop: number[]; // cumulative unlocked segments, 1-based
  summary: GameCompleteFrame["summary"] | null;
  lastError: { code: string; message: string } | null;
}

export function initialState(role: Role | null = null): ClientState {
  return {
    connection: "connecting",
    role,
    playerId: null,
    layerId: null,
    phase: "pairing",
    level: 0,
    unlocked: 0,
    muted: false,
    referenceColorHex: null,
    players: [],
    revealed: new Array<string | null>(NUM_REGIONS).fill(null),
    loop: [],
    summary: null,
    lastError: null,
  };
}

export function apply(state: ClientState, frame: ServerFrame): ClientState {
  switch (frame.type) {
    case "joined":
      return { ...state, playerId: frame.player_id, layerId: frame.layer_id, lastError: null };
    case "state":
      return {
        ...state,
        phase: frame.phase,
        level: frame.level,
        unlocked: frame.unlocked,
        muted: frame.muted,
        referenceColorHex: frame.reference_color_hex,
        players: frame.players,
      };
    case "press_result": {
      if (frame.player_id !== state.playerId) {
        return state;
      }
      const revealed = state.revealed.slice();
      revealed[frame.region] = frame.color_hex;
      return { ...state, revealed };
    }
    case "level_advanced":
      return {
        ...state,
        revealed: new Array<string | null>(NUM_REGIONS).fill(null),
        loop: frame.loop_segment_indices.slice(),
      };
    case "game_complete":
      return { ...state, summary: frame.summary };
    case "error":
      return { ...state, lastError: { code: frame.code, message: frame.message } };
  }
}

export function setConnection(state: ClientState, connection: ConnectionStatus): ClientState {
  return state.connection === connection ? state : { ...state, connection };
}

export function me(state: ClientState): PlayerStatus | null {
  if (state.playerId === null) {
    return null;
  }
  return state.players.find((p) => p.player_id === state.playerId) ?? null;
}

// -- join persistence (reload -> rejoin by name) ---------------------------

export interface JoinArgs {
  sessionId: string;
  name: string;
  role: Role;
}

export interface KeyValueStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

const JOIN_KEY = "puzzlegram.join";

export function saveJoin(store: KeyValueStore, args: JoinArgs): void {
  store.setItem(JOIN_KEY, JSON.stringify(args));
}

export function clearJoin(store: KeyValueStore): void {
  store.removeItem(JOIN_KEY);
}

export function restoreJoin(store: KeyValueStore): JoinArgs | null {
  const raw = store.getItem(JOIN_KEY);
  if (raw === null) {
    return null;
  }
  try {
    const doc: unknown = JSON.parse(raw);
    if (
      typeof doc === "object" &&
      doc !== null &&
      typeof (doc as JoinArgs).sessionId === "string" &&
      typeof (doc as JoinArgs).name === "string" &&
      ((doc as JoinArgs).role === "controller" || (doc as JoinArgs).role === "display")
    ) {
      const { sessionId, name, role } = doc as JoinArgs;
      return { sessionId, name, role };
    }
  } catch {
    // fall through: a corrupt entry is the same as none
  }
  store.removeItem(JOIN_KEY);
  return null;
}
