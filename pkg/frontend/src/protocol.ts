/**
 * Wire protocol: one JSON object per WebSocket text frame, discriminated
 * by "type". Mirrors the server's contract; decodeServerFrame() rejects
 * anything that does not match so the UI never renders garbage.
 */

export type Role = "controller" | "display";

// -- client -> server ----------------------------------------------------

export interface JoinFrame {
  type: "join";
  session_id: string;
  name: string;
  role: Role;
}

export interface PressFrame {
  type: "press";
  region: number;
  client_ts_ms: number;
}

export interface SetMutedFrame {
  type: "set_muted";
  muted: boolean;
}

export interface LeaveFrame {
  type: "leave";
}

export type ClientFrame = JoinFrame | PressFrame | SetMutedFrame | LeaveFrame;

export function encodeClientFrame(frame: ClientFrame): string {
  return JSON.stringify(frame);
}

// -- server -> client ----------------------------------------------------

export interface JoinedFrame {
  type: "joined";
  player_id: number;
  layer_id: string;
}

export interface PlayerStatus {
  player_id: number;
  name: string;
  matched: boolean;
  presses_this_level: number;
}

export interface StateFrame {
  type: "state";
  phase: string;
  level: number;
  reference_color_hex: string | null;
  players: PlayerStatus[];
  unlocked: number;
  muted: boolean;
}

export interface AudioCue {
  layer: string;
  segment: number; // 1-based position in the song
}

export interface PressResultFrame {
  type: "press_result";
  player_id: number;
  region: number;
  color_hex: string;
  matched: boolean;
  audio_cue?: AudioCue; // omitted while the session is muted
}

export interface LevelAdvancedFrame {
  type: "level_advanced";
  new_level: number;
  loop_segment_indices: number[]; // cumulative, 1-based
}

export interface GameCompleteFrame {
  type: "game_complete";
  summary: {
    levels_completed: number;
    total_presses: number;
    duration_ms: number;
    players: unknown[];
  };
}

export interface ErrorFrame {
  type: "error";
  code: string;
  message: string;
}

export type ServerFrame =
  | JoinedFrame
  | StateFrame
  | PressResultFrame
  | LevelAdvancedFrame
  | GameCompleteFrame
  | ErrorFrame;

export class ProtocolViolation extends Error {}

const HEX_COLOR = /^#[0-9A-F]{6}$/;

function isObject(doc: unknown): doc is Record<string, unknown> {
  return typeof doc === "object" && doc !== null && !Array.isArray(doc);
}

function need(cond: boolean, what: string): asserts cond {
  if (!cond) {
    throw new ProtocolViolation(`bad server frame: ${what}`);
  }
}

function isInt(value: unknown): value is number {
  return typeof value === "number" && Number.isInteger(value);
}

function decodePlayer(doc: unknown): PlayerStatus {
  need(isObject(doc), "player entry must be an object");
  need(isInt(doc.player_id), "player_id must be an integer");
  need(typeof doc.name === "string", "player name must be a string");
  need(typeof doc.matched === "boolean", "matched must be a boolean");
  need(isInt(doc.presses_this_level), "presses_this_level must be an integer");
  return {
    player_id: doc.player_id,
    name: doc.name,
    matched: doc.matched,
    presses_this_level: doc.presses_this_level,
  };
}

export function decodeServerFrame(raw: string): ServerFrame {
  let doc: unknown;
  try {
    doc = JSON.parse(raw);
  } catch {
    throw new ProtocolViolation("frame is not valid JSON");
  }
  need(isObject(doc), "frame must be a JSON object");

  switch (doc.type) {
    case "joined": {
      need(isInt(doc.player_id), "player_id must be an integer");
      need(typeof doc.layer_id === "string", "layer_id must be a string");
      return { type: "joined", player_id: doc.player_id, layer_id: doc.layer_id };
    }
    case "state": {
      need(typeof doc.phase === "string", "phase must be a string");
      need(isInt(doc.level), "level must be an integer");
      need(
        doc.reference_color_hex === null ||
          (typeof doc.reference_color_hex === "string" && HEX_COLOR.test(doc.reference_color_hex)),
        "reference_color_hex must be #RRGGBB or null",
      );
      need(Array.isArray(doc.players), "players must be an array");
      need(isInt(doc.unlocked), "unlocked must be an integer");
      need(typeof doc.muted === "boolean", "muted must be a boolean");
      return {
        type: "state",
        phase: doc.phase,
        level: doc.level,
        reference_color_hex: doc.reference_color_hex as string | null,
        players: doc.players.map(decodePlayer),
        unlocked: doc.unlocked,
        muted: doc.muted,
      };
    }
    case "press_result": {
      need(isInt(doc.player_id), "player_id must be an integer");
      need(isInt(doc.region) && doc.region >= 0 && doc.region <= 15, "region must be 0..15");
      need(typeof doc.color_hex === "string" && HEX_COLOR.test(doc.color_hex), "color_hex must be #RRGGBB");
      need(typeof doc.matched === "boolean", "matched must be a boolean");
      const frame: PressResultFrame = {
        type: "press_result",
        player_id: doc.player_id,
        region: doc.region,
        color_hex: doc.color_hex,
        matched: doc.matched,
      };
      if (doc.audio_cue !== undefined && doc.audio_cue !== null) {
        const cue = doc.audio_cue;
        need(isObject(cue), "audio_cue must be an object");
        need(typeof cue.layer === "string", "audio_cue.layer must be a string");
        need(isInt(cue.segment) && cue.segment >= 1, "audio_cue.segment must be a positive integer");
        frame.audio_cue = { layer: cue.layer, segment: cue.segment };
      }
      return frame;
    }
    case "level_advanced": {
      need(isInt(doc.new_level), "new_level must be an integer");
      need(
        Array.isArray(doc.loop_segment_indices) && doc.loop_segment_indices.every(isInt),
        "loop_segment_indices must be an array of integers",
      );
      return {
        type: "level_advanced",
        new_level: doc.new_level,
        loop_segment_indices: doc.loop_segment_indices,
      };
    }
    case "game_complete": {
      const summary = doc.summary;
      need(isObject(summary), "summary must be an object");
      need(isInt(summary.levels_completed), "levels_completed must be an integer");
      need(isInt(summary.total_presses), "total_presses must be an integer");
      need(isInt(summary.duration_ms), "duration_ms must be an integer");
      need(Array.isArray(summary.players), "players must be an array");
      return {
        type: "game_complete",
        summary: {
          levels_completed: summary.levels_completed,
          total_presses: summary.total_presses,
          duration_ms: summary.duration_ms,
          players: summary.players,
        },
      };
    }
    case "error": {
      need(typeof doc.code === "string", "code must be a string");
      need(typeof doc.message === "string", "message must be a string");
      return { type: "error", code: doc.code, message: doc.message };
    }
    default:
      throw new ProtocolViolation(`unknown server frame type: ${String(doc.type)}`);
  }
}

// -- manifest (GET /manifest) --------------------------------------------

export interface SongManifest {
  song_id: string;
  sample_rate: number;
  channels: number;
  segment_frames: number[];
  layers: Record<string, string[]>; // layer_id -> 16 file names under /assets/
  created_with_seed: number;
}

export function decodeManifest(doc: unknown): SongManifest {
  need(isObject(doc), "manifest must be a JSON object");
  need(typeof doc.song_id === "string", "song_id must be a string");
  need(isInt(doc.sample_rate), "sample_rate must be an integer");
  need(isInt(doc.channels), "channels must be an integer");
  need(
    Array.isArray(doc.segment_frames) && doc.segment_frames.every(isInt),
    "segment_frames must be an array of integers",
  );
  need(isObject(doc.layers), "layers must be an object");
  const layers: Record<string, string[]> = {};
  for (const [layer, names] of Object.entries(doc.layers)) {
    need(
      Array.isArray(names) && names.every((n) => typeof n === "string"),
      `layers.${layer} must be an array of file names`,
    );
    layers[layer] = names as string[];
  }
  need(isInt(doc.created_with_seed), "created_with_seed must be an integer");
  return {
    song_id: doc.song_id,
    sample_rate: doc.sample_rate,
    channels: doc.channels,
    segment_frames: doc.segment_frames,
    layers,
    created_with_seed: doc.created_with_seed,
  };
}
