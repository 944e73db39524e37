/**
 * Segment playback over WebAudio. The server names segments in its
 * manifest and serves the WAVs under /assets/; this module fetches and
 * decodes them on demand (cached), plays per-press cues, the cumulative
 * loop after a level advance, and the full four-layer mix on completion.
 *
 * Muting is enforced here at playback time -- a muted client still
 * presses and matches exactly as before, it just stays silent. If a
 * segment fails to fetch or decode, a short fallback beep marks the press
 * so the player still gets an audible acknowledgement.
 */

import { decodeManifest, type AudioCue, type SongManifest } from "./protocol.js";

export interface AudioBufferLike {
  duration: number;
}

export interface AudioNodeLike {
  connect(destination: unknown): void;
}

export interface BufferSourceLike extends AudioNodeLike {
  buffer: AudioBufferLike | null;
  start(when?: number): void;
  stop(): void;
  onended: (() => void) | null;
}

export interface OscillatorLike extends AudioNodeLike {
  frequency: { value: number };
  start(when?: number): void;
  stop(when?: number): void;
}

export interface AudioContextLike {
  currentTime: number;
  destination: unknown;
  decodeAudioData(data: ArrayBuffer): Promise<AudioBufferLike>;
  createBufferSource(): BufferSourceLike;
  createOscillator(): OscillatorLike;
}

export interface FetchResponseLike {
  ok: boolean;
  arrayBuffer(): Promise<ArrayBuffer>;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string) => Promise<FetchResponseLike>;

export interface CuePlayerOptions {
  contextFactory?: () => AudioContextLike;
  fetchFn?: FetchLike;
  manifestUrl?: string;
  assetBase?: string;
}

export type PlayResult = "played" | "muted" | "fallback" | "unavailable";

const FALLBACK_HZ = 660;
const FALLBACK_SECONDS = 0.15;

export class CuePlayer {
  private readonly contextFactory: () => AudioContextLike;
  private readonly fetchFn: FetchLike;
  private readonly manifestUrl: string;
  private readonly assetBase: string;

  private context: AudioContextLike | null = null;
  private manifest: SongManifest | null = null;
  private readonly buffers = new Map<string, Promise<AudioBufferLike>>();
  private readonly active = new Set<BufferSourceLike>();
  private mutedFlag = false;

  constructor(options: CuePlayerOptions = {}) {
    this.contextFactory =
      options.contextFactory ?? (() => new AudioContext() as unknown as AudioContextLike);
    this.fetchFn = options.fetchFn ?? ((url) => fetch(url) as Promise<FetchResponseLike>);
    this.manifestUrl = options.manifestUrl ?? "/manifest";
    this.assetBase = options.assetBase ?? "/assets";
  }

  get muted(): boolean {
    return this.mutedFlag;
  }

  setMuted(muted: boolean): void {
    this.mutedFlag = muted;
    if (muted) {
      this.stopAll();
    }
  }

  stopAll(): void {
    for (const source of this.active) {
      try {
        source.stop();
      } catch {
        // already stopped
      }
    }
    this.active.clear();
  }

  /** Fetches the manifest; audio stays in "unavailable" mode if it fails. */
  async init(): Promise<boolean> {
    try {
      const response = await this.fetchFn(this.manifestUrl);
      if (!response.ok) {
        return false;
      }
      this.manifest = decodeManifest(await response.json());
      return true;
    } catch {
      this.manifest = null;
      return false;
    }
  }

  private ensureContext(): AudioContextLike {
    if (this.context === null) {
      this.context = this.contextFactory();
    }
    return this.context;
  }

  private segmentUrl(layer: string, segment: number): string | null {
    const names = this.manifest?.layers[layer];
    const name = names?.[segment - 1];
    return name === undefined ? null : `${this.assetBase}/${name}`;
  }

  private loadBuffer(url: string): Promise<AudioBufferLike> {
    let pending = this.buffers.get(url);
    if (pending === undefined) {
      pending = this.fetchFn(url).then(async (response) => {
        if (!response.ok) {
          throw new Error(`fetch failed: ${url}`);
        }
        return this.ensureContext().decodeAudioData(await response.arrayBuffer());
      });
      pending.catch(() => this.buffers.delete(url)); // retry next time
      this.buffers.set(url, pending);
    }
    return pending;
  }

  private startSource(buffer: AudioBufferLike, when?: number): void {
    const context = this.ensureContext();
    const source = context.createBufferSource();
    source.buffer = buffer;
    source.connect(context.destination);
    source.onended = () => this.active.delete(source);
    this.active.add(source);
    source.start(when);
  }

  private fallbackBeep(): void {
    const context = this.ensureContext();
    const osc = context.createOscillator();
    osc.frequency.value = FALLBACK_HZ;
    osc.connect(context.destination);
    osc.start();
    osc.stop(context.currentTime + FALLBACK_SECONDS);
  }

  /** Plays one press cue. Never throws: a broken asset degrades to a beep. */
  async playCue(cue: AudioCue): Promise<PlayResult> {
    if (this.mutedFlag) {
      return "muted";
    }
    const url = this.segmentUrl(cue.layer, cue.segment);
    if (url === null) {
      return "unavailable";
    }
    try {
      this.startSource(await this.loadBuffer(url));
      return "played";
    } catch {
      this.fallbackBeep();
      return "fallback";
    }
  }

  /** Plays one layer's unlocked segments back to back (after an advance). */
  async playLoop(layer: string, segments: number[]): Promise<PlayResult> {
    if (this.mutedFlag) {
      return "muted";
    }
    if (this.manifest === null) {
      return "unavailable";
    }
    try {
      const buffers: AudioBufferLike[] = [];
      for (const segment of segments) {
        const url = this.segmentUrl(layer, segment);
        if (url === null) {
          return "unavailable";
        }
        buffers.push(await this.loadBuffer(url));
      }
      if (this.mutedFlag) {
        return "muted"; // muted while the segments were loading
      }
      let when = this.ensureContext().currentTime;
      for (const buffer of buffers) {
        this.startSource(buffer, when);
        when += buffer.duration;
      }
      return "played";
    } catch {
      this.fallbackBeep();
      return "fallback";
    }
  }

  /** Plays every layer's full sequence together: the completion mix. */
  async playCompletionMix(segments: number[]): Promise<PlayResult> {
    if (this.mutedFlag) {
      return "muted";
    }
    if (this.manifest === null) {
      return "unavailable";
    }
    const results = await Promise.all(
      Object.keys(this.manifest.layers)
        .sort()
        .map((layer) => this.playLoop(layer, segments)),
    );
    if (results.every((r) => r === "played")) {
      return "played";
    }
    return results.find((r) => r !== "played") ?? "played";
  }
}
