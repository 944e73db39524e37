/**
 * The shared display view (the big screen in the room): reference color,
 * level progress, and one badge per player showing matched / still
 * searching. Model is pure; render() applies it to the DOM.
 */

import type { ClientState } from "./state.js";

export interface PlayerBadge {
  name: string;
  matched: boolean;
  presses: number;
}

export interface DisplayView {
  phase: string;
  level: number;
  unlocked: number;
  muted: boolean;
  referenceColorHex: string | null;
  badges: PlayerBadge[];
  waiting: number; // players not yet matched this level
  headline: string;
}

export function displayView(state: ClientState): DisplayView {
  const badges = state.players.map((p) => ({
    name: p.name,
    matched: p.matched,
    presses: p.presses_this_level,
  }));
  const waiting = badges.filter((b) => !b.matched).length;
  let headline: string;
  if (state.connection !== "open") {
    headline = "reconnecting...";
  } else if (state.phase === "pairing") {
    headline = `waiting for players (${state.players.length}/3)`;
  } else if (state.phase === "complete") {
    headline = "song complete!";
  } else if (waiting === 0) {
    headline = `level ${state.level}: advancing...`;
  } else {
    headline = `level ${state.level} of 16 - ${waiting} still searching`;
  }
  return {
    phase: state.phase,
    level: state.level,
    unlocked: state.unlocked,
    muted: state.muted,
    referenceColorHex: state.referenceColorHex,
    badges,
    waiting,
    headline,
  };
}

export function renderDisplay(root: HTMLElement, state: ClientState): void {
  const view = displayView(state);
  let reference = root.querySelector<HTMLElement>(".reference");
  if (reference === null) {
    root.textContent = "";
    reference = document.createElement("div");
    reference.className = "reference reference-large";
    root.appendChild(reference);
    const headline = document.createElement("h2");
    headline.className = "headline";
    root.appendChild(headline);
    const badges = document.createElement("div");
    badges.className = "badges";
    root.appendChild(badges);
  }

  reference.style.background = view.referenceColorHex ?? "transparent";
  const headline = root.querySelector<HTMLElement>(".headline");
  if (headline !== null) {
    headline.textContent = view.headline + (view.muted ? " (muted)" : "");
  }
  const badgeBox = root.querySelector<HTMLElement>(".badges");
  if (badgeBox !== null) {
    badgeBox.textContent = "";
    for (const badge of view.badges) {
      const el = document.createElement("span");
      el.className = badge.matched ? "badge matched" : "badge waiting";
      el.textContent = badge.matched
        ? `${badge.name}: matched`
        : `${badge.name}: searching (${badge.presses})`;
      badgeBox.appendChild(el);
    }
  }
}
