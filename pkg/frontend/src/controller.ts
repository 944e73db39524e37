/**
 * The player view: a 4x4 grid of buttons plus a status line. The model
 * functions are pure (tested headless); render() projects a model onto
 * the DOM and is the only part that touches documents.
 */

import { me, NUM_REGIONS, type ClientState } from "./state.js";

export interface CellView {
  region: number;
  colorHex: string | null; // revealed color, null while still covered
  pressable: boolean;
}

export interface ControllerView {
  cells: CellView[];
  referenceColorHex: string | null;
  statusLine: string;
  muted: boolean;
  matched: boolean;
}

export function controllerView(state: ClientState): ControllerView {
  const self = me(state);
  const matched = self?.matched ?? false;
  const pressable = state.connection === "open" && state.phase === "active" && !matched;
  const cells: CellView[] = [];
  for (let region = 0; region < NUM_REGIONS; region += 1) {
    cells.push({ region, colorHex: state.revealed[region] ?? null, pressable });
  }
  return {
    cells,
    referenceColorHex: state.referenceColorHex,
    statusLine: statusLine(state),
    muted: state.muted,
    matched,
  };
}

export function statusLine(state: ClientState): string {
  if (state.connection !== "open") {
    return state.connection === "connecting" ? "connecting..." : "connection lost, retrying...";
  }
  if (state.lastError !== null && state.lastError.code !== "bad_message") {
    return `error: ${state.lastError.message}`;
  }
  if (state.phase === "pairing") {
    return `waiting for players (${state.players.length}/3)`;
  }
  if (state.phase === "complete") {
    const presses = state.summary?.total_presses;
    return presses === undefined ? "song complete!" : `song complete! ${presses} presses in total`;
  }
  const self = me(state);
  if (self?.matched) {
    const waiting = state.players.filter((p) => !p.matched).length;
    return `matched! waiting for ${waiting} player${waiting === 1 ? "" : "s"}`;
  }
  return `level ${state.level} of 16 - find the reference color`;
}

export function renderController(
  root: HTMLElement,
  state: ClientState,
  onPress: (region: number) => void,
): void {
  const view = controllerView(state);
  let grid = root.querySelector<HTMLElement>(".grid");
  if (grid === null) {
    root.textContent = "";
    const reference = document.createElement("div");
    reference.className = "reference";
    root.appendChild(reference);
    grid = document.createElement("div");
    grid.className = "grid";
    for (const cell of view.cells) {
      const button = document.createElement("button");
      button.className = "cell";
      button.dataset.region = String(cell.region);
      button.addEventListener("click", () => onPress(cell.region));
      grid.appendChild(button);
    }
    root.appendChild(grid);
    const status = document.createElement("p");
    status.className = "status";
    root.appendChild(status);
  }

  const reference = root.querySelector<HTMLElement>(".reference");
  if (reference !== null) {
    reference.style.background = view.referenceColorHex ?? "transparent";
    reference.textContent = view.referenceColorHex === null ? "?" : "";
  }
  const buttons = grid.querySelectorAll<HTMLButtonElement>("button.cell");
  buttons.forEach((button, region) => {
    const cell = view.cells[region];
    if (cell === undefined) {
      return;
    }
    button.disabled = !cell.pressable;
    button.style.background = cell.colorHex ?? "";
    button.classList.toggle("revealed", cell.colorHex !== null);
  });
  const status = root.querySelector<HTMLElement>(".status");
  if (status !== null) {
    status.textContent = view.statusLine;
  }
}
