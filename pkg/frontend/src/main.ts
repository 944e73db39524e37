/**
 * Entry point: a join form (session, name, role), then either the player
 * grid or the shared display, wired socket -> reducer -> render + audio.
 * The join is kept in sessionStorage so a reload rejoins the same slot.
 */

import { CuePlayer } from "./audio.js";
import { renderController } from "./controller.js";
import { renderDisplay } from "./display.js";
import { GameSocket } from "./socket.js";
import {
  apply,
  clearJoin,
  initialState,
  restoreJoin,
  saveJoin,
  setConnection,
  type ClientState,
  type JoinArgs,
} from "./state.js";

function wsUrl(): string {
  const scheme = location.protocol === "https:" ? "wss" : "ws";
  return `${scheme}://${location.host}/ws`;
}

function start(root: HTMLElement, args: JoinArgs): void {
  let state: ClientState = initialState(args.role);
  const player = new CuePlayer();
  void player.init();

  const rerender = (): void => {
    if (args.role === "display") {
      renderDisplay(root, state);
    } else {
      renderController(root, state, (region) => socket.press(region));
    }
    const muteButton = document.querySelector<HTMLButtonElement>("#mute");
    if (muteButton !== null) {
      muteButton.textContent = state.muted ? "unmute" : "mute";
      muteButton.hidden = args.role !== "controller";
    }
  };

  const socket = new GameSocket(wsUrl(), {
    onStatus: (status) => {
      state = setConnection(state, status);
      rerender();
    },
    onFrame: (frame) => {
      state = apply(state, frame);
      player.setMuted(state.muted);
      if (frame.type === "press_result" && frame.audio_cue !== undefined) {
        void player.playCue(frame.audio_cue);
      } else if (frame.type === "level_advanced" && state.layerId !== null) {
        void player.playLoop(state.layerId, frame.loop_segment_indices);
      } else if (frame.type === "game_complete" && state.loop.length > 0) {
        void player.playCompletionMix(state.loop);
      }
      rerender();
    },
  });
  socket.join(args.sessionId, args.name, args.role);

  document.querySelector<HTMLButtonElement>("#mute")?.addEventListener("click", () => {
    socket.setMuted(!state.muted);
  });
  document.querySelector<HTMLButtonElement>("#leave")?.addEventListener("click", () => {
    socket.leave();
    socket.close();
    clearJoin(sessionStorage);
    location.reload();
  });
  rerender();
}

function showJoinForm(root: HTMLElement): void {
  const form = document.createElement("form");
  form.className = "join-form";
  form.innerHTML = `
    <label>session <input name="session" value="demo" required></label>
    <label>name <input name="name" required></label>
    <label>role
      <select name="role">
        <option value="controller">controller</option>
        <option value="display">display</option>
      </select>
    </label>
    <button type="submit">join</button>
  `;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const data = new FormData(form);
    const args: JoinArgs = {
      sessionId: String(data.get("session") ?? "demo"),
      name: String(data.get("name") ?? ""),
      role: data.get("role") === "display" ? "display" : "controller",
    };
    if (args.name === "") {
      return;
    }
    saveJoin(sessionStorage, args);
    root.textContent = "";
    start(root, args);
  });
  root.textContent = "";
  root.appendChild(form);
}

window.addEventListener("load", () => {
  const root = document.querySelector<HTMLElement>("#app");
  if (root === null) {
    return;
  }
  const saved = restoreJoin(sessionStorage);
  if (saved !== null) {
    start(root, saved);
  } else {
    showJoinForm(root);
  }
});
