import { describe, expect, it } from "vitest";

import { controllerView, statusLine } from "../src/controller.js";
import { displayView } from "../src/display.js";
import { decodeServerFrame, type ServerFrame } from "../src/protocol.js";
import { apply, initialState, setConnection, type ClientState } from "../src/state.js";
import fixture from "./fixtures/session_frames.json";

function stateFrame(matched: [boolean, boolean, boolean], presses: [number, number, number]): ServerFrame {
  const players = ["ana", "ben", "cho"].map((name, i) => ({
    player_id: i,
    name,
    matched: matched[i],
    presses_this_level: presses[i],
  }));
  return decodeServerFrame(
    JSON.stringify({
      type: "state",
      phase: "active",
      level: 3,
      reference_color_hex: "#2EE6E6",
      players,
      unlocked: 2,
      muted: false,
    }),
  );
}

function activeState(matched: [boolean, boolean, boolean]): ClientState {
  let state = initialState("controller");
  state = setConnection(state, "open");
  state = apply(state, { type: "joined", player_id: 0, layer_id: "harmony1" });
  return apply(state, stateFrame(matched, [2, 5, 1]));
}

describe("controllerView", () => {
  it("renders 16 pressable covered cells during an active level", () => {
    const view = controllerView(activeState([false, false, false]));
    expect(view.cells).toHaveLength(16);
    expect(view.cells.every((c) => c.colorHex === null)).toBe(true);
    expect(view.cells.every((c) => c.pressable)).toBe(true);
    expect(view.referenceColorHex).toBe("#2EE6E6");
    expect(view.statusLine).toBe("level 3 of 16 - find the reference color");
  });

  it("paints revealed cells and locks the grid once matched", () => {
    let state = activeState([false, false, false]);
    state = apply(state, {
      type: "press_result",
      player_id: 0,
      region: 7,
      color_hex: "#E62E2E",
      matched: false,
    });
    let view = controllerView(state);
    expect(view.cells[7]?.colorHex).toBe("#E62E2E");
    expect(view.cells[6]?.colorHex).toBeNull();

    state = apply(state, stateFrame([true, false, false], [3, 5, 1]));
    view = controllerView(state);
    expect(view.matched).toBe(true);
    expect(view.cells.every((c) => !c.pressable)).toBe(true);
    expect(view.statusLine).toBe("matched! waiting for 2 players");
  });

  it("announces one remaining player in the singular", () => {
    const state = activeState([true, true, false]);
    expect(statusLine(state)).toBe("matched! waiting for 1 player");
  });

  it("disables pressing while disconnected, pairing, or complete", () => {
    const pairing = initialState("controller");
    expect(controllerView(pairing).cells.every((c) => !c.pressable)).toBe(true);

    const dropped = setConnection(activeState([false, false, false]), "closed");
    expect(controllerView(dropped).cells.every((c) => !c.pressable)).toBe(true);
    expect(controllerView(dropped).statusLine).toBe("connection lost, retrying...");
  });

  it("plays the whole recorded game without an inconsistent view", () => {
    let state = initialState("controller");
    state = setConnection(state, "open");
    for (const raw of fixture.frames["1"]) {
      state = apply(state, decodeServerFrame(raw));
      const view = controllerView(state);
      if (view.matched) {
        expect(view.cells.every((c) => !c.pressable)).toBe(true);
      }
    }
    expect(controllerView(state).statusLine).toBe("song complete! 96 presses in total");
  });
});

describe("displayView", () => {
  it("shows matched badges and who is still searching", () => {
    const view = displayView(activeState([true, true, false]));
    expect(view.badges).toEqual([
      { name: "ana", matched: true, presses: 2 },
      { name: "ben", matched: true, presses: 5 },
      { name: "cho", matched: false, presses: 1 },
    ]);
    expect(view.waiting).toBe(1);
    expect(view.headline).toBe("level 3 of 16 - 1 still searching");
  });

  it("walks pairing -> active -> complete through the recorded display frames", () => {
    let state = initialState("display");
    state = setConnection(state, "open");
    const headlines: string[] = [];
    for (const raw of fixture.frames["4"]) {
      state = apply(state, decodeServerFrame(raw));
      headlines.push(displayView(state).headline);
    }
    expect(headlines[0]).toBe("level 3 of 16 - 3 still searching");
    expect(headlines.at(-1)).toBe("song complete!");
    expect(displayView(state).badges.every((b) => b.matched)).toBe(true);
  });

  it("marks the headline while the session is muted", () => {
    let state = activeState([false, false, false]);
    state = apply(state, decodeServerFrame(
      '{"type":"state","phase":"active","level":5,"reference_color_hex":"#E62E2E",' +
        '"players":[{"player_id":0,"name":"ana","matched":false,"presses_this_level":0}],' +
        '"unlocked":4,"muted":true}',
    ));
    expect(displayView(state).muted).toBe(true);
  });
});
