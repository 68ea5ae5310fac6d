import { describe, expect, it } from "vitest";

import type { LibrarySong, ValidationReport } from "../src/api.js";
import {
  DEFAULT_PARAMS,
  RequestSequencer,
  canPlay,
  canSave,
  cleared,
  displayedCounts,
  initialState,
  withCompiled,
  withReport,
  withSong,
  withText,
} from "../src/state.js";

const okReport: ValidationReport = { ok: true, tune_count: 4, tempo_count: 4, errors: [] };
const mismatchReport: ValidationReport = {
  ok: false,
  tune_count: 3,
  tempo_count: 4,
  errors: [{ error_code: 1, message: "counts differ" }],
};

describe("editor state", () => {
  it("starts empty with play and save disabled", () => {
    const state = initialState();
    expect(state.tuneText).toBe("");
    expect(canPlay(state)).toBe(false);
    expect(canSave(state)).toBe(false);
    expect(displayedCounts(state)).toEqual({ tunes: 0, tempos: 0 });
    expect(state.params).toEqual(DEFAULT_PARAMS);
  });

  it("enables play only after a clean report", () => {
    let state = withText(initialState(), "1, 3, 5, 0", "0, 0, 0, 2");
    expect(canPlay(state)).toBe(false);
    state = withReport(state, okReport);
    expect(canPlay(state)).toBe(true);
    expect(displayedCounts(state)).toEqual({ tunes: 4, tempos: 4 });
  });

  it("keeps play disabled on a mismatch report", () => {
    const state = withReport(initialState(), mismatchReport);
    expect(canPlay(state)).toBe(false);
    expect(displayedCounts(state)).toEqual({ tunes: 3, tempos: 4 });
  });

  it("invalidates the report when text changes", () => {
    let state = withReport(initialState(), okReport);
    state = withText(state, "5", "1");
    expect(state.report).toBeNull();
    expect(canPlay(state)).toBe(false);
  });

  it("loads a library song with its parameters", () => {
    const song: LibrarySong = {
      id: "happy-birthday",
      title: "Happy Birthday",
      tune: "5, 5, 6, 5, 10, 7",
      tempo: "0.5, 0.5, 1, 1, 1, 2",
      params: { ...DEFAULT_PARAMS, speed: 2, instrument: 10 },
    };
    const state = withSong(initialState(), song);
    expect(state.tuneText).toBe(song.tune);
    expect(state.params.speed).toBe(2);
    expect(state.params.instrument).toBe(10);
    expect(state.report).toBeNull();
  });

  it("clear empties both boxes and resets counts", () => {
    let state = withReport(withText(initialState(), "1", "1"), okReport);
    state = cleared(state);
    expect(state.tuneText).toBe("");
    expect(state.tempoText).toBe("");
    expect(displayedCounts(state)).toEqual({ tunes: 0, tempos: 0 });
    expect(state.playback).toBe("stopped");
  });

  it("save becomes available after a compile and survives edits", () => {
    const bytes = new Uint8Array([1, 2, 3]);
    let state = withCompiled(initialState(), bytes);
    expect(canSave(state)).toBe(true);
    state = withText(state, "9", "");
    expect(state.lastCompiled).toBe(bytes); // exact same object: no mutation
  });
});

describe("request sequencer", () => {
  it("marks only the newest ticket as current", () => {
    const sequencer = new RequestSequencer();
    const first = sequencer.next();
    const second = sequencer.next();
    expect(sequencer.isCurrent(first)).toBe(false);
    expect(sequencer.isCurrent(second)).toBe(true);
  });

  it("stale responses are discarded even out of order", () => {
    const sequencer = new RequestSequencer();
    const a = sequencer.next();
    const b = sequencer.next();
    const c = sequencer.next();
    expect(sequencer.isCurrent(a)).toBe(false);
    expect(sequencer.isCurrent(b)).toBe(false);
    expect(sequencer.isCurrent(c)).toBe(true);
  });
});
