// Editor state and the pure transition logic behind the widgets. Kept free
// of DOM and network so it can be unit-tested directly.

import type { CompileParams, LibrarySong, ValidationReport } from "./api.js";

export type PlaybackStatus = "stopped" | "playing" | "looping";

export interface EditorState {
  tuneText: string;
  tempoText: string;
  params: CompileParams;
  report: ValidationReport | null;
  lastCompiled: Uint8Array | null;
  playback: PlaybackStatus;
}

export const DEFAULT_PARAMS: CompileParams = {
  speed: 3,
  tune_volume: 10,
  rhythm_volume: 10,
  instrument: 0,
  scale: "C",
  rhythm: "NONE",
  repeat: 1,
};

export function initialState(): EditorState {
  return {
    tuneText: "",
    tempoText: "",
    params: { ...DEFAULT_PARAMS },
    report: null,
    lastCompiled: null,
    playback: "stopped",
  };
}

export function withText(state: EditorState, tuneText: string, tempoText: string): EditorState {
  // edits invalidate the previous validation report until the next round trip
  return { ...state, tuneText, tempoText, report: null };
}

export function withReport(state: EditorState, report: ValidationReport): EditorState {
  return { ...state, report };
}

export function withSong(state: EditorState, song: LibrarySong): EditorState {
  return {
    ...state,
    tuneText: song.tune,
    tempoText: song.tempo,
    params: { ...song.params },
    report: null,
  };
}

export function cleared(state: EditorState): EditorState {
  return { ...state, tuneText: "", tempoText: "", report: null, playback: "stopped" };
}

export function withCompiled(state: EditorState, bytes: Uint8Array): EditorState {
  return { ...state, lastCompiled: bytes };
}

export function withPlayback(state: EditorState, playback: PlaybackStatus): EditorState {
  return { ...state, playback };
}

/** PLAY is enabled only once the current text validated cleanly. */
export function canPlay(state: EditorState): boolean {
  return state.report !== null && state.report.ok;
}

/** SAVE is enabled once something compiled; the bytes download unmodified. */
export function canSave(state: EditorState): boolean {
  return state.lastCompiled !== null;
}

export function displayedCounts(state: EditorState): { tunes: number; tempos: number } {
  if (state.report === null) return { tunes: 0, tempos: 0 };
  return { tunes: state.report.tune_count, tempos: state.report.tempo_count };
}

/**
 * Monotonic ticket counter: only the most recently issued request may apply
 * its response, so a slow validation cannot overwrite a newer one.
 */
export class RequestSequencer {
  private issued = 0;

  next(): number {
    this.issued += 1;
    return this.issued;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.issued;
  }
}
