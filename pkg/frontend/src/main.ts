// DOM wiring for the three-section editor: editing (tune/tempo boxes with
// live counts), adjusting (parameter widgets), operating (play/stop/clear,
// library menu, save).

import {
  CompileError,
  compile,
  librarySong,
  librarySongs,
  metaTables,
  validate,
  type CompileRequest,
} from "./api.js";
import { DEFAULT_FILENAME, saveBytes } from "./download.js";
import { Player } from "./player.js";
import {
  RequestSequencer,
  canPlay,
  canSave,
  cleared,
  displayedCounts,
  initialState,
  withCompiled,
  withPlayback,
  withReport,
  withSong,
  withText,
  type EditorState,
} from "./state.js";

const VALIDATE_DEBOUNCE_MS = 250;

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const tuneBox = element<HTMLTextAreaElement>("tune");
const tempoBox = element<HTMLTextAreaElement>("tempo");
const tuneCount = element<HTMLSpanElement>("tune-count");
const tempoCount = element<HTMLSpanElement>("tempo-count");
const validationNote = element<HTMLDivElement>("validation-note");

const speedInput = element<HTMLInputElement>("speed");
const volumeInput = element<HTMLInputElement>("volume");
const rhythmVolumeInput = element<HTMLInputElement>("rhythm-volume");
const speedValue = element<HTMLSpanElement>("speed-value");
const volumeValue = element<HTMLSpanElement>("volume-value");
const rhythmVolumeValue = element<HTMLSpanElement>("rhythm-volume-value");
const instrumentSelect = element<HTMLSelectElement>("instrument");
const scaleSelect = element<HTMLSelectElement>("scale");
const rhythmSelect = element<HTMLSelectElement>("rhythm");
const repeatInput = element<HTMLInputElement>("repeat");
const loopToggle = element<HTMLInputElement>("loop");

const playButton = element<HTMLButtonElement>("play");
const stopButton = element<HTMLButtonElement>("stop");
const clearButton = element<HTMLButtonElement>("clear");
const saveButton = element<HTMLButtonElement>("save");
const librarySelect = element<HTMLSelectElement>("library");
const statusLine = element<HTMLDivElement>("status");

const errorDialog = element<HTMLDialogElement>("error-dialog");
const errorTitle = element<HTMLHeadingElement>("error-title");
const errorMessage = element<HTMLParagraphElement>("error-message");

let state: EditorState = initialState();
const validations = new RequestSequencer();
const player = new Player(() => {
  state = withPlayback(state, "stopped");
  render();
});

function setState(next: EditorState): void {
  state = next;
  render();
}

function render(): void {
  const counts = displayedCounts(state);
  tuneCount.textContent = String(counts.tunes);
  tempoCount.textContent = String(counts.tempos);

  playButton.disabled = !canPlay(state) || state.playback !== "stopped";
  stopButton.disabled = state.playback === "stopped";
  saveButton.disabled = !canSave(state);

  if (state.report && !state.report.ok) {
    const first = state.report.errors[0];
    validationNote.textContent = first ? first.message : "";
    validationNote.classList.add("error");
  } else {
    validationNote.textContent = "";
    validationNote.classList.remove("error");
  }

  statusLine.textContent =
    state.playback === "stopped" ? "stopped" : state.playback === "looping" ? "playing (loop)" : "playing";

  speedValue.textContent = speedInput.value;
  volumeValue.textContent = volumeInput.value;
  rhythmVolumeValue.textContent = rhythmVolumeInput.value;
}

function showErrorDialog(code: number, message: string): void {
  errorTitle.textContent = code === 1 ? "Error 1" : code === 2 ? "Error 2" : "Error";
  errorMessage.textContent = message;
  errorDialog.showModal();
}

function scheduleValidation(): void {
  const ticket = validations.next();
  window.setTimeout(async () => {
    if (!validations.isCurrent(ticket)) return;
    try {
      const report = await validate(tuneBox.value, tempoBox.value);
      if (!validations.isCurrent(ticket)) return; // a newer edit is in flight
      setState(withReport(state, report));
    } catch (error) {
      validationNote.textContent = `service unreachable: ${String(error)}`;
      validationNote.classList.add("error");
    }
  }, VALIDATE_DEBOUNCE_MS);
}

function onEdit(): void {
  setState(withText(state, tuneBox.value, tempoBox.value));
  scheduleValidation();
}

function currentRequest(): CompileRequest {
  return {
    tune: tuneBox.value,
    tempo: tempoBox.value,
    speed: Number(speedInput.value),
    tune_volume: Number(volumeInput.value),
    rhythm_volume: Number(rhythmVolumeInput.value),
    instrument: Number(instrumentSelect.value),
    scale: scaleSelect.value,
    rhythm: rhythmSelect.value,
    repeat: Math.max(1, Number(repeatInput.value) || 1),
  };
}

async function onPlay(): Promise<void> {
  try {
    const result = await compile(currentRequest());
    setState(withCompiled(state, result.bytes));
    const loop = loopToggle.checked;
    player.play(result.bytes, loop);
    setState(withPlayback(state, loop ? "looping" : "playing"));
  } catch (error) {
    if (error instanceof CompileError) {
      showErrorDialog(error.errorCode, error.message);
    } else {
      showErrorDialog(0, String(error));
    }
  }
}

function onStop(): void {
  player.stop();
  setState(withPlayback(state, "stopped"));
}

function onClear(): void {
  player.stop();
  tuneBox.value = "";
  tempoBox.value = "";
  setState(cleared(state));
  scheduleValidation();
}

function onSave(): void {
  if (state.lastCompiled) saveBytes(state.lastCompiled, DEFAULT_FILENAME);
}

async function onLibraryPick(): Promise<void> {
  const id = librarySelect.value;
  if (!id) return;
  try {
    const song = await librarySong(id);
    tuneBox.value = song.tune;
    tempoBox.value = song.tempo;
    speedInput.value = String(song.params.speed);
    volumeInput.value = String(song.params.tune_volume);
    rhythmVolumeInput.value = String(song.params.rhythm_volume);
    instrumentSelect.value = String(song.params.instrument);
    scaleSelect.value = song.params.scale;
    rhythmSelect.value = song.params.rhythm;
    repeatInput.value = String(song.params.repeat);
    setState(withSong(state, song));
    scheduleValidation();
  } catch (error) {
    showErrorDialog(0, String(error));
  }
}

async function bootstrap(): Promise<void> {
  try {
    const meta = await metaTables();
    meta.instruments.forEach((name, program) => {
      const option = document.createElement("option");
      option.value = String(program);
      option.textContent = `${program} ${name}`;
      instrumentSelect.appendChild(option);
    });
    for (const scale of meta.scales) {
      const option = document.createElement("option");
      option.value = scale;
      option.textContent = scale;
      scaleSelect.appendChild(option);
    }
    for (const rhythm of meta.rhythms) {
      const option = document.createElement("option");
      option.value = rhythm;
      option.textContent = rhythm;
      rhythmSelect.appendChild(option);
    }

    const placeholder = document.createElement("option");
    placeholder.value = "";
    placeholder.textContent = "Library…";
    librarySelect.appendChild(placeholder);
    for (const entry of await librarySongs()) {
      const option = document.createElement("option");
      option.value = entry.id;
      option.textContent = entry.title;
      librarySelect.appendChild(option);
    }
  } catch (error) {
    validationNote.textContent =
      `cannot reach the compile service (${String(error)}); start it with: nmnc-serve`;
    validationNote.classList.add("error");
  }

  tuneBox.addEventListener("input", onEdit);
  tempoBox.addEventListener("input", onEdit);
  for (const input of [speedInput, volumeInput, rhythmVolumeInput]) {
    input.addEventListener("input", render);
  }
  playButton.addEventListener("click", () => void onPlay());
  stopButton.addEventListener("click", onStop);
  clearButton.addEventListener("click", onClear);
  saveButton.addEventListener("click", onSave);
  librarySelect.addEventListener("change", () => void onLibraryPick());
  element<HTMLButtonElement>("error-close").addEventListener("click", () => errorDialog.close());

  render();
}

document.addEventListener("DOMContentLoaded", () => void bootstrap());
