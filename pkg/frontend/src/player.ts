// Web Audio playback of a decoded file. Fidelity is best-effort voice
// synthesis (oscillator per melody note, noise/thump percussion); the
// byte-exactness contract applies to the downloaded file, not the audio.

import { readSmf, scheduleNotes, secondsPerTick, type ScheduledNote } from "./smf.js";

type Waveform = OscillatorType;

// rough GM family -> oscillator shape
function waveformFor(program: number): Waveform {
  if (program < 8) return "triangle"; // pianos
  if (program < 16) return "sine"; // chromatic percussion
  if (program < 24) return "sine"; // organs
  if (program < 40) return "triangle"; // guitars, basses
  if (program < 56) return "sawtooth"; // strings, ensemble
  if (program < 72) return "sawtooth"; // brass, reeds
  if (program < 80) return "sine"; // pipes
  return "square"; // synth leads and everything after
}

function noteFrequency(note: number): number {
  return 440 * Math.pow(2, (note - 69) / 12);
}

export class Player {
  private context: AudioContext | null = null;
  private active: { stop(): void }[] = [];
  private endTimer: ReturnType<typeof setTimeout> | null = null;
  private generation = 0;

  constructor(private readonly onFinished: () => void) {}

  private ensureContext(): AudioContext {
    if (!this.context) {
      this.context = new AudioContext();
    }
    return this.context;
  }

  get playing(): boolean {
    return this.active.length > 0 || this.endTimer !== null;
  }

  /** Decode and schedule the whole file; loop restarts it on completion. */
  play(bytes: Uint8Array, loop: boolean): void {
    this.stop();
    const generation = this.generation;
    const context = this.ensureContext();
    if (context.state === "suspended") void context.resume();

    const file = readSmf(bytes);
    const { notes, totalTicks } = scheduleNotes(file);
    const perTick = secondsPerTick(file.header.division);
    const origin = context.currentTime + 0.05;

    for (const note of notes) {
      const start = origin + note.startTick * perTick;
      const stop = origin + Math.max(note.endTick, note.startTick) * perTick;
      if (note.channel === 9) {
        this.active.push(percussionVoice(context, note, start));
      } else {
        this.active.push(melodyVoice(context, note, start, Math.max(stop, start + 0.05)));
      }
    }

    const endSeconds = (totalTicks * perTick + 0.1) * 1000;
    this.endTimer = setTimeout(() => {
      this.endTimer = null;
      if (this.generation !== generation) return;
      this.active = [];
      if (loop) {
        this.play(bytes, true);
      } else {
        this.onFinished();
      }
    }, endSeconds);
  }

  /** Local All-Notes-Off: silence every voice and cancel the replay timer. */
  stop(): void {
    this.generation += 1;
    if (this.endTimer !== null) {
      clearTimeout(this.endTimer);
      this.endTimer = null;
    }
    for (const voice of this.active) voice.stop();
    this.active = [];
  }
}

function melodyVoice(
  context: AudioContext,
  note: ScheduledNote,
  start: number,
  stop: number,
): { stop(): void } {
  const oscillator = context.createOscillator();
  const gain = context.createGain();
  const level = (note.velocity / 127) * 0.22;

  oscillator.type = waveformFor(note.program);
  oscillator.frequency.value = noteFrequency(note.note);
  gain.gain.setValueAtTime(0, start);
  gain.gain.linearRampToValueAtTime(level, start + 0.01);
  gain.gain.setValueAtTime(level, Math.max(stop - 0.03, start + 0.01));
  gain.gain.linearRampToValueAtTime(0, stop);

  oscillator.connect(gain).connect(context.destination);
  oscillator.start(start);
  oscillator.stop(stop + 0.01);
  return {
    stop() {
      try {
        oscillator.stop();
      } catch {
        // already ended
      }
    },
  };
}

function percussionVoice(
  context: AudioContext,
  note: ScheduledNote,
  start: number,
): { stop(): void } {
  const level = (note.velocity / 127) * 0.3;
  if (note.note === 35 || note.note === 36) {
    // kick: short pitched-down sine thump
    const oscillator = context.createOscillator();
    const gain = context.createGain();
    oscillator.type = "sine";
    oscillator.frequency.setValueAtTime(120, start);
    oscillator.frequency.exponentialRampToValueAtTime(45, start + 0.12);
    gain.gain.setValueAtTime(level, start);
    gain.gain.exponentialRampToValueAtTime(0.001, start + 0.15);
    oscillator.connect(gain).connect(context.destination);
    oscillator.start(start);
    oscillator.stop(start + 0.16);
    return { stop: () => oscillator.stop() };
  }

  // snare / hats / blocks: filtered noise burst
  const length = note.note === 38 ? 0.12 : 0.05;
  const buffer = context.createBuffer(1, Math.ceil(context.sampleRate * length), context.sampleRate);
  const samples = buffer.getChannelData(0);
  for (let i = 0; i < samples.length; i++) {
    samples[i] = (Math.random() * 2 - 1) * (1 - i / samples.length);
  }
  const source = context.createBufferSource();
  const filter = context.createBiquadFilter();
  const gain = context.createGain();
  source.buffer = buffer;
  filter.type = "highpass";
  filter.frequency.value = note.note === 38 ? 1200 : 4500;
  gain.gain.value = level;
  source.connect(filter).connect(gain).connect(context.destination);
  source.start(start);
  return { stop: () => source.stop() };
}
