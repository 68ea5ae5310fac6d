// Standalone Standard MIDI File reader for the subset the service emits:
// note on/off, program change, control change and end-of-track, one status
// byte per event (no running status). Deliberately independent of the
// backend so the downloaded bytes are verified by a second implementation.

export interface SmfHeader {
  format: number;
  ntracks: number;
  division: number;
}

export type SmfEvent =
  | { kind: "noteOn"; delta: number; channel: number; note: number; velocity: number }
  | { kind: "noteOff"; delta: number; channel: number; note: number; velocity: number }
  | { kind: "programChange"; delta: number; channel: number; program: number }
  | { kind: "controlChange"; delta: number; channel: number; controller: number; value: number }
  | { kind: "endOfTrack"; delta: number };

export interface SmfFile {
  header: SmfHeader;
  tracks: SmfEvent[][];
}

export const ALL_NOTES_OFF = 123;

export class SmfDecodeError extends Error {
  constructor(
    message: string,
    readonly offset: number,
  ) {
    super(`${message} (offset ${offset})`);
  }
}

class Reader {
  pos = 0;

  constructor(private readonly data: Uint8Array) {}

  get atEnd(): boolean {
    return this.pos >= this.data.length;
  }

  byte(): number {
    const value = this.data[this.pos];
    if (value === undefined) throw new SmfDecodeError("unexpected end of data", this.pos);
    this.pos += 1;
    return value;
  }

  int(width: number): number {
    let value = 0;
    for (let i = 0; i < width; i++) value = value * 256 + this.byte();
    return value;
  }

  ascii(length: number): string {
    let text = "";
    for (let i = 0; i < length; i++) text += String.fromCharCode(this.byte());
    return text;
  }

  vlq(): number {
    let value = 0;
    for (let i = 0; i < 4; i++) {
      const byte = this.byte();
      value = (value << 7) | (byte & 0x7f);
      if ((byte & 0x80) === 0) return value;
    }
    throw new SmfDecodeError("variable-length quantity too long", this.pos);
  }
}

function readTrack(reader: Reader, length: number): SmfEvent[] {
  const end = reader.pos + length;
  const events: SmfEvent[] = [];
  let carried = 0; // time from skipped meta events
  while (reader.pos < end) {
    const delta = carried + reader.vlq();
    carried = 0;
    const statusOffset = reader.pos;
    const status = reader.byte();
    const channel = status & 0x0f;
    switch (status & 0xf0) {
      case 0x90:
        events.push({ kind: "noteOn", delta, channel, note: reader.byte(), velocity: reader.byte() });
        continue;
      case 0x80:
        events.push({ kind: "noteOff", delta, channel, note: reader.byte(), velocity: reader.byte() });
        continue;
      case 0xc0:
        events.push({ kind: "programChange", delta, channel, program: reader.byte() });
        continue;
      case 0xb0:
        events.push({ kind: "controlChange", delta, channel, controller: reader.byte(), value: reader.byte() });
        continue;
    }
    if (status === 0xff) {
      const metaType = reader.byte();
      const metaLength = reader.vlq();
      reader.pos += metaLength;
      if (metaType === 0x2f) {
        events.push({ kind: "endOfTrack", delta });
        if (reader.pos !== end) throw new SmfDecodeError("track length mismatch", reader.pos);
        return events;
      }
      carried = delta; // skip foreign meta, keep its time
      continue;
    }
    throw new SmfDecodeError(`unsupported event status 0x${status.toString(16)}`, statusOffset);
  }
  throw new SmfDecodeError("track ended without end-of-track", reader.pos);
}

export function readSmf(data: Uint8Array): SmfFile {
  const reader = new Reader(data);
  if (reader.ascii(4) !== "MThd") throw new SmfDecodeError("not a MIDI file", 0);
  if (reader.int(4) !== 6) throw new SmfDecodeError("bad header length", 4);
  const header: SmfHeader = {
    format: reader.int(2),
    ntracks: reader.int(2),
    division: reader.int(2),
  };
  const tracks: SmfEvent[][] = [];
  for (let i = 0; i < header.ntracks; i++) {
    if (reader.ascii(4) !== "MTrk") throw new SmfDecodeError("expected a track chunk", reader.pos - 4);
    tracks.push(readTrack(reader, reader.int(4)));
  }
  if (!reader.atEnd) throw new SmfDecodeError("trailing bytes after last track", reader.pos);
  return { header, tracks };
}

export interface ScheduledNote {
  channel: number;
  note: number;
  velocity: number;
  program: number;
  startTick: number;
  endTick: number;
}

/**
 * Flatten the file into absolutely-timed notes. Struck notes ring until the
 * next All-Notes-Off on their channel (or the tick span's end) — the file
 * format's only note-ending mechanism in its default mode — and NoteOff or
 * zero-velocity NoteOn ends a note early when present.
 */
export function scheduleNotes(file: SmfFile): { notes: ScheduledNote[]; totalTicks: number } {
  const notes: ScheduledNote[] = [];
  let totalTicks = 0;

  for (const track of file.tracks) {
    let tick = 0;
    let program = 0;
    const ringing = new Map<number, ScheduledNote>();

    const endNote = (note: number, atTick: number) => {
      const voice = ringing.get(note);
      if (voice) {
        voice.endTick = atTick;
        ringing.delete(note);
      }
    };

    for (const event of track) {
      tick += event.delta;
      switch (event.kind) {
        case "programChange":
          program = event.program;
          break;
        case "noteOn":
          if (event.velocity === 0) {
            endNote(event.note, tick);
            break;
          }
          endNote(event.note, tick); // restrike replaces the ringing voice
          {
            const voice: ScheduledNote = {
              channel: event.channel,
              note: event.note,
              velocity: event.velocity,
              program,
              startTick: tick,
              endTick: -1,
            };
            ringing.set(event.note, voice);
            notes.push(voice);
          }
          break;
        case "noteOff":
          endNote(event.note, tick);
          break;
        case "controlChange":
          if (event.controller === ALL_NOTES_OFF) {
            for (const voice of ringing.values()) voice.endTick = tick;
            ringing.clear();
          }
          break;
        case "endOfTrack":
          break;
      }
    }
    for (const voice of ringing.values()) voice.endTick = tick;
    totalTicks = Math.max(totalTicks, tick);
  }

  notes.sort((a, b) => a.startTick - b.startTick);
  return { notes, totalTicks };
}

/** Seconds per tick at the MIDI default tempo of 120 beats per minute. */
export function secondsPerTick(division: number): number {
  return 0.5 / Math.max(division, 1);
}
