"""Standard MIDI File encoder, decoder and hex dump.

Files are chunked: an MThd header (format, track count, division) followed
by one MTrk chunk per track, each a stream of VLQ delta times and events.
Every event carries its own status byte; running status is neither written
nor accepted. The decoder handles the subset this suite writes (note on/off,
program change, control change, end of track) and skips other meta events
by their declared length.
"""

from dataclasses import dataclass

from .errors import (
    BadMagic,
    LengthMismatch,
    MalformedVlq,
    RangeError,
    TruncatedInput,
    UnknownEvent,
)
from .sequencer import (
    ControlChange,
    EndOfTrack,
    MidiEvent,
    NoteOff,
    NoteOn,
    ProgramChange,
)

HEADER_MAGIC = b"MThd"
TRACK_MAGIC = b"MTrk"

VLQ_MAX = 0x0FFFFFFF

_STATUS_NOTE_OFF = 0x80
_STATUS_NOTE_ON = 0x90
_STATUS_CONTROL = 0xB0
_STATUS_PROGRAM = 0xC0
_STATUS_META = 0xFF
_META_END_OF_TRACK = 0x2F


@dataclass(frozen=True)
class SmfHeader:
    format: int
    ntracks: int
    division: int

    def __post_init__(self) -> None:
        if self.format not in (0, 1):
            raise ValueError(f"format must be 0 or 1, got {self.format}")
        if self.ntracks < 1:
            raise ValueError("a file needs at least one track")
        if self.format == 0 and self.ntracks != 1:
            raise ValueError("format 0 holds exactly one track")
        if not 1 <= self.division <= 32767:
            raise ValueError(f"division must be in 1..32767, got {self.division}")


@dataclass(frozen=True)
class SmfFile:
    header: SmfHeader
    tracks: tuple[tuple[MidiEvent, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tracks", tuple(tuple(t) for t in self.tracks))
        if len(self.tracks) != self.header.ntracks:
            raise ValueError(
                f"header says {self.header.ntracks} tracks, got {len(self.tracks)}"
            )


def encode_vlq(n: int) -> bytes:
    """Minimal big-endian 7-bits-per-byte encoding of n, 0..0x0FFFFFFF."""
    if not 0 <= n <= VLQ_MAX:
        raise RangeError(f"VLQ value must be in 0..0x{VLQ_MAX:X}, got {n}")
    out = [n & 0x7F]
    n >>= 7
    while n:
        out.append((n & 0x7F) | 0x80)
        n >>= 7
    return bytes(reversed(out))


def decode_vlq(data: bytes, offset: int = 0) -> tuple[int, int]:
    """Decode one VLQ at offset; returns (value, bytes consumed)."""
    value = 0
    for i in range(4):
        if offset + i >= len(data):
            raise TruncatedInput("byte stream ended inside a VLQ")
        byte = data[offset + i]
        value = (value << 7) | (byte & 0x7F)
        if not byte & 0x80:
            if i > 0 and data[offset] == 0x80:
                raise MalformedVlq("overlong VLQ encoding")
            return value, i + 1
    raise MalformedVlq("VLQ runs past 4 bytes")


def encode_event(event: MidiEvent) -> bytes:
    """Event bytes without the delta-time prefix."""
    if isinstance(event, NoteOn):
        return bytes((_STATUS_NOTE_ON | event.channel, event.note, event.velocity))
    if isinstance(event, NoteOff):
        return bytes((_STATUS_NOTE_OFF | event.channel, event.note, event.velocity))
    if isinstance(event, ProgramChange):
        return bytes((_STATUS_PROGRAM | event.channel, event.program))
    if isinstance(event, ControlChange):
        return bytes((_STATUS_CONTROL | event.channel, event.controller, event.value))
    if isinstance(event, EndOfTrack):
        return bytes((_STATUS_META, _META_END_OF_TRACK, 0x00))
    raise TypeError(f"cannot encode {event!r}")


def encode_track(events) -> bytes:
    body = bytearray()
    for event in events:
        body.extend(encode_vlq(event.delta))
        body.extend(encode_event(event))
    return TRACK_MAGIC + len(body).to_bytes(4, "big") + bytes(body)


def write_smf(file: SmfFile) -> bytes:
    """Serialize to bytes; chunk length fields are computed, never trusted."""
    header = file.header
    out = bytearray(HEADER_MAGIC)
    out.extend((6).to_bytes(4, "big"))
    out.extend(header.format.to_bytes(2, "big"))
    out.extend(header.ntracks.to_bytes(2, "big"))
    out.extend(header.division.to_bytes(2, "big"))
    for events in file.tracks:
        out.extend(encode_track(events))
    return bytes(out)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int, what: str) -> bytes:
        if self.pos + n > len(self.data):
            raise TruncatedInput(f"byte stream ended inside {what}")
        chunk = self.data[self.pos : self.pos + n]
        self.pos += n
        return chunk

    def take_int(self, n: int, what: str) -> int:
        return int.from_bytes(self.take(n, what), "big")

    def take_vlq(self) -> int:
        value, consumed = decode_vlq(self.data, self.pos)
        self.pos += consumed
        return value


def _read_track_events(reader: _Reader, length: int) -> tuple[MidiEvent, ...]:
    end = reader.pos + length
    if end > len(reader.data):
        raise TruncatedInput("track chunk shorter than its length field")
    events: list[MidiEvent] = []
    carried_delta = 0  # deltas of skipped meta events roll into the next event
    while True:
        if reader.pos >= end:
            raise LengthMismatch("track length exhausted before end-of-track")
        delta = carried_delta + reader.take_vlq()
        carried_delta = 0
        offset = reader.pos
        status = reader.take(1, "an event status byte")[0]
        kind = status & 0xF0
        channel = status & 0x0F
        if status == _STATUS_META:
            meta_type = reader.take(1, "a meta event type")[0]
            meta_len = reader.take_vlq()
            payload = reader.take(meta_len, "a meta event payload")
            if meta_type == _META_END_OF_TRACK:
                if payload:
                    raise LengthMismatch("end-of-track carries no payload")
                events.append(EndOfTrack(delta))
                break
            carried_delta = delta  # foreign meta event: skip, keep its time
        elif kind == _STATUS_NOTE_ON:
            note, velocity = reader.take(2, "a note-on event")
            events.append(NoteOn(delta, channel, note, velocity))
        elif kind == _STATUS_NOTE_OFF:
            note, velocity = reader.take(2, "a note-off event")
            events.append(NoteOff(delta, channel, note, velocity))
        elif kind == _STATUS_PROGRAM:
            program = reader.take(1, "a program-change event")[0]
            events.append(ProgramChange(delta, channel, program))
        elif kind == _STATUS_CONTROL:
            controller, value = reader.take(2, "a control-change event")
            events.append(ControlChange(delta, channel, controller, value))
        else:
            raise UnknownEvent(status, offset)
    if reader.pos != end:
        raise LengthMismatch(
            f"track declared {length} bytes but events span {reader.pos - (end - length)}"
        )
    return tuple(events)


def read_smf(data: bytes) -> SmfFile:
    """Parse bytes produced by write_smf (or an equivalent subset)."""
    reader = _Reader(data)
    if reader.take(4, "the file header") != HEADER_MAGIC:
        raise BadMagic("not a MIDI file: missing MThd")
    if reader.take_int(4, "the header length") != 6:
        raise LengthMismatch("MThd length field must be 6")
    fmt = reader.take_int(2, "the format field")
    ntracks = reader.take_int(2, "the track count")
    division = reader.take_int(2, "the division field")
    tracks = []
    for _ in range(ntracks):
        if reader.take(4, "a track header") != TRACK_MAGIC:
            raise BadMagic("expected an MTrk chunk")
        length = reader.take_int(4, "a track length")
        tracks.append(_read_track_events(reader, length))
    if reader.pos != len(data):
        raise LengthMismatch(f"{len(data) - reader.pos} trailing bytes after last track")
    return SmfFile(SmfHeader(fmt, ntracks, division), tuple(tracks))


def hex_dump(data: bytes) -> str:
    """Uppercase hex, 16 space-separated bytes per row."""
    return "\n".join(
        " ".join(f"{byte:02X}" for byte in data[i : i + 16])
        for i in range(0, len(data), 16)
    )
