"""Compile a validated melody and parameter set into a timed MIDI event stream.

Time is counted in ticks at a fixed 4 ticks per beat; playback rate is set
separately through the file header's division field. Notes are struck with
NoteOn only and ring until the closing All-Notes-Off controller message, so
a chord is written as a run of zero-beat notes ending in a rest (or any
nonzero-beat token) that supplies the sounding time.
"""

import enum
import warnings
from dataclasses import dataclass
from typing import Union

from .errors import QuantizationWarning, RangeError
from .nmn import Melody
from .pitch import SCALE_C, MajorScale, map_note

TICKS_PER_BEAT = 4

ALL_NOTES_OFF = 123  # controller number


class RhythmStyle(enum.Enum):
    NONE = "NONE"
    WALTZ = "Waltz"
    ROCK = "Rock"
    DISCO = "Disco"
    RUMBA = "Rumba"

    @classmethod
    def by_name(cls, name: str) -> "RhythmStyle":
        for style in cls:
            if style.value.lower() == name.strip().lower():
                return style
        raise ValueError(f"unknown rhythm {name!r} "
                         f"(choose from {', '.join(s.value for s in cls)})")


def _check_range(name: str, value: int, lo: int, hi: int) -> int:
    if not isinstance(value, int) or not lo <= value <= hi:
        raise RangeError(f"{name} must be an integer in {lo}..{hi}, got {value!r}")
    return value


def _check_event(event, **data_fields) -> None:
    if event.delta < 0:
        raise ValueError("delta ticks must be non-negative")
    if not 0 <= getattr(event, "channel", 0) <= 15:
        raise ValueError(f"channel {event.channel} not in 0..15")
    for name, value in data_fields.items():
        if not 0 <= value <= 127:
            raise ValueError(f"{name} {value} not in 0..127")


@dataclass(frozen=True)
class NoteOn:
    delta: int
    channel: int
    note: int
    velocity: int

    def __post_init__(self) -> None:
        _check_event(self, note=self.note, velocity=self.velocity)


@dataclass(frozen=True)
class NoteOff:
    delta: int
    channel: int
    note: int
    velocity: int

    def __post_init__(self) -> None:
        _check_event(self, note=self.note, velocity=self.velocity)


@dataclass(frozen=True)
class ProgramChange:
    delta: int
    channel: int
    program: int

    def __post_init__(self) -> None:
        _check_event(self, program=self.program)


@dataclass(frozen=True)
class ControlChange:
    delta: int
    channel: int
    controller: int
    value: int

    def __post_init__(self) -> None:
        _check_event(self, controller=self.controller, value=self.value)


@dataclass(frozen=True)
class EndOfTrack:
    delta: int

    def __post_init__(self) -> None:
        _check_event(self)


MidiEvent = Union[NoteOn, NoteOff, ProgramChange, ControlChange, EndOfTrack]


@dataclass(frozen=True)
class ParamSet:
    """The nine performance parameters; defaults regenerate the golden file."""

    speed: int = 3
    tune_volume: int = 10
    rhythm_volume: int = 10
    instrument: int = 0
    scale: MajorScale = SCALE_C
    rhythm: RhythmStyle = RhythmStyle.NONE
    repeat: int = 1

    def __post_init__(self) -> None:
        _check_range("speed", self.speed, 0, 10)
        _check_range("tune_volume", self.tune_volume, 0, 10)
        _check_range("rhythm_volume", self.rhythm_volume, 0, 10)
        _check_range("instrument", self.instrument, 0, 127)
        if not isinstance(self.repeat, int) or self.repeat < 1:
            raise RangeError(f"repeat must be a positive integer, got {self.repeat!r}")


def beats_to_ticks(beats) -> int:
    """Quantize a beat count to ticks (4 per beat), rounding off-grid values.

    Emits QuantizationWarning when the value does not land on the grid; the
    rounded tick count is used either way.
    """
    if beats < 0:
        raise ValueError("beats must be non-negative")
    exact = beats * TICKS_PER_BEAT
    ticks = round(exact)
    if abs(exact - ticks) > 1e-9:
        warnings.warn(
            f"{beats} beats is {exact} ticks; rounded to {ticks}",
            QuantizationWarning,
            stacklevel=2,
        )
    return ticks


def compile_melody_track(
    melody: Melody,
    params: ParamSet = ParamSet(),
    note_off: bool = False,
) -> list[MidiEvent]:
    """Build the melody track: program change, struck notes, All Notes Off.

    With note_off=True a NoteOff is flushed for every ringing note at the
    next boundary where time has advanced, for players that dislike bare
    NoteOn streams. The default matches the golden byte layout, which ends
    notes only via the final controller message.
    """
    events: list[MidiEvent] = [ProgramChange(0, channel=0, program=params.instrument)]
    velocity = params.tune_volume * 10
    pending = 0
    ringing: list[int] = []

    def flush_ringing() -> None:
        nonlocal pending
        for note in ringing:
            events.append(NoteOff(pending, channel=0, note=note, velocity=0))
            pending = 0
        ringing.clear()

    for _ in range(params.repeat):
        for tune, tempo in zip(melody.tunes, melody.tempos):
            duration = beats_to_ticks(tempo.beats)
            if tune.is_rest:
                pending += duration
                continue
            if note_off and pending > 0:
                flush_ringing()
            note = map_note(tune, params.scale)
            events.append(NoteOn(pending, channel=0, note=note, velocity=velocity))
            if note_off:
                ringing.append(note)
            pending = duration

    if note_off:
        flush_ringing()
    events.append(ControlChange(pending, channel=0, controller=ALL_NOTES_OFF, value=0))
    events.append(EndOfTrack(0))
    return events


def total_ticks(events) -> int:
    """Track length in ticks: the sum of all delta times."""
    return sum(e.delta for e in events)
