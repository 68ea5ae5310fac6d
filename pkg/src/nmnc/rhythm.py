"""Percussion accompaniment track generation.

Each style is a fixed one-bar pattern on the General MIDI percussion channel
(channel 9), tiled from tick 0 and truncated at the melody's total length so
both tracks span the same tick count. The hit tables are conventional
drum-machine figures and are deliberately easy to swap out.
"""

from dataclasses import dataclass

from .errors import RangeError
from .sequencer import ALL_NOTES_OFF, ControlChange, EndOfTrack, MidiEvent, NoteOn, RhythmStyle

PERCUSSION_CHANNEL = 9

KICK = 35        # acoustic bass drum
SNARE = 38       # acoustic snare
CLOSED_HIHAT = 42
WOODBLOCK = 76   # high wood block

ACCENT_BOOST = 20


@dataclass(frozen=True)
class RhythmPattern:
    """One bar of percussion: (tick offset, note, accented) triples."""

    style: RhythmStyle
    bar_ticks: int
    hits: tuple[tuple[int, int, bool], ...]

    def __post_init__(self) -> None:
        for offset, note, _ in self.hits:
            if not 0 <= offset < self.bar_ticks:
                raise ValueError(f"hit offset {offset} outside bar of {self.bar_ticks}")
            if not 35 <= note <= 81:
                raise ValueError(f"{note} is not a GM percussion note")


PATTERNS = {
    RhythmStyle.WALTZ: RhythmPattern(
        RhythmStyle.WALTZ,
        bar_ticks=12,
        hits=((0, KICK, True), (4, SNARE, False), (8, SNARE, False)),
    ),
    RhythmStyle.ROCK: RhythmPattern(
        RhythmStyle.ROCK,
        bar_ticks=16,
        hits=(
            (0, KICK, True),
            (2, CLOSED_HIHAT, False),
            (4, SNARE, False),
            (6, CLOSED_HIHAT, False),
            (8, KICK, False),
            (10, CLOSED_HIHAT, False),
            (12, SNARE, False),
            (14, CLOSED_HIHAT, False),
        ),
    ),
    RhythmStyle.DISCO: RhythmPattern(
        RhythmStyle.DISCO,
        bar_ticks=16,
        hits=(
            (0, KICK, True),
            (2, CLOSED_HIHAT, False),
            (4, KICK, True),
            (6, CLOSED_HIHAT, False),
            (8, KICK, True),
            (10, CLOSED_HIHAT, False),
            (12, KICK, True),
            (14, CLOSED_HIHAT, False),
        ),
    ),
    RhythmStyle.RUMBA: RhythmPattern(
        RhythmStyle.RUMBA,
        bar_ticks=16,
        hits=(
            (0, KICK, True),
            (3, WOODBLOCK, False),
            (6, WOODBLOCK, False),
            (8, SNARE, False),
            (12, WOODBLOCK, False),
        ),
    ),
}


def pattern_for(style: RhythmStyle) -> RhythmPattern:
    """The fixed one-bar pattern for a style; NONE has none."""
    if style is RhythmStyle.NONE:
        raise ValueError("style NONE has no pattern")
    return PATTERNS[style]


def compile_rhythm_track(
    style: RhythmStyle, melody_ticks: int, rhythm_volume: int = 10
) -> list[MidiEvent]:
    """Tile the style's bar over melody_ticks and close the track at that tick.

    Hit velocity is rhythm_volume x 10, accents +20 (clamped to 127).
    """
    if melody_ticks < 0:
        raise ValueError("melody_ticks must be non-negative")
    if not 0 <= rhythm_volume <= 10:
        raise RangeError(f"rhythm_volume must be in 0..10, got {rhythm_volume!r}")
    pattern = pattern_for(style)
    velocity = rhythm_volume * 10

    events: list[MidiEvent] = []
    cursor = 0
    bar_start = 0
    while bar_start < melody_ticks:
        for offset, note, accented in pattern.hits:
            tick = bar_start + offset
            if tick >= melody_ticks:
                break
            events.append(
                NoteOn(
                    tick - cursor,
                    channel=PERCUSSION_CHANNEL,
                    note=note,
                    velocity=min(velocity + ACCENT_BOOST, 127) if accented else velocity,
                )
            )
            cursor = tick
        bar_start += pattern.bar_ticks

    events.append(
        ControlChange(
            melody_ticks - cursor,
            channel=PERCUSSION_CHANNEL,
            controller=ALL_NOTES_OFF,
            value=0,
        )
    )
    events.append(EndOfTrack(0))
    return events
