"""Scale-degree to MIDI note-number mapping.

Degrees 1..7 sit at semitones 0,2,4,5,7,9,11 of a major scale; the twelve
selectable scale roots transpose the whole melody. The unshifted octave is
anchored at middle C (note 60), so degree 5 in C is note 67.
"""

from dataclasses import dataclass

from .errors import RangeError
from .nmn import TuneToken

DEGREE_SEMITONES = (0, 2, 4, 5, 7, 9, 11)

# Offset of the unmarked octave within the 0..127 note range (row of 60..71).
BASE_OCTAVE = 5

SCALE_NAMES = ("C", "Db", "D", "Eb", "E", "F", "Fs", "G", "Ab", "A", "Bb", "B")


@dataclass(frozen=True)
class MajorScale:
    """A scale root; root_offset transposes in semitones above C."""

    name: str
    root_offset: int

    def __post_init__(self) -> None:
        if self.name not in SCALE_NAMES:
            raise ValueError(f"unknown scale {self.name!r}")
        if SCALE_NAMES.index(self.name) != self.root_offset:
            raise ValueError(f"scale {self.name} has root {SCALE_NAMES.index(self.name)}")


SCALES = {name: MajorScale(name, offset) for offset, name in enumerate(SCALE_NAMES)}

# Sharp-form aliases accepted on input; canonical spellings are ASCII flats.
_SCALE_ALIASES = {"c#": "Db", "d#": "Eb", "f#": "Fs", "g#": "Ab", "a#": "Bb"}

SCALE_C = SCALES["C"]


def scale_by_name(name: str) -> MajorScale:
    """Case-insensitive scale lookup, accepting F#/Gb-style aliases."""
    key = name.strip().lower()
    key = _SCALE_ALIASES.get(key, key)
    for canonical in SCALE_NAMES:
        if canonical.lower() == key.lower():
            return SCALES[canonical]
    raise ValueError(f"unknown scale {name!r} (choose from {', '.join(SCALE_NAMES)})")


def degree_semitone(degree: int, sharp: bool = False) -> int:
    """Semitone of a degree within one octave, 0..11."""
    return DEGREE_SEMITONES[degree - 1] + (1 if sharp else 0)


def map_note(token: TuneToken, scale: MajorScale = SCALE_C) -> int:
    """MIDI note number for a non-rest token under the given scale.

    Raises RangeError when the result leaves 0..127 (no octave wrapping).
    """
    if token.is_rest:
        raise ValueError("rests have no note number")
    value = (
        12 * (BASE_OCTAVE + token.octave_shift)
        + degree_semitone(token.degree, token.sharp)
        + scale.root_offset
    )
    if not 0 <= value <= 127:
        raise RangeError(
            f"note {value} out of MIDI range 0..127 "
            f"(degree {token.degree}, octave shift {token.octave_shift:+d}, "
            f"scale {scale.name})"
        )
    return value


# Column order of the note-number table: each degree followed by its sharp.
TABLE_COLUMNS = ("1", "1#", "2", "2#", "3", "4", "4#", "5", "5#", "6", "6#", "7")


def table2_oracle() -> dict[tuple[int, str], int]:
    """Enumerate the full note-number table for octaves 0..10.

    Values run consecutively left-to-right, top-to-bottom and stop at 127,
    so the last octave row only has columns 1 through 5.
    """
    cells = {}
    for octave in range(11):
        for semitone, column in enumerate(TABLE_COLUMNS):
            value = 12 * octave + semitone
            if value <= 127:
                cells[(octave, column)] = value
    return cells
