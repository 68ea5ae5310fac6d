"""Numbered-musical-notation compiler: NMN text in, Standard MIDI File out."""

from .compiler import build_smf, compile_texts, compile_texts_to_bytes
from .document import NmnDocument, parse_nmn
from .errors import (
    BadMagic,
    CountMismatchError,
    EmptyInputError,
    LengthMismatch,
    MalformedVlq,
    NmnError,
    NmnSyntaxError,
    QuantizationWarning,
    RangeError,
    SmfError,
    SongNotFound,
    TruncatedInput,
    UnknownEvent,
)
from .instruments import GM_INSTRUMENTS, instrument_name, resolve_instrument
from .library import Song, get_song, list_songs, song_text
from .nmn import (
    Melody,
    TempoToken,
    TuneToken,
    parse_tempo_list,
    parse_tune_list,
    render_tempo_list,
    render_tune_list,
    validate_melody,
)
from .pitch import MajorScale, SCALES, degree_semitone, map_note, scale_by_name, table2_oracle
from .rhythm import RhythmPattern, compile_rhythm_track, pattern_for
from .sequencer import (
    ControlChange,
    EndOfTrack,
    MidiEvent,
    NoteOff,
    NoteOn,
    ParamSet,
    ProgramChange,
    RhythmStyle,
    beats_to_ticks,
    compile_melody_track,
    total_ticks,
)
from .smf import SmfFile, SmfHeader, decode_vlq, encode_event, encode_vlq, hex_dump, read_smf, write_smf

__version__ = "0.1.0"
