"""End-to-end pipeline: notation text + parameters -> SMF bytes."""

from .nmn import Melody, parse_tempo_list, parse_tune_list, validate_melody
from .rhythm import compile_rhythm_track
from .sequencer import MidiEvent, ParamSet, RhythmStyle, compile_melody_track, total_ticks
from .smf import SmfFile, SmfHeader, write_smf


def build_smf(melody: Melody, params: ParamSet = ParamSet(), note_off: bool = False) -> SmfFile:
    """Compile a validated melody into a file model.

    Format 0 with the melody track alone, or format 1 with a percussion
    track of equal tick length when a rhythm style is selected. The header
    division doubles as the speed control (clamped to 1, since 0 is not a
    legal division).
    """
    melody_track = compile_melody_track(melody, params, note_off=note_off)
    tracks: list[list[MidiEvent]] = [melody_track]
    if params.rhythm is not RhythmStyle.NONE:
        tracks.append(
            compile_rhythm_track(params.rhythm, total_ticks(melody_track), params.rhythm_volume)
        )
    header = SmfHeader(
        format=0 if len(tracks) == 1 else 1,
        ntracks=len(tracks),
        division=max(params.speed, 1),
    )
    return SmfFile(header, tuple(tuple(t) for t in tracks))


def compile_texts(
    tune_text: str,
    tempo_text: str,
    params: ParamSet = ParamSet(),
    note_off: bool = False,
) -> SmfFile:
    """Parse, validate and compile the two text boxes."""
    melody = validate_melody(parse_tune_list(tune_text), parse_tempo_list(tempo_text))
    return build_smf(melody, params, note_off=note_off)


def compile_texts_to_bytes(
    tune_text: str,
    tempo_text: str,
    params: ParamSet = ParamSet(),
    note_off: bool = False,
) -> bytes:
    return write_smf(compile_texts(tune_text, tempo_text, params, note_off=note_off))
