"""The `.nmn` text document format.

A document is UTF-8 lines of `KEY: value`. `TUNE:` and `TEMPO:` carry the
token text and may repeat (long melodies read better split across lines);
the remaining keys override one performance parameter each and may appear
once. Lines starting with `#` and blank lines are ignored. Unknown keys are
rejected rather than skipped, so typos surface immediately.

    # anything after a hash at line start is a comment
    TITLE: Example
    TUNE: 1, 3, 5, 0
    TEMPO: 0, 0, 0, 2
    INSTRUMENT: Acoustic Grand Piano
    SCALE: C
    RHYTHM: NONE
"""

from dataclasses import dataclass, replace
from typing import Optional

from .errors import NmnSyntaxError
from .instruments import resolve_instrument
from .pitch import scale_by_name
from .sequencer import ParamSet, RhythmStyle

PARAM_KEYS = ("SPEED", "VOLUME", "RHYTHM-VOLUME", "INSTRUMENT", "SCALE", "RHYTHM", "REPEAT")
KNOWN_KEYS = ("TITLE", "TUNE", "TEMPO") + PARAM_KEYS


@dataclass(frozen=True)
class NmnDocument:
    """Tune/tempo text plus any parameter overrides from the file."""

    tune_text: str = ""
    tempo_text: str = ""
    title: Optional[str] = None
    speed: Optional[int] = None
    tune_volume: Optional[int] = None
    rhythm_volume: Optional[int] = None
    instrument: Optional[int] = None
    scale_name: Optional[str] = None
    rhythm_name: Optional[str] = None
    repeat: Optional[int] = None

    def params(self, base: ParamSet = ParamSet()) -> ParamSet:
        """Apply this document's overrides on top of a base parameter set."""
        overrides = {}
        if self.speed is not None:
            overrides["speed"] = self.speed
        if self.tune_volume is not None:
            overrides["tune_volume"] = self.tune_volume
        if self.rhythm_volume is not None:
            overrides["rhythm_volume"] = self.rhythm_volume
        if self.instrument is not None:
            overrides["instrument"] = self.instrument
        if self.scale_name is not None:
            overrides["scale"] = scale_by_name(self.scale_name)
        if self.rhythm_name is not None:
            overrides["rhythm"] = RhythmStyle.by_name(self.rhythm_name)
        if self.repeat is not None:
            overrides["repeat"] = self.repeat
        return replace(base, **overrides)


def _parse_int(line_no: int, key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise NmnSyntaxError(line_no, value, f"{key} takes an integer") from None


def parse_nmn(text: str) -> NmnDocument:
    """Parse `.nmn` document text; NmnSyntaxError positions are line numbers."""
    tune_parts: list[str] = []
    tempo_parts: list[str] = []
    fields: dict[str, object] = {}

    def set_once(line_no: int, key: str, field: str, value) -> None:
        if field in fields:
            raise NmnSyntaxError(line_no, key, "key appears twice")
        fields[field] = value

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if not sep or key not in KNOWN_KEYS:
            raise NmnSyntaxError(line_no, key or line, "unknown key")
        try:
            if key == "TUNE":
                tune_parts.append(value)
            elif key == "TEMPO":
                tempo_parts.append(value)
            elif key == "TITLE":
                set_once(line_no, key, "title", value)
            elif key == "SPEED":
                set_once(line_no, key, "speed", _parse_int(line_no, key, value))
            elif key == "VOLUME":
                set_once(line_no, key, "tune_volume", _parse_int(line_no, key, value))
            elif key == "RHYTHM-VOLUME":
                set_once(line_no, key, "rhythm_volume", _parse_int(line_no, key, value))
            elif key == "INSTRUMENT":
                set_once(line_no, key, "instrument", resolve_instrument(value))
            elif key == "SCALE":
                scale_by_name(value)  # validate eagerly so the line number is known
                set_once(line_no, key, "scale_name", value)
            elif key == "RHYTHM":
                RhythmStyle.by_name(value)
                set_once(line_no, key, "rhythm_name", value)
            elif key == "REPEAT":
                set_once(line_no, key, "repeat", _parse_int(line_no, key, value))
        except NmnSyntaxError:
            raise
        except ValueError as exc:
            raise NmnSyntaxError(line_no, value, str(exc)) from None

    return NmnDocument(
        tune_text=" ".join(part for part in tune_parts if part),
        tempo_text=" ".join(part for part in tempo_parts if part),
        **fields,
    )
