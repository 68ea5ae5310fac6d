"""Tokenizer and validator for numbered-notation tune and tempo text.

Tune tokens follow the grammar ``["-"] D Z* [".5"]`` with D a scale degree
1..7 and Z* a run of octave-shift zeros, or the bare rest token ``0``:

    5      degree 5, middle octave
    50     degree 5, one octave up          500  two octaves up
    -5     degree 5, one octave down        -50  two octaves down
    5.5    degree 5 sharpened
    0      rest

Tempo tokens are non-negative decimals counting beats; ``0`` marks a chord
member that strikes without advancing time. Tokens are separated by commas
and/or whitespace.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CountMismatchError, EmptyInputError, NmnSyntaxError

# Degrees with no sharp column in the note-number table: 3# would collide
# with 4, 7# with the next octave's 1.
SHARPABLE_DEGREES = frozenset({1, 2, 4, 5, 6})

# Octave-shift runs are unbounded in the notation itself; anything past +-5
# cannot map into 0..127 for any scale, so longer runs are flagged here.
MAX_OCTAVE_SHIFT = 5

_TUNE_RE = re.compile(r"^(-?)([0-7])(0*)(\.5)?$")
_TEMPO_RE = re.compile(r"^([0-9]+)(?:\.([0-9]+))?$")


@dataclass(frozen=True)
class TuneToken:
    """One pitch symbol: scale degree, octave shift and sharp flag."""

    degree: int
    octave_shift: int = 0
    sharp: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.degree <= 7:
            raise ValueError(f"degree {self.degree} not in 0..7")
        if self.degree == 0 and (self.octave_shift or self.sharp):
            raise ValueError("a rest takes no octave or sharp marks")
        if self.sharp and self.degree not in SHARPABLE_DEGREES:
            raise ValueError(f"degree {self.degree} has no sharp form")

    @property
    def is_rest(self) -> bool:
        return self.degree == 0


REST = TuneToken(0)


@dataclass(frozen=True)
class TempoToken:
    """One duration in beats; zero beats marks a chord member."""

    beats: Fraction

    def __post_init__(self) -> None:
        if self.beats < 0:
            raise ValueError("beats must be non-negative")


@dataclass(frozen=True)
class Melody:
    """A validated pairing of tune and tempo token lists."""

    tunes: tuple[TuneToken, ...]
    tempos: tuple[TempoToken, ...]

    def __post_init__(self) -> None:
        if len(self.tunes) != len(self.tempos):
            raise ValueError("tune and tempo counts must match")
        if not self.tunes:
            raise ValueError("a melody needs at least one token")


def _split_tokens(text: str) -> list[tuple[int, str]]:
    """Split on commas/whitespace into (1-based position, word) pairs.

    An empty slot produced by a comma is a syntax error, except for a single
    trailing comma, which is tolerated as an editing leftover.
    """
    words: list[tuple[int, str]] = []
    segments = text.split(",")
    for i, segment in enumerate(segments):
        parts = segment.split()
        if not parts:
            if i == 0 and len(segments) == 1:
                break  # entirely blank input: zero tokens
            if i == len(segments) - 1:
                continue  # trailing comma
            raise NmnSyntaxError(len(words) + 1, "", "empty token between commas")
        for part in parts:
            words.append((len(words) + 1, part))
    return words


def parse_tune_token(position: int, word: str) -> TuneToken:
    match = _TUNE_RE.match(word)
    if not match:
        raise NmnSyntaxError(position, word)
    minus, degree_char, zeros, sharp_mark = match.groups()
    degree = int(degree_char)
    if degree == 0:
        if minus or zeros or sharp_mark:
            raise NmnSyntaxError(position, word, "a rest is written as a bare 0")
        return REST
    if sharp_mark and degree not in SHARPABLE_DEGREES:
        raise NmnSyntaxError(position, word, f"{degree}.5 has no note-number column")
    shift = -(len(zeros) + 1) if minus else len(zeros)
    if abs(shift) > MAX_OCTAVE_SHIFT:
        raise NmnSyntaxError(position, word, "octave shift beyond +-5")
    return TuneToken(degree, shift, bool(sharp_mark))


def parse_tune_list(text: str) -> list[TuneToken]:
    """Tokenize the tune box text; raises NmnSyntaxError at the first bad token."""
    return [parse_tune_token(pos, word) for pos, word in _split_tokens(text)]


def parse_tempo_token(position: int, word: str) -> TempoToken:
    match = _TEMPO_RE.match(word)
    if not match:
        reason = "durations must be non-negative" if word.startswith("-") else ""
        raise NmnSyntaxError(position, word, reason)
    _, frac_digits = match.groups()
    if frac_digits is not None and len(frac_digits) > 3:
        # 4 ticks per beat cannot resolve finer than this anyway
        raise NmnSyntaxError(position, word, "more than 3 decimal places")
    return TempoToken(Fraction(word))


def parse_tempo_list(text: str) -> list[TempoToken]:
    """Tokenize the tempo box text; raises NmnSyntaxError at the first bad token."""
    return [parse_tempo_token(pos, word) for pos, word in _split_tokens(text)]


def validate_melody(tunes, tempos) -> Melody:
    """Pair the token lists, enforcing the blank and count-match checks.

    Raises EmptyInputError (error 2) when either list is empty, then
    CountMismatchError (error 1) when the counts disagree.
    """
    if not tunes or not tempos:
        raise EmptyInputError()
    if len(tunes) != len(tempos):
        raise CountMismatchError(len(tunes), len(tempos))
    return Melody(tuple(tunes), tuple(tempos))


def render_tune_token(token: TuneToken) -> str:
    if token.is_rest:
        return "0"
    if token.octave_shift >= 0:
        text = f"{token.degree}{'0' * token.octave_shift}"
    else:
        text = f"-{token.degree}{'0' * (-token.octave_shift - 1)}"
    return text + ".5" if token.sharp else text


def render_tune_list(tokens) -> str:
    """Canonical comma-separated text; parse_tune_list inverts it exactly."""
    return ", ".join(render_tune_token(t) for t in tokens)


def render_tempo_token(token: TempoToken) -> str:
    beats = token.beats
    if beats.denominator == 1:
        return str(beats.numerator)
    if 1000 % beats.denominator != 0:
        raise ValueError(f"{beats} has no exact 3-digit decimal form")
    thousandths = beats.numerator * (1000 // beats.denominator)
    whole, rem = divmod(thousandths, 1000)
    return f"{whole}.{rem:03d}".rstrip("0")


def render_tempo_list(tokens) -> str:
    """Canonical comma-separated decimals; parse_tempo_list inverts it exactly."""
    return ", ".join(render_tempo_token(t) for t in tokens)
