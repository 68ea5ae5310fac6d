"""Error types shared across the compiler.

Compile-side failures carry a stable ``error_code`` (1, 2 or 3) that the CLI
maps to exit codes and the HTTP service to 422 payloads:

  1 -- tune/tempo counts differ
  2 -- tune or tempo box is empty
  3 -- malformed token, out-of-range value, or decode failure
"""


class NmnError(Exception):
    """Base class for user-input and compilation errors."""

    error_code = 3


class NmnSyntaxError(NmnError):
    """A malformed token, reported with its 1-based position."""

    error_code = 3

    def __init__(self, position, token, reason=""):
        self.position = position
        self.token = token
        self.reason = reason
        detail = f": {reason}" if reason else ""
        super().__init__(f"bad token {token!r} at position {position}{detail}")


class CountMismatchError(NmnError):
    """Error 1: the tune box and the tempo box hold different quantities."""

    error_code = 1

    def __init__(self, tune_count, tempo_count):
        self.tune_count = tune_count
        self.tempo_count = tempo_count
        super().__init__(
            "The quantities of numbers in the TUNE box and the TEMPO box are "
            f"different! TUNE has {tune_count}, TEMPO has {tempo_count}."
        )


class EmptyInputError(NmnError):
    """Error 2: the tune box or the tempo box is blank."""

    error_code = 2

    def __init__(self):
        super().__init__("The TUNE box and the TEMPO box must not be blank!")


class RangeError(NmnError, ValueError):
    """A value fell outside its legal range (MIDI note, VLQ, parameter)."""

    error_code = 3


class QuantizationWarning(UserWarning):
    """A beat count did not land on the 4-ticks-per-beat grid and was rounded."""


class SmfError(Exception):
    """Base class for MIDI file decode failures."""


class BadMagic(SmfError):
    """A chunk did not start with the expected MThd/MTrk marker."""


class TruncatedInput(SmfError):
    """The byte stream ended in the middle of a structure."""


class LengthMismatch(SmfError):
    """A chunk length field disagrees with the bytes actually present."""


class MalformedVlq(SmfError):
    """An overlong or over-range variable-length quantity."""


class UnknownEvent(SmfError):
    """An unsupported or out-of-place status byte."""

    def __init__(self, status, offset):
        self.status = status
        self.offset = offset
        super().__init__(f"unknown event status 0x{status:02X} at offset {offset}")


class SongNotFound(LookupError):
    """No library song with the requested id."""

    def __init__(self, song_id):
        self.song_id = song_id
        super().__init__(f"no song named {song_id!r} in the library")
