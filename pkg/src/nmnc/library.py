"""The predefined song library.

Songs ship as plain `.nmn` files bundled with the package, so the library
can be extended by dropping in more files. Only Happy Birthday is a fixed
transcription; the other three are approximate public-domain renderings
(their file comments say so).
"""

from dataclasses import dataclass
from importlib import resources

from .document import NmnDocument, parse_nmn
from .errors import SongNotFound
from .sequencer import ParamSet

SONG_IDS = ("happy-birthday", "christmas-eve-song", "amazing-grace", "happy-day")


@dataclass(frozen=True)
class Song:
    id: str
    title: str
    tune_text: str
    tempo_text: str
    default_params: ParamSet


def _song_dir():
    return resources.files(__package__) / "songs"


def song_text(song_id: str) -> str:
    """Raw `.nmn` text of a library song."""
    if song_id not in SONG_IDS:
        raise SongNotFound(song_id)
    return (_song_dir() / f"{song_id}.nmn").read_text(encoding="utf-8")


def _title_for(song_id: str, document: NmnDocument) -> str:
    if document.title:
        return document.title
    return song_id.replace("-", " ").title()


def get_song(song_id: str) -> Song:
    document = parse_nmn(song_text(song_id))
    return Song(
        id=song_id,
        title=_title_for(song_id, document),
        tune_text=document.tune_text,
        tempo_text=document.tempo_text,
        default_params=document.params(),
    )


def list_songs() -> list[tuple[str, str]]:
    """(id, title) pairs in the fixed library order."""
    return [(song_id, get_song(song_id).title) for song_id in SONG_IDS]
