"""Song library tests."""

import pytest

from nmnc import (
    SongNotFound,
    build_smf,
    compile_texts_to_bytes,
    get_song,
    list_songs,
    parse_tempo_list,
    parse_tune_list,
    song_text,
    validate_melody,
    write_smf,
)

from strategies import GOLDEN_BYTES


def test_four_songs_in_fixed_order():
    songs = list_songs()
    assert [title for _, title in songs] == [
        "Happy Birthday",
        "Christmas Eve Song",
        "Amazing Grace",
        "Happy Day",
    ]
    assert songs[0][0] == "happy-birthday"


def test_ids_are_stable_slugs():
    for song_id, _ in list_songs():
        assert song_id == song_id.lower()
        assert " " not in song_id


def test_happy_birthday_reproduces_reference_bytes():
    song = get_song("happy-birthday")
    data = compile_texts_to_bytes(song.tune_text, song.tempo_text, song.default_params)
    assert data == GOLDEN_BYTES


def test_happy_birthday_token_counts():
    song = get_song("happy-birthday")
    assert len(parse_tune_list(song.tune_text)) == 25
    assert len(parse_tempo_list(song.tempo_text)) == 25


@pytest.mark.parametrize("song_id", [song_id for song_id, _ in list_songs()])
def test_every_song_validates_and_compiles(song_id):
    song = get_song(song_id)
    melody = validate_melody(parse_tune_list(song.tune_text), parse_tempo_list(song.tempo_text))
    data = write_smf(build_smf(melody, song.default_params))
    assert data.startswith(b"MThd")
    assert len(data) > 22


def test_unknown_id():
    with pytest.raises(SongNotFound):
        get_song("no-such-id")
    with pytest.raises(SongNotFound):
        song_text("no-such-id")


def test_song_text_is_nmn_format():
    text = song_text("happy-birthday")
    assert "TUNE:" in text and "TEMPO:" in text
