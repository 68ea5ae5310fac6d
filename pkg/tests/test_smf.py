"""Codec tests: VLQ, event bytes, file round trips, hex dump."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nmnc import (
    BadMagic,
    ControlChange,
    EndOfTrack,
    LengthMismatch,
    MalformedVlq,
    Melody,
    NoteOn,
    ProgramChange,
    RangeError,
    SmfFile,
    SmfHeader,
    TruncatedInput,
    UnknownEvent,
    build_smf,
    decode_vlq,
    encode_event,
    encode_vlq,
    hex_dump,
    read_smf,
    write_smf,
)

from strategies import GOLDEN_BYTES, melodies, param_sets


def vlq_reference(n: int) -> bytes:
    """Independent VLQ construction from the binary-string expansion."""
    bits = format(n, "b")
    bits = bits.zfill(-(-len(bits) // 7) * 7)
    groups = [bits[i : i + 7] for i in range(0, len(bits), 7)]
    return bytes(
        int(group, 2) | (0x80 if i < len(groups) - 1 else 0)
        for i, group in enumerate(groups)
    )


class TestVlq:
    @pytest.mark.parametrize(
        "value,encoded",
        [
            (0, b"\x00"),
            (8, b"\x08"),
            (0x7F, b"\x7f"),
            (0x80, b"\x81\x00"),
            (128, b"\x81\x00"),
            (0x3FFF, b"\xff\x7f"),
            (0x4000, b"\x81\x80\x00"),
            (0x0FFFFFFF, b"\xff\xff\xff\x7f"),
        ],
    )
    def test_boundary_values(self, value, encoded):
        assert encode_vlq(value) == encoded
        assert decode_vlq(encoded) == (value, len(encoded))

    def test_brute_force_against_reference(self):
        for n in range(100_001):
            encoded = encode_vlq(n)
            assert encoded == vlq_reference(n)
            assert decode_vlq(encoded) == (n, len(encoded))

    @pytest.mark.parametrize("bad", [-1, 0x10000000])
    def test_out_of_range(self, bad):
        with pytest.raises(RangeError):
            encode_vlq(bad)

    def test_dangling_continuation(self):
        with pytest.raises(TruncatedInput):
            decode_vlq(b"\x80\x80")
        with pytest.raises(TruncatedInput):
            decode_vlq(b"")

    def test_overlong_rejected(self):
        with pytest.raises(MalformedVlq):
            decode_vlq(b"\x80\x00")

    def test_five_byte_run_rejected(self):
        with pytest.raises(MalformedVlq):
            decode_vlq(b"\x81\x80\x80\x80\x00")

    @given(st.integers(0, 0x0FFFFFFF))
    def test_round_trip_property(self, n):
        assert decode_vlq(encode_vlq(n)) == (n, len(encode_vlq(n)))


class TestEventEncoding:
    @pytest.mark.parametrize(
        "event,encoded",
        [
            (NoteOn(0, 0, 0x43, 0x64), bytes.fromhex("904364")),
            (ProgramChange(0, 0, 0), bytes.fromhex("c000")),
            (ControlChange(0, 0, 123, 0), bytes.fromhex("b07b00")),
            (EndOfTrack(0), bytes.fromhex("ff2f00")),
            (NoteOn(0, 9, 35, 120), bytes.fromhex("99 23 78")),
        ],
    )
    def test_reference_encodings(self, event, encoded):
        assert encode_event(event) == encoded

    def test_channel_in_low_nibble(self):
        assert encode_event(ProgramChange(0, 15, 1)) == bytes((0xCF, 1))


class TestFileLayout:
    def test_empty_track_is_eight_bytes(self):
        smf = SmfFile(
            SmfHeader(0, 1, 3),
            ((ControlChange(0, 0, 123, 0), EndOfTrack(0)),),
        )
        data = write_smf(smf)
        # MThd(14) + MTrk header(8) + delta+CC(4) + delta+EOT(4)
        assert len(data) == 14 + 8 + 8
        assert int.from_bytes(data[18:22], "big") == 8
        assert read_smf(data) == smf

    def test_header_fields_big_endian(self):
        data = write_smf(
            SmfFile(SmfHeader(1, 2, 10), (
                (EndOfTrack(0),),
                (EndOfTrack(0),),
            ))
        )
        assert data[:4] == b"MThd"
        assert data[8:10] == b"\x00\x01"
        assert data[10:12] == b"\x00\x02"
        assert data[12:14] == b"\x00\x0a"

    def test_track_length_field_matches_content(self):
        data = write_smf(read_smf(GOLDEN_BYTES))
        assert data == GOLDEN_BYTES
        assert int.from_bytes(data[18:22], "big") == len(data) - 22 == 111

    def test_golden_decodes_to_28_events(self):
        smf = read_smf(GOLDEN_BYTES)
        assert smf.header == SmfHeader(0, 1, 3)
        assert len(smf.tracks[0]) == 28

    def test_format_zero_single_track_enforced(self):
        with pytest.raises(ValueError):
            SmfHeader(0, 2, 3)
        with pytest.raises(ValueError):
            SmfHeader(2, 1, 3)
        with pytest.raises(ValueError):
            SmfHeader(0, 1, 0)


class TestReadErrors:
    def test_bad_magic(self):
        with pytest.raises(BadMagic):
            read_smf(b"RIFF" + GOLDEN_BYTES[4:])

    def test_truncated_header(self):
        with pytest.raises(TruncatedInput):
            read_smf(GOLDEN_BYTES[:10])

    def test_truncated_track(self):
        with pytest.raises(TruncatedInput):
            read_smf(GOLDEN_BYTES[:40])

    def test_wrong_header_length(self):
        data = bytearray(GOLDEN_BYTES)
        data[7] = 7
        with pytest.raises(LengthMismatch):
            read_smf(bytes(data))

    def test_trailing_garbage(self):
        with pytest.raises(LengthMismatch):
            read_smf(GOLDEN_BYTES + b"\x00")

    def test_unknown_status_reports_offset(self):
        data = bytearray(GOLDEN_BYTES)
        data[26] = 0xA0  # first note-on becomes an aftertouch status
        with pytest.raises(UnknownEvent) as info:
            read_smf(bytes(data))
        assert info.value.status == 0xA0
        assert info.value.offset == 26

    def test_running_status_rejected(self):
        # drop the second note-on's status byte, as running status would
        data = bytearray(GOLDEN_BYTES)
        del data[30]
        data[21] -= 1  # fix up the track length field's low byte
        with pytest.raises(UnknownEvent):
            read_smf(bytes(data))

    def test_foreign_meta_events_skipped_with_time_kept(self):
        # delta 3 + set-tempo meta, then delta 2 + note on
        track = bytes.fromhex("03 FF 51 03 07 A1 20 02 90 43 64 00 FF 2F 00")
        data = (
            b"MThd" + (6).to_bytes(4, "big") + b"\x00\x00\x00\x01\x00\x03"
            + b"MTrk" + len(track).to_bytes(4, "big") + track
        )
        smf = read_smf(data)
        assert smf.tracks[0] == (NoteOn(5, 0, 0x43, 0x64), EndOfTrack(0))


class TestRoundTripProperty:
    @settings(max_examples=300, deadline=None)
    @given(melodies(), param_sets())
    def test_read_write_identity(self, pair, params):
        tunes, tempos = pair
        smf = build_smf(Melody(tunes, tempos), params)
        assert read_smf(write_smf(smf)) == smf


class TestHexDump:
    def test_empty(self):
        assert hex_dump(b"") == ""

    def test_single_row(self):
        assert hex_dump(bytes(range(16))) == (
            "00 01 02 03 04 05 06 07 08 09 0A 0B 0C 0D 0E 0F"
        )

    def test_golden_is_nine_rows(self):
        rows = hex_dump(GOLDEN_BYTES).splitlines()
        assert len(rows) == 9
        assert rows[0].startswith("4D 54 68 64")
        assert rows[-1] == "00 00 FF 2F 00"

    def test_uppercase_and_width(self):
        dump = hex_dump(bytes([0xAB] * 17))
        rows = dump.splitlines()
        assert rows[0] == " ".join(["AB"] * 16)
        assert rows[1] == "AB"
