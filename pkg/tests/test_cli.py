"""Command-line interface tests (exit codes, stdout/stderr contract)."""

import pytest

from nmnc.cli import main

from strategies import GOLDEN_BYTES


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompile:
    def test_library_song_to_default_path(self, tmp_path, monkeypatch, capsys):
        monkeypatch.chdir(tmp_path)
        code, out, err = run(["compile", "--library", "happy-birthday"], capsys)
        assert code == 0
        assert (tmp_path / "0001.mid").read_bytes() == GOLDEN_BYTES
        assert "133 bytes" in out and "96 ticks" in out
        assert err == ""

    def test_tune_tempo_chord(self, tmp_path, capsys):
        out_path = tmp_path / "chord.mid"
        code, out, _ = run(
            ["compile", "--tune", "1, 3, 5, 0", "--tempo", "0, 0, 0, 2", "-o", str(out_path)],
            capsys,
        )
        assert code == 0
        data = out_path.read_bytes()
        assert bytes.fromhex("00903c64 00904064 00904364") in data
        assert "8 ticks" in out

    def test_input_document(self, tmp_path, capsys):
        doc = tmp_path / "song.nmn"
        doc.write_text("TUNE: 1, 2\nTEMPO: 1, 1\nVOLUME: 5\n", encoding="utf-8")
        out_path = tmp_path / "song.mid"
        code, _, _ = run(["compile", "--input", str(doc), "-o", str(out_path)], capsys)
        assert code == 0
        assert b"\x90\x3c\x32" in out_path.read_bytes()  # velocity 50

    def test_flags_override_document(self, tmp_path, capsys):
        doc = tmp_path / "song.nmn"
        doc.write_text("TUNE: 1\nTEMPO: 1\nSPEED: 2\n", encoding="utf-8")
        out_path = tmp_path / "song.mid"
        code, _, _ = run(
            ["compile", "--input", str(doc), "--speed", "9", "-o", str(out_path)], capsys
        )
        assert code == 0
        assert out_path.read_bytes()[13] == 9

    def test_count_mismatch_exits_1(self, tmp_path, capsys):
        code, out, err = run(
            ["compile", "--tune", "5", "--tempo", "1, 2", "-o", str(tmp_path / "x.mid")],
            capsys,
        )
        assert code == 1
        assert "quantities" in err.lower()
        assert "1" in err and "2" in err

    def test_empty_input_exits_2(self, tmp_path, capsys):
        code, _, err = run(
            ["compile", "--tune", "", "--tempo", "", "-o", str(tmp_path / "x.mid")], capsys
        )
        assert code == 2
        assert "blank" in err.lower()

    def test_syntax_error_exits_3(self, tmp_path, capsys):
        code, _, err = run(
            ["compile", "--tune", "8", "--tempo", "1", "-o", str(tmp_path / "x.mid")], capsys
        )
        assert code == 3
        assert "position 1" in err

    def test_range_error_exits_3(self, tmp_path, capsys):
        code, _, err = run(
            ["compile", "--tune", "100000", "--tempo", "1", "--scale", "B",
             "-o", str(tmp_path / "x.mid")],
            capsys,
        )
        assert code == 3

    def test_missing_input_file_exits_66(self, tmp_path, capsys):
        code, _, _ = run(["compile", "--input", str(tmp_path / "nope.nmn")], capsys)
        assert code == 66

    def test_unknown_library_song_exits_4(self, tmp_path, capsys):
        code, _, _ = run(
            ["compile", "--library", "nope", "-o", str(tmp_path / "x.mid")], capsys
        )
        assert code == 4

    def test_instrument_by_name(self, tmp_path, capsys):
        out_path = tmp_path / "x.mid"
        code, _, _ = run(
            ["compile", "--tune", "1", "--tempo", "1",
             "--instrument", "acoustic grand piano", "-o", str(out_path)],
            capsys,
        )
        assert code == 0
        assert b"\xc0\x00" in out_path.read_bytes()

    def test_bad_flag_exits_64(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compile", "--nonsense"])
        assert info.value.code == 64

    def test_missing_source_exits_64(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compile"])
        assert info.value.code == 64

    def test_tune_without_tempo_exits_64(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compile", "--tune", "1"])
        assert info.value.code == 64


class TestInspect:
    @pytest.fixture()
    def golden_file(self, tmp_path):
        path = tmp_path / "golden.mid"
        path.write_bytes(GOLDEN_BYTES)
        return path

    def test_hex_dump_is_nine_rows(self, golden_file, capsys):
        code, out, _ = run(["inspect", str(golden_file), "--hex"], capsys)
        assert code == 0
        assert len(out.strip().splitlines()) == 9
        assert out.startswith("4D 54 68 64")

    def test_events_lists_28_lines(self, golden_file, capsys):
        code, out, _ = run(["inspect", str(golden_file), "--events"], capsys)
        assert code == 0
        lines = [line for line in out.splitlines() if line.startswith("  ")]
        assert len(lines) == 28
        assert "note_on" in lines[1]
        assert "program_change" in lines[0]

    def test_summary_by_default(self, golden_file, capsys):
        code, out, _ = run(["inspect", str(golden_file)], capsys)
        assert code == 0
        assert "format 0" in out and "division 3" in out

    def test_decode_error_exits_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.mid"
        bad.write_bytes(b"MThd\x00\x00\x00\x06\x00\x00\x00\x01\x00")
        code, _, err = run(["inspect", str(bad)], capsys)
        assert code == 3
        assert err

    def test_missing_file_exits_66(self, tmp_path, capsys):
        code, _, _ = run(["inspect", str(tmp_path / "absent.mid")], capsys)
        assert code == 66


class TestLibrary:
    def test_list_four_rows(self, capsys):
        code, out, _ = run(["library", "list"], capsys)
        assert code == 0
        rows = out.strip().splitlines()
        assert len(rows) == 4
        assert rows[0] == "happy-birthday\tHappy Birthday"

    def test_show_prints_nmn_text(self, capsys):
        code, out, _ = run(["library", "show", "happy-birthday"], capsys)
        assert code == 0
        assert "TUNE:" in out and "TEMPO:" in out

    def test_show_unknown_exits_4(self, capsys):
        code, _, err = run(["library", "show", "missing"], capsys)
        assert code == 4
        assert "missing" in err
