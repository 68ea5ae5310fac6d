"""Command-line front end.

Subcommands: `compile` (notation to `.mid`), `inspect` (hex/event dump of a
MIDI file), `library` (predefined songs). Diagnostics go to stderr, data to
stdout. Exit codes are part of the contract:

  0  success
  1  tune/tempo count mismatch (error 1)
  2  empty tune or tempo input (error 2)
  3  syntax, range or MIDI decode errors
  4  unknown library song
  64 bad command line
  66 missing input file
"""

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import library
from .compiler import compile_texts
from .document import parse_nmn
from .errors import NmnError, SmfError, SongNotFound
from .instruments import resolve_instrument
from .pitch import scale_by_name
from .sequencer import (
    ControlChange,
    EndOfTrack,
    NoteOff,
    NoteOn,
    ParamSet,
    ProgramChange,
    RhythmStyle,
    total_ticks,
)
from .smf import hex_dump, read_smf, write_smf

DEFAULT_OUTPUT = "0001.mid"

EX_USAGE = 64
EX_NOINPUT = 66


class _ArgumentParser(argparse.ArgumentParser):
    """argparse's default exit code 2 collides with error 2; use 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="nmnc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compile", help="compile notation text to a MIDI file")
    source = comp.add_mutually_exclusive_group()
    source.add_argument("--input", metavar="FILE", help=".nmn document to compile")
    source.add_argument("--library", metavar="ID", help="compile a library song")
    source.add_argument("--tune", metavar="STR", help="tune token text")
    comp.add_argument("--tempo", metavar="STR", help="tempo token text (with --tune)")
    comp.add_argument("--speed", type=int, metavar="N", help="0..10, default 3")
    comp.add_argument("--volume", type=int, metavar="N", help="tune volume 0..10, default 10")
    comp.add_argument("--rhythm-volume", type=int, metavar="N", help="0..10, default 10")
    comp.add_argument("--instrument", metavar="N|NAME", help="GM program number or name")
    comp.add_argument("--scale", metavar="NAME", help="major scale root, C..B")
    comp.add_argument("--rhythm", metavar="NAME", help="NONE, Waltz, Rock, Disco or Rumba")
    comp.add_argument("--repeat", type=int, metavar="N", help="play count, default 1")
    comp.add_argument("--note-off", action="store_true",
                      help="also emit NoteOff events (not byte-compatible)")
    comp.add_argument("-o", "--output", metavar="PATH", default=DEFAULT_OUTPUT,
                      help=f"output path (default {DEFAULT_OUTPUT})")

    insp = sub.add_parser("inspect", help="decode and dump a MIDI file")
    insp.add_argument("file", metavar="FILE")
    insp.add_argument("--hex", action="store_true", help="print a 16-per-row hex dump")
    insp.add_argument("--events", action="store_true", help="print one event per line")

    lib = sub.add_parser("library", help="predefined songs")
    lib_sub = lib.add_subparsers(dest="library_command", required=True)
    lib_sub.add_parser("list", help="list song ids and titles")
    show = lib_sub.add_parser("show", help="print a song's .nmn text")
    show.add_argument("id", metavar="ID")

    return parser


def _params_from_args(args, base: ParamSet) -> ParamSet:
    updates = {}
    if args.speed is not None:
        updates["speed"] = args.speed
    if args.volume is not None:
        updates["tune_volume"] = args.volume
    if args.rhythm_volume is not None:
        updates["rhythm_volume"] = args.rhythm_volume
    if args.instrument is not None:
        updates["instrument"] = resolve_instrument(args.instrument)
    if args.scale is not None:
        updates["scale"] = scale_by_name(args.scale)
    if args.rhythm is not None:
        updates["rhythm"] = RhythmStyle.by_name(args.rhythm)
    if args.repeat is not None:
        updates["repeat"] = args.repeat
    return replace(base, **updates) if updates else base


def cmd_compile(args, parser: argparse.ArgumentParser) -> int:
    if args.tune is not None or args.tempo is not None:
        if args.tune is None or args.tempo is None:
            parser.error("--tune and --tempo must be given together")
        tune_text, tempo_text = args.tune, args.tempo
        base = ParamSet()
    elif args.library is not None:
        song = library.get_song(args.library)
        tune_text, tempo_text = song.tune_text, song.tempo_text
        base = song.default_params
    elif args.input is not None:
        document = parse_nmn(Path(args.input).read_text(encoding="utf-8"))
        tune_text, tempo_text = document.tune_text, document.tempo_text
        base = document.params()
    else:
        parser.error("one of --input, --library or --tune/--tempo is required")

    smf = compile_texts(tune_text, tempo_text, _params_from_args(args, base),
                        note_off=args.note_off)
    data = write_smf(smf)
    Path(args.output).write_bytes(data)
    print(f"{args.output}: {len(data)} bytes, {total_ticks(smf.tracks[0])} ticks")
    return 0


def format_event(event) -> str:
    if isinstance(event, NoteOn):
        return f"note_on ch={event.channel} note={event.note} velocity={event.velocity}"
    if isinstance(event, NoteOff):
        return f"note_off ch={event.channel} note={event.note} velocity={event.velocity}"
    if isinstance(event, ProgramChange):
        return f"program_change ch={event.channel} program={event.program}"
    if isinstance(event, ControlChange):
        return (f"control_change ch={event.channel} "
                f"controller={event.controller} value={event.value}")
    if isinstance(event, EndOfTrack):
        return "end_of_track"
    return repr(event)


def cmd_inspect(args) -> int:
    data = Path(args.file).read_bytes()
    smf = read_smf(data)
    if args.hex:
        print(hex_dump(data))
    if args.events:
        for index, events in enumerate(smf.tracks):
            print(f"track {index}:")
            for event in events:
                print(f"  {event.delta}\t{format_event(event)}")
    if not args.hex and not args.events:
        header = smf.header
        print(f"format {header.format}, {header.ntracks} track(s), "
              f"division {header.division}, {len(data)} bytes")
        for index, events in enumerate(smf.tracks):
            print(f"track {index}: {len(events)} events, {total_ticks(events)} ticks")
    return 0


def cmd_library(args) -> int:
    if args.library_command == "list":
        for song_id, title in library.list_songs():
            print(f"{song_id}\t{title}")
    else:
        print(library.song_text(args.id), end="")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compile":
            return cmd_compile(args, parser)
        if args.command == "inspect":
            return cmd_inspect(args)
        return cmd_library(args)
    except SongNotFound as exc:
        print(f"nmnc: {exc}", file=sys.stderr)
        return 4
    except NmnError as exc:
        print(f"nmnc: {exc}", file=sys.stderr)
        return exc.error_code
    except SmfError as exc:
        print(f"nmnc: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"nmnc: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        name = exc.filename or "input"
        print(f"nmnc: {name}: {exc.strerror or exc}", file=sys.stderr)
        return EX_NOINPUT


if __name__ == "__main__":
    sys.exit(main())
