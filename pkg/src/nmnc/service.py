"""Local HTTP API for the browser UI.

Endpoints (JSON in, JSON or `audio/midi` out):

  POST /api/compile        notation + parameters -> MIDI bytes
  POST /api/validate       parse/count report, always 200
  GET  /api/library        song list
  GET  /api/library/{id}   one song with its default parameters
  GET  /api/meta           instrument/scale/rhythm tables for dropdowns

Compilation failures map to 422 with `{error_code, message, detail}` where
error_code follows the CLI contract (1 count mismatch, 2 empty, 3 syntax or
range). The server is stateless and binds to loopback unless told otherwise.
"""

import argparse
import json
import os
import re
import sys
from dataclasses import replace
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import library
from .compiler import compile_texts
from .errors import NmnError, NmnSyntaxError, SongNotFound
from .instruments import GM_INSTRUMENTS, resolve_instrument
from .nmn import parse_tempo_list, parse_tune_list, validate_melody
from .pitch import SCALE_NAMES, scale_by_name
from .sequencer import ParamSet, RhythmStyle, total_ticks
from .smf import write_smf

DEFAULT_PORT = 8473
PORT_ENV_VAR = "NMNC_PORT"

_PARAM_FIELDS = ("speed", "tune_volume", "rhythm_volume", "instrument",
                 "scale", "rhythm", "repeat")


def params_from_request(body: dict) -> ParamSet:
    """Build a ParamSet from optional request fields; unknown keys rejected."""
    unknown = set(body) - set(_PARAM_FIELDS) - {"tune", "tempo", "note_off"}
    if unknown:
        raise NmnError(f"unknown field(s): {', '.join(sorted(unknown))}")
    updates = {}
    for field in ("speed", "tune_volume", "rhythm_volume", "repeat"):
        if body.get(field) is not None:
            value = body[field]
            if not isinstance(value, int) or isinstance(value, bool):
                raise NmnError(f"{field} must be an integer")
            updates[field] = value
    if body.get("instrument") is not None:
        updates["instrument"] = resolve_instrument(body["instrument"])
    if body.get("scale") is not None:
        updates["scale"] = scale_by_name(str(body["scale"]))
    if body.get("rhythm") is not None:
        updates["rhythm"] = RhythmStyle.by_name(str(body["rhythm"]))
    return replace(ParamSet(), **updates) if updates else ParamSet()


def _loose_count(text: str) -> int:
    """Token count for display even when the text does not parse."""
    return len([w for w in re.split(r"[,\s]+", text) if w])


def validate_report(tune_text: str, tempo_text: str) -> dict:
    """The /api/validate payload: live counts plus any errors."""
    errors = []

    def error_entry(exc: NmnError, box: str) -> dict:
        entry = {"error_code": exc.error_code, "message": str(exc)}
        if isinstance(exc, NmnSyntaxError):
            entry["detail"] = f"{box} token {exc.position}"
        return entry

    tunes = tempos = None
    try:
        tunes = parse_tune_list(tune_text)
    except NmnError as exc:
        errors.append(error_entry(exc, "tune"))
    try:
        tempos = parse_tempo_list(tempo_text)
    except NmnError as exc:
        errors.append(error_entry(exc, "tempo"))

    tune_count = len(tunes) if tunes is not None else _loose_count(tune_text)
    tempo_count = len(tempos) if tempos is not None else _loose_count(tempo_text)

    if tunes is not None and tempos is not None:
        try:
            validate_melody(tunes, tempos)
        except NmnError as exc:
            errors.append({"error_code": exc.error_code, "message": str(exc)})

    return {
        "ok": not errors,
        "tune_count": tune_count,
        "tempo_count": tempo_count,
        "errors": errors,
    }


def song_payload(song: library.Song) -> dict:
    params = song.default_params
    return {
        "id": song.id,
        "title": song.title,
        "tune": song.tune_text,
        "tempo": song.tempo_text,
        "params": {
            "speed": params.speed,
            "tune_volume": params.tune_volume,
            "rhythm_volume": params.rhythm_volume,
            "instrument": params.instrument,
            "scale": params.scale.name,
            "rhythm": params.rhythm.value,
            "repeat": params.repeat,
        },
    }


def meta_payload() -> dict:
    return {
        "instruments": list(GM_INSTRUMENTS),
        "scales": list(SCALE_NAMES),
        "rhythms": [style.value for style in RhythmStyle],
    }


class ApiHandler(BaseHTTPRequestHandler):
    server_version = "nmnc-service"
    protocol_version = "HTTP/1.1"

    # -- plumbing ---------------------------------------------------------

    def log_message(self, format, *args):  # noqa: A002 - base class signature
        if getattr(self.server, "verbose", False):
            super().log_message(format, *args)

    def _send(self, status: int, payload: bytes, content_type: str,
              extra_headers: dict | None = None) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Expose-Headers", "X-Total-Ticks, X-Byte-Count")
        for name, value in (extra_headers or {}).items():
            self.send_header(name, value)
        self.end_headers()
        self.wfile.write(payload)

    def _send_json(self, status: int, obj) -> None:
        self._send(status, json.dumps(obj).encode("utf-8"), "application/json")

    def _read_json_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise _BadRequest(f"malformed JSON: {exc}") from None
        if not isinstance(body, dict):
            raise _BadRequest("request body must be a JSON object")
        return body

    # -- routes -----------------------------------------------------------

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/meta":
            return self._send_json(200, meta_payload())
        if self.path == "/api/library":
            return self._send_json(
                200, [{"id": song_id, "title": title} for song_id, title in library.list_songs()]
            )
        match = re.fullmatch(r"/api/library/([A-Za-z0-9_-]+)", self.path)
        if match:
            try:
                song = library.get_song(match.group(1))
            except SongNotFound as exc:
                return self._send_json(404, {"error": str(exc)})
            return self._send_json(200, song_payload(song))
        self._send_json(404, {"error": f"no route {self.path}"})

    def do_POST(self):
        try:
            if self.path == "/api/compile":
                return self._compile()
            if self.path == "/api/validate":
                body = self._read_json_body()
                return self._send_json(
                    200,
                    validate_report(str(body.get("tune", "")), str(body.get("tempo", ""))),
                )
            self._send_json(404, {"error": f"no route {self.path}"})
        except _BadRequest as exc:
            self._send_json(400, {"error": str(exc)})

    def _compile(self):
        body = self._read_json_body()
        try:
            params = params_from_request(body)
            smf = compile_texts(
                str(body.get("tune", "")),
                str(body.get("tempo", "")),
                params,
                note_off=bool(body.get("note_off", False)),
            )
        except (NmnError, ValueError) as exc:
            code = exc.error_code if isinstance(exc, NmnError) else 3
            return self._send_json(
                422,
                {"error_code": code, "message": str(exc), "detail": type(exc).__name__},
            )
        data = write_smf(smf)
        self._send(
            200,
            data,
            "audio/midi",
            extra_headers={
                "X-Total-Ticks": str(total_ticks(smf.tracks[0])),
                "X-Byte-Count": str(len(data)),
            },
        )


class _BadRequest(Exception):
    pass


def create_server(host: str = "127.0.0.1", port: int = 0,
                  verbose: bool = False) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer((host, port), ApiHandler)
    server.verbose = verbose
    return server


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="nmnc-serve", description=__doc__.splitlines()[0])
    parser.add_argument("--host", default="127.0.0.1",
                        help="bind address (default loopback only)")
    parser.add_argument("--port", type=int,
                        default=int(os.environ.get(PORT_ENV_VAR, DEFAULT_PORT)),
                        help=f"port (default ${PORT_ENV_VAR} or {DEFAULT_PORT})")
    parser.add_argument("--verbose", action="store_true", help="log requests")
    args = parser.parse_args(argv)

    server = create_server(args.host, args.port, verbose=args.verbose)
    host, port = server.server_address[:2]
    print(f"nmnc service listening on http://{host}:{port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
