"""Stateless HTTP service around the lint engine.

POST /api/lint   {"language": "python"|"java", "source": "..."}  -> Report JSON
GET  /api/rules?lang=python|java                                 -> catalog JSON
GET  /healthz                                                    -> "ok"
GET  /...                                                        -> static web UI files, when configured

Listen address comes from DESIGN_TUTOR_ADDR (default 127.0.0.1:8080),
static asset directory from DESIGN_TUTOR_STATIC. Every request is
handled independently; there is no shared mutable state.
"""

from __future__ import annotations

import json
import mimetypes
import os
import posixpath
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .engine import lint, render_json, rule_catalog

MAX_SOURCE_BYTES = 256 * 1024
MAX_BODY_BYTES = 1024 * 1024

_CORS = (
    ("Access-Control-Allow-Origin", "*"),
    ("Access-Control-Allow-Methods", "GET, POST, OPTIONS"),
    ("Access-Control-Allow-Headers", "Content-Type"),
)


class DesignTutorHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    static_dir: Path | None = None

    # -- plumbing ---------------------------------------------------------

    def log_message(self, fmt, *args):  # quiet by default; tests hate chatter
        if os.environ.get("DESIGN_TUTOR_LOG"):
            super().log_message(fmt, *args)

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        for key, value in _CORS:
            self.send_header(key, value)
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: str) -> None:
        self._send(status, payload.encode("utf-8"), "application/json; charset=utf-8")

    def _send_error_json(self, status: int, message: str) -> None:
        self._send_json(status, json.dumps({"error": message}))

    # -- routes ------------------------------------------------------------

    def do_OPTIONS(self) -> None:
        self._send(204, b"", "text/plain")

    def do_GET(self) -> None:
        url = urlparse(self.path)
        if url.path == "/healthz":
            self._send(200, b"ok", "text/plain; charset=utf-8")
        elif url.path == "/api/rules":
            self._rules(url.query)
        else:
            self._static(url.path)

    def do_POST(self) -> None:
        url = urlparse(self.path)
        if url.path != "/api/lint":
            self._send_error_json(404, "not found")
            return
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY_BYTES:
            self._send_error_json(413, "request body too large")
            return
        body = self.rfile.read(length)
        try:
            data = json.loads(body.decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            self._send_error_json(400, "body must be a JSON object")
            return
        if not isinstance(data, dict) or "language" not in data or "source" not in data:
            self._send_error_json(400, "body needs 'language' and 'source' fields")
            return
        language, source = data["language"], data["source"]
        if language not in ("python", "java"):
            self._send_error_json(400, f"unsupported language: {language!r}")
            return
        if not isinstance(source, str):
            self._send_error_json(400, "'source' must be a string")
            return
        if len(source.encode("utf-8")) > MAX_SOURCE_BYTES:
            self._send_error_json(413, "source exceeds 256 KiB")
            return
        report = lint(source, language, source_name="submission")
        self._send_json(200, render_json(report))

    def _rules(self, query: str) -> None:
        params = parse_qs(query)
        lang = params.get("lang", [None])[0]
        if lang is not None and lang not in ("python", "java"):
            self._send_error_json(400, f"unsupported language: {lang!r}")
            return
        self._send_json(200, json.dumps(rule_catalog(lang), ensure_ascii=False))

    def _static(self, path: str) -> None:
        if self.static_dir is None:
            self._send_error_json(404, "no static assets configured; see /api/lint and /api/rules")
            return
        clean = posixpath.normpath(path.lstrip("/")) or "."
        if clean.startswith(".."):
            self._send_error_json(404, "not found")
            return
        target = self.static_dir / clean
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            self._send_error_json(404, "not found")
            return
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, target.read_bytes(), content_type)


class _Server(ThreadingHTTPServer):
    # default backlog of 5 makes simultaneous connections hit SYN retries
    request_queue_size = 128
    daemon_threads = True


def make_server(addr: str = "127.0.0.1:8080", static_dir: str | Path | None = None) -> ThreadingHTTPServer:
    host, _, port = addr.rpartition(":")
    handler = type("Handler", (DesignTutorHandler,), {
        "static_dir": Path(static_dir) if static_dir else None,
    })
    return _Server((host or "127.0.0.1", int(port)), handler)


def main() -> None:
    addr = os.environ.get("DESIGN_TUTOR_ADDR", "127.0.0.1:8080")
    static_dir = os.environ.get("DESIGN_TUTOR_STATIC") or None
    server = make_server(addr, static_dir)
    host, port = server.server_address[:2]
    print(f"design-tutor service on http://{host}:{port}/", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()


if __name__ == "__main__":
    main()
