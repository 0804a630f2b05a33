"""Local HTTP/JSON service for interactive decision-graph cutting.

One dataset per process, loaded at startup.  GET /api/state and
GET /api/decision-graph expose the frozen pipeline state; POST /api/cuts
replaces the whole cut set and returns the induced clustering.  Requests
are handled serially, so reads always see a complete cut state.  Static
UI assets are served from a build directory at "/".
"""

from __future__ import annotations

import json
import mimetypes
import os
from http.server import BaseHTTPRequestHandler, HTTPServer

import numpy as np

from .cutting import decision_graph, dg_manual_cut
from .errors import InvalidCutNode
from .intree import build_it
from .potential import compute_potential
from .geometry import delaunay


def _dumps(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


class DgSession:
    """Pipeline state for one dataset plus the current cut set."""

    def __init__(self, points, potential):
        self.points = np.asarray(points, dtype=np.float64)
        self.potential = np.asarray(potential, dtype=np.float64)
        self.it = build_it(self.points, self.potential)
        self.dg = decision_graph(self.it)
        self.current = dg_manual_cut(self.it, [])

    @classmethod
    def from_pipeline(cls, points, sdef, transform):
        tri = delaunay(points)
        field = compute_potential(tri, sdef, transform)
        return cls(points, field.p)

    def state_payload(self):
        return {
            "points": [[float(x), float(y)] for x, y in self.points],
            "potential": [float(v) for v in self.it.potential],
            "parent": [int(v) for v in self.it.parent],
            "edge_length": [float(v) for v in self.it.edge_length],
        }

    def dg_payload(self):
        return [{"node": n, "p": p, "w": w} for n, p, w in self.dg.entries()]

    def cuts_payload(self, result):
        return {
            "k": int(result.assignment.k),
            "cluster_id": [int(v) for v in result.assignment.cluster_id],
            "roots": [int(v) for v in result.assignment.roots],
        }

    def handle(self, method, path, body):
        """Pure request dispatch: returns (status, payload-or-None)."""
        if method == "GET" and path == "/api/state":
            return 200, self.state_payload()
        if method == "GET" and path == "/api/decision-graph":
            return 200, self.dg_payload()
        if method == "POST" and path == "/api/cuts":
            try:
                doc = json.loads(body or b"")
                nodes = doc["cut_nodes"]
            except (json.JSONDecodeError, KeyError, TypeError):
                return 400, {"error": "body must be {\"cut_nodes\": [...]}"}
            try:
                result = dg_manual_cut(self.it, nodes)
            except (InvalidCutNode, ValueError, TypeError) as e:
                node = getattr(e, "node", None)
                return 422, {"error": str(e), "node": node}
            self.current = result  # replace the whole cut set atomically
            return 200, self.cuts_payload(result)
        return None


def make_handler(session: DgSession, assets_dir=None):
    assets_root = os.path.abspath(assets_dir) if assets_dir else None

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):
            pass

        def _send_json(self, status, payload):
            data = _dumps(payload)
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def _send_asset(self, rel):
            if assets_root is None:
                if rel in ("", "index.html"):
                    page = (b"<!doctype html><title>dtclust</title>"
                            b"<p>No UI assets configured; the JSON API is at "
                            b"/api/state, /api/decision-graph, /api/cuts.</p>")
                    self.send_response(200)
                    self.send_header("Content-Type", "text/html")
                    self.send_header("Content-Length", str(len(page)))
                    self.end_headers()
                    self.wfile.write(page)
                    return
                self.send_error(404)
                return
            rel = rel or "index.html"
            full = os.path.abspath(os.path.join(assets_root, rel))
            if not full.startswith(assets_root + os.sep) and full != assets_root:
                self.send_error(403)
                return
            if not os.path.isfile(full):
                self.send_error(404)
                return
            ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
            with open(full, "rb") as fh:
                data = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def do_GET(self):
            out = session.handle("GET", self.path, None)
            if out is not None:
                self._send_json(*out)
                return
            self._send_asset(self.path.lstrip("/"))

        def do_POST(self):
            length = int(self.headers.get("Content-Length", 0))
            body = self.rfile.read(length) if length else b""
            out = session.handle("POST", self.path, body)
            if out is not None:
                self._send_json(*out)
                return
            self.send_error(404)

    return Handler


def serve(session: DgSession, host="127.0.0.1", port=8787, assets_dir=None):
    httpd = HTTPServer((host, port), make_handler(session, assets_dir))
    print(f"serving on http://{host}:{httpd.server_address[1]}/")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
