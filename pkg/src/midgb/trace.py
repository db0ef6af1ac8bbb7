"""Line-delimited JSON run traces.

Every line is one JSON object. Solve/inconsistency events are written the
moment they happen and flushed, so a killed run still leaks everything it had
already deduced. Round summaries and one terminal object follow.
"""

from __future__ import annotations

import json


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


class TraceWriter:
    """Writes trace lines to a file; a None path makes every call a no-op."""

    def __init__(self, path=None):
        self._fh = open(path, "w", encoding="utf-8") if path is not None else None

    def event(self, kind: str, round_no: int, var_name=None, value=None):
        if self._fh is None:
            return
        self._fh.write(
            _dump({"kind": kind, "round": round_no, "var": var_name, "value": value})
        )
        self._fh.flush()

    def round(self, payload: dict):
        if self._fh is None:
            return
        self._fh.write(_dump(payload))
        self._fh.flush()

    def terminal(self, payload: dict):
        if self._fh is None:
            return
        self._fh.write(_dump(payload))
        self._fh.flush()

    def close(self):
        if self._fh is not None:
            self._fh.close()
            self._fh = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def read_trace(path) -> list:
    """Parse a trace file back into a list of dicts (one per line).

    A run killed mid-write can leave a torn final line; that one is dropped.
    A malformed line anywhere else still raises.
    """
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    out = []
    for i, line in enumerate(lines):
        try:
            out.append(json.loads(line))
        except json.JSONDecodeError:
            if i == len(lines) - 1:
                break
            raise
    return out
