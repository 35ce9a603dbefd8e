"""Canonical JSON rendering and atomic file writes.

One canonical form is used everywhere a byte-stable representation matters:
request digests, stored artifacts, machine-format CLI output, and API
responses all round-trip through these helpers.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path


def canonical_json(value) -> str:
    """Compact, key-sorted JSON; insensitive to dict insertion order."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def stable_json(value) -> str:
    """Key-sorted, indented JSON for files meant to be diffed and checked in."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def atomic_write_text(path: Path, text: str) -> None:
    """Write via temp file + rename so readers never observe a partial file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
