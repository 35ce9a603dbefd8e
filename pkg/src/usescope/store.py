"""Flat-file run store: artifact document, transcript files, annotation log.

Layout per run: ``runs/<run_id>/artifact.json`` (atomic replace),
``runs/<run_id>/transcripts/`` (one file per request digest), and
``runs/<run_id>/annotations.log`` (append-only JSONL). After any interrupted
write the store stays readable with either the old or the new state: the
artifact is swapped by rename, and a torn trailing log line is ignored.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from .errors import DuplicateCard, RunExists, StoreError, UnknownRun, UnknownUse
from .gateway import TranscriptStore
from .jsonutil import atomic_write_text, canonical_json, stable_json
from .model import AnnotationCard, RunArtifact


class RunStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, run_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(run_id, threading.Lock())

    def run_dir(self, run_id: str) -> Path:
        return self.root / "runs" / run_id

    def transcripts(self, run_id: str) -> TranscriptStore:
        return TranscriptStore(self.run_dir(run_id) / "transcripts")

    def _artifact_path(self, run_id: str) -> Path:
        return self.run_dir(run_id) / "artifact.json"

    def _log_path(self, run_id: str) -> Path:
        return self.run_dir(run_id) / "annotations.log"

    def exists(self, run_id: str) -> bool:
        return self._artifact_path(run_id).exists()

    def list_runs(self) -> list[dict]:
        runs_dir = self.root / "runs"
        summaries = []
        if runs_dir.exists():
            for path in sorted(runs_dir.iterdir()):
                if (path / "artifact.json").exists():
                    artifact = self.load_run(path.name)
                    summaries.append({
                        "run_id": artifact.run_id,
                        "technology": artifact.technology,
                        "state": artifact.state,
                        "created_at": artifact.created_at,
                        "uses": len(artifact.uses),
                    })
        return summaries

    def save_run(self, artifact: RunArtifact) -> str:
        """Durable first write of a run; a colliding run_id is an error."""
        if self.exists(artifact.run_id):
            raise RunExists(f"run {artifact.run_id!r} already exists")
        self.update_run(artifact)
        return artifact.run_id

    def update_run(self, artifact: RunArtifact) -> None:
        """Atomically replace the artifact document; cards land in the log."""
        with self._lock(artifact.run_id):
            doc = artifact.to_dict()
            cards = doc.pop("annotations")
            try:
                atomic_write_text(self._artifact_path(artifact.run_id), stable_json(doc))
            except OSError as exc:
                raise StoreError(f"failed to write run {artifact.run_id}: {exc}") from exc
            existing = {(c.use_id, c.rater_id) for c in self._read_cards(artifact.run_id)}
            for card_dict in cards:
                if (card_dict["use_id"], card_dict["rater_id"]) not in existing:
                    self._append_line(artifact.run_id, card_dict)

    def _append_line(self, run_id: str, card_dict: dict) -> None:
        path = self._log_path(run_id)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "a", encoding="utf-8") as handle:
            handle.write(canonical_json(card_dict) + "\n")
            handle.flush()
            os.fsync(handle.fileno())

    def _read_cards(self, run_id: str) -> list[AnnotationCard]:
        path = self._log_path(run_id)
        if not path.exists():
            return []
        cards = []
        for line in path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            try:
                cards.append(AnnotationCard.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError):
                # A torn trailing line from an interrupted append is not an
                # error; the store reflects the state before that append.
                continue
        return cards

    def load_run(self, run_id: str) -> RunArtifact:
        path = self._artifact_path(run_id)
        if not path.exists():
            raise UnknownRun(f"run {run_id!r} not found")
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise StoreError(f"artifact for run {run_id} is unreadable: {exc}") from exc
        doc["annotations"] = []
        artifact = RunArtifact.from_dict(doc)
        cards = self._read_cards(run_id)
        return RunArtifact.from_dict(doc | {"annotations": [c.to_dict() for c in cards]})

    def append_annotation(self, run_id: str, card: AnnotationCard) -> dict:
        """Validate and durably append one card; duplicates are rejected."""
        with self._lock(run_id):
            if not self.exists(run_id):
                raise UnknownRun(f"run {run_id!r} not found")
            artifact = self.load_run(run_id)
            if card.use_id not in {u.use_id for u in artifact.uses}:
                raise UnknownUse(f"run {run_id} has no use {card.use_id!r}")
            if any(c.use_id == card.use_id and c.rater_id == card.rater_id
                   for c in artifact.annotations):
                raise DuplicateCard(
                    f"rater {card.rater_id} already annotated use {card.use_id}"
                )
            self._append_line(run_id, card.to_dict())
        return {"run_id": run_id, "use_id": card.use_id, "rater_id": card.rater_id,
                "stored": True}
