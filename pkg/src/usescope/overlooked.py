"""Literature-coverage filter: which generated uses have no supporting paper.

Papers are matched to uses by cosine similarity of embeddings; the verdict
threshold is calibrated as a nearest-rank percentile of the per-paper
maximum-similarity distribution (the per-pair alternative is selectable).
A use with no paper at or above the threshold is overlooked.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptyCorpus, ValidationError
from .jsonutil import atomic_write_text, canonical_json
from .model import OverlookedVerdict, TechnologyUse, UsePaperMatch
from .embeddings import cosine

PROBE_PERCENTILES = (95.0, 99.0, 99.5, 99.9)


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    title: str
    abstract: str
    venue: str | None = None
    language_tag: str | None = None

    def __post_init__(self):
        if not self.paper_id.strip():
            raise ValidationError("paper_id must be non-empty")
        if not self.title.strip() or not self.abstract.strip():
            raise ValidationError("paper must carry both title and abstract")

    def text(self) -> str:
        return f"{self.title} {self.abstract}"

    def to_dict(self) -> dict:
        out = {"paper_id": self.paper_id, "title": self.title, "abstract": self.abstract}
        if self.venue is not None:
            out["venue"] = self.venue
        if self.language_tag is not None:
            out["language"] = self.language_tag
        return out


@dataclass
class IngestReport:
    kept: int = 0
    dropped: dict = field(default_factory=lambda: {
        "malformed": 0,
        "missing_title": 0,
        "missing_abstract": 0,
        "non_english": 0,
        "missing_language": 0,
    })
    malformed_lines: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"kept": self.kept, "dropped": dict(self.dropped),
                "malformed_lines": list(self.malformed_lines)}


def _looks_english(title: str, abstract: str) -> bool:
    # Cheap heuristic for untagged records: mostly-ASCII letters.
    text = f"{title} {abstract}"
    if not text:
        return False
    ascii_letters = sum(1 for c in text if c.isascii())
    return ascii_letters / len(text) >= 0.9


def ingest_corpus(lines, accept_untagged: bool = False) -> tuple[list[PaperRecord], IngestReport]:
    """Filter a line-delimited dump to English records with title and abstract.

    ``lines`` is any iterable of JSON lines (or a path). Untagged records are
    dropped unless ``accept_untagged`` turns on the ASCII heuristic.
    Malformed lines are recorded with their line number and skipped.
    """
    if isinstance(lines, (str, Path)):
        lines = Path(lines).read_text(encoding="utf-8").splitlines()
    report = IngestReport()
    papers: list[PaperRecord] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            data = json.loads(line)
            paper_id = str(data["paper_id"])
        except (json.JSONDecodeError, KeyError, TypeError):
            report.dropped["malformed"] += 1
            report.malformed_lines.append(lineno)
            continue
        title = str(data.get("title") or "").strip()
        abstract = str(data.get("abstract") or "").strip()
        if not title:
            report.dropped["missing_title"] += 1
            continue
        if not abstract:
            report.dropped["missing_abstract"] += 1
            continue
        language = data.get("language")
        if language is None:
            if not (accept_untagged and _looks_english(title, abstract)):
                report.dropped["missing_language"] += 1
                continue
        elif not str(language).strip().lower().startswith("en"):
            report.dropped["non_english"] += 1
            continue
        papers.append(PaperRecord(
            paper_id=paper_id, title=title, abstract=abstract,
            venue=data.get("venue"), language_tag=language,
        ))
        report.kept += 1
    return papers, report


@dataclass
class CorpusIndex:
    """Flat similarity index: an (n, dim) float32 matrix plus an id sidecar."""

    paper_ids: list[str]
    matrix: np.ndarray
    provider_tag: str

    def __post_init__(self):
        if self.matrix.ndim != 2 or len(self.paper_ids) != self.matrix.shape[0]:
            raise ValidationError("index matrix and id list disagree on paper count")
        if self.matrix.dtype != np.float32:
            self.matrix = self.matrix.astype(np.float32)

    def __len__(self) -> int:
        return len(self.paper_ids)

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[1])

    def save(self, directory: str | Path) -> None:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        atomic_write_text(directory / "index.meta", canonical_json({
            "dimension": self.dimension,
            "count": len(self),
            "provider": self.provider_tag,
        }) + "\n")
        atomic_write_text(directory / "index.ids", "\n".join(self.paper_ids) + "\n")
        self.matrix.astype("<f4").tofile(directory / "index.vec")

    @classmethod
    def load(cls, directory: str | Path) -> "CorpusIndex":
        directory = Path(directory)
        meta = json.loads((directory / "index.meta").read_text(encoding="utf-8"))
        ids = (directory / "index.ids").read_text(encoding="utf-8").splitlines()
        matrix = np.fromfile(directory / "index.vec", dtype="<f4").reshape(
            meta["count"], meta["dimension"]
        )
        if len(ids) != meta["count"]:
            raise ValidationError("index.ids length disagrees with index.meta count")
        return cls(paper_ids=ids, matrix=matrix, provider_tag=meta["provider"])


def build_index(papers: list[PaperRecord], provider) -> CorpusIndex:
    """Embed ``title + abstract`` per paper in record order."""
    if not papers:
        raise EmptyCorpus("cannot index an empty corpus")
    rows = [provider.embed(p.text()) for p in papers]
    return CorpusIndex(
        paper_ids=[p.paper_id for p in papers],
        matrix=np.vstack(rows),
        provider_tag=provider.tag,
    )


@dataclass
class UseVectors:
    """Embeddings of the uses' rendered descriptions, in use order."""

    use_ids: list[str]
    matrix: np.ndarray


def embed_uses(uses: list[TechnologyUse], provider) -> UseVectors:
    rows = [provider.embed(u.concepts.description()) for u in uses]
    return UseVectors(use_ids=[u.use_id for u in uses], matrix=np.vstack(rows))


def similarity_matrix(index: CorpusIndex, use_vectors: UseVectors) -> np.ndarray:
    """Quantized cosine per (paper, use) pair; shape (papers, uses).

    Computed pairwise through the one canonical ``cosine`` so any
    recomputation of a single pair is bit-identical to the matrix entry.
    """
    papers = index.matrix
    uses = use_vectors.matrix
    out = np.empty((papers.shape[0], uses.shape[0]), dtype=np.float64)
    for j in range(uses.shape[0]):
        col = uses[j]
        for i in range(papers.shape[0]):
            out[i, j] = cosine(papers[i], col)
    return out


def best_match(use_id: str, use_vector: np.ndarray, index: CorpusIndex) -> UsePaperMatch:
    """Argmax-similarity paper for one use; ties break to the smallest paper_id."""
    if len(index) == 0:
        raise EmptyCorpus("cannot match against an empty index")
    best_sim = -2.0
    best_paper = ""
    for i in range(len(index)):
        sim = cosine(index.matrix[i], use_vector)
        paper_id = index.paper_ids[i]
        if sim > best_sim or (sim == best_sim and paper_id < best_paper):
            best_sim = sim
            best_paper = paper_id
    return UsePaperMatch(use_id=use_id, paper_id=best_paper, similarity=best_sim)


def nearest_rank(sorted_values: np.ndarray, percentile: float) -> float:
    """Nearest-rank percentile: the smallest value with at least p% of the
    distribution at or below it. Rank arithmetic absorbs float error when
    p*N/100 is an exact integer."""
    n = len(sorted_values)
    if n == 0:
        raise ValidationError("cannot take a percentile of an empty distribution")
    if not 0.0 < percentile < 100.0:
        raise ValidationError(f"percentile {percentile} outside (0, 100)")
    rank = min(n, max(1, math.ceil(percentile * n / 100.0 - 1e-9)))
    return float(sorted_values[rank - 1])


@dataclass
class CalibrationReport:
    percentile: float
    threshold: float
    distribution_size: int
    per_pair: bool
    probes: dict  # percentile -> {"threshold": float, "papers_at_or_above": int}

    def to_dict(self) -> dict:
        return {
            "percentile": self.percentile,
            "threshold": self.threshold,
            "distribution_size": self.distribution_size,
            "per_pair": self.per_pair,
            "probes": {str(k): v for k, v in self.probes.items()},
        }


def calibrate_threshold(
    index: CorpusIndex,
    use_vectors: UseVectors,
    percentile: float,
    per_pair: bool = False,
    sims: np.ndarray | None = None,
) -> tuple[float, CalibrationReport]:
    """Threshold = nearest-rank percentile of per-paper maximum similarity
    (or of all pair similarities with ``per_pair``). The report lists, for
    each probe percentile, how many papers sit at or above that threshold.
    """
    if len(index) == 0 or not use_vectors.use_ids:
        raise EmptyCorpus("calibration needs a non-empty corpus and use list")
    if sims is None:
        sims = similarity_matrix(index, use_vectors)
    per_paper_max = sims.max(axis=1)
    distribution = np.sort(sims.reshape(-1) if per_pair else per_paper_max)
    threshold = nearest_rank(distribution, percentile)
    probes = {}
    for p in sorted(set(PROBE_PERCENTILES) | {percentile}):
        t = nearest_rank(distribution, p)
        probes[p] = {
            "threshold": t,
            "papers_at_or_above": int(np.count_nonzero(per_paper_max >= t)),
        }
    report = CalibrationReport(
        percentile=percentile,
        threshold=threshold,
        distribution_size=int(distribution.size),
        per_pair=per_pair,
        probes=probes,
    )
    return threshold, report


def flag_overlooked(
    uses: list[TechnologyUse],
    use_vectors: UseVectors,
    index: CorpusIndex,
    threshold: float,
    sims: np.ndarray | None = None,
) -> list[OverlookedVerdict]:
    """One verdict per use: supporters are papers at or above threshold,
    sorted by descending similarity then paper_id; overlooked iff none."""
    if not math.isfinite(threshold):
        raise ValidationError("threshold must be finite")
    if sims is None:
        sims = similarity_matrix(index, use_vectors)
    order = {u.use_id: j for j, u in enumerate(uses)}
    verdicts = []
    for use in uses:
        j = order[use.use_id]
        supporters = [
            UsePaperMatch(use_id=use.use_id, paper_id=index.paper_ids[i],
                          similarity=float(sims[i, j]))
            for i in range(len(index))
            if sims[i, j] >= threshold
        ]
        supporters.sort(key=lambda m: (-m.similarity, m.paper_id))
        verdicts.append(OverlookedVerdict(
            use_id=use.use_id,
            overlooked=not supporters,
            supporting_papers=tuple(supporters),
            threshold_used=threshold,
        ))
    return verdicts


def literature_stats(verdicts: list[OverlookedVerdict],
                     papers: list[PaperRecord]) -> dict:
    """Venues ranked by distinct supporting papers; uses by supporter count."""
    venue_of = {p.paper_id: (p.venue or "(unknown venue)") for p in papers}
    supporting_ids: set[str] = set()
    use_rows = []
    for verdict in verdicts:
        supporting_ids.update(m.paper_id for m in verdict.supporting_papers)
        use_rows.append({"use_id": verdict.use_id,
                         "supporters": len(verdict.supporting_papers)})
    venue_counts: dict[str, int] = {}
    for paper_id in supporting_ids:
        venue = venue_of.get(paper_id, "(unknown venue)")
        venue_counts[venue] = venue_counts.get(venue, 0) + 1
    venues = [{"venue": v, "papers": c} for v, c in venue_counts.items()]
    venues.sort(key=lambda r: (-r["papers"], r["venue"]))
    use_rows.sort(key=lambda r: (-r["supporters"], r["use_id"].rjust(12, "0")))
    return {"venues": venues, "uses": use_rows}
