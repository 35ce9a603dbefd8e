"""Shared domain types: uses, risk assessments, annotation cards, run artifacts.

All types are immutable after construction and validate their invariants in
``__post_init__``; an invalid value can never be stored or serialized.
``to_dict``/``from_dict`` round-trip every type through plain JSON values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from .errors import (
    DuplicateDomain,
    EmptyCatalog,
    InvalidProvenance,
    ValidationError,
)

SCHEMA_VERSION = "1"

# Matches the citation forms accepted as an Act location inside relevant_text.
ACT_LOCATION_RE = re.compile(
    r"(Article\s+\d+(?:\s*\(\s*\w+\s*\))*|Annex\s+[IVXLC]+|Amendment\s+\d+)",
    re.IGNORECASE,
)


def find_act_locations(text: str) -> list[str]:
    """Return every Article/Annex/Amendment token found in ``text``."""
    return [m.group(0) for m in ACT_LOCATION_RE.finditer(text or "")]


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _require_text(value, name: str) -> str:
    if not isinstance(value, str) or not value.strip():
        raise ValidationError(f"{name} must be non-empty text")
    return value.strip()


class Realisticness(str, Enum):
    ALREADY_EXISTENT = "already_existent"
    UPCOMING = "upcoming"
    UNLIKELY = "unlikely"


class RiskTier(str, Enum):
    PROHIBITED = "prohibited"
    HIGH_RISK = "high_risk"
    LIMITED_OR_LOW_RISK = "limited_or_low_risk"


class Provenance(str, Enum):
    ANNEX_III = "annex3"
    ACT_TEXT = "act_text"
    FOCUS_GROUP = "focus_group"


class Cohort(str, Enum):
    DEVELOPER = "developer"
    COMPLIANCE_EXPERT = "compliance_expert"


class LikertItem(str, Enum):
    FAMILIARITY = "familiarity"
    ADOPTION = "adoption"
    TRANSFORMATION = "transformation"
    RISK_SOCIETY = "risk_society"
    RISK_ENVIRONMENT = "risk_environment"


class AgreementVote(str, Enum):
    AGREE = "agree"
    DISAGREE = "disagree"


class CorrectedTier(str, Enum):
    PROHIBITED = "prohibited"
    HIGH_RISK = "high_risk"
    LIMITED_OR_LOW_RISK = "limited_or_low_risk"
    INSUFFICIENT_INFORMATION = "insufficient_information"


# Anchor wording rendered on cards and in exports for the 7-point items.
LIKERT_ANCHORS: dict[LikertItem, tuple[str, str]] = {
    LikertItem.FAMILIARITY: ("rarely", "always"),
    LikertItem.ADOPTION: ("very unlikely", "very likely"),
    LikertItem.TRANSFORMATION: ("very unlikely", "very likely"),
    LikertItem.RISK_SOCIETY: ("not risky at all", "unacceptably risky"),
    LikertItem.RISK_ENVIRONMENT: ("not risky at all", "unacceptably risky"),
}


@dataclass(frozen=True)
class DomainEntry:
    name: str
    provenance: Provenance

    def __post_init__(self):
        _require_text(self.name, "domain name")

    def to_dict(self) -> dict:
        return {"name": self.name, "provenance": self.provenance.value}

    @classmethod
    def from_dict(cls, data: dict) -> "DomainEntry":
        return cls(name=data["name"], provenance=Provenance(data["provenance"]))


@dataclass(frozen=True)
class DomainCatalog:
    """Ordered domain cue list; names unique case-insensitively."""

    entries: tuple[DomainEntry, ...]

    def __post_init__(self):
        if not self.entries:
            raise EmptyCatalog("domain catalog has no entries")
        seen = set()
        for entry in self.entries:
            key = entry.name.casefold()
            if key in seen:
                raise DuplicateDomain(f"domain {entry.name!r} listed more than once")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def lookup(self, name: str) -> DomainEntry | None:
        """Case-insensitive lookup. ``None`` is the explicit off-catalog result;
        this never raises, so every lookup has exactly two outcomes."""
        key = (name or "").strip().casefold()
        for entry in self.entries:
            if entry.name.casefold() == key:
                return entry
        return None

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "DomainCatalog":
        return cls(entries=tuple(DomainEntry.from_dict(e) for e in data["entries"]))


def load_domain_catalog(source: str | Path) -> DomainCatalog:
    """Parse a catalog file: one ``name <TAB> provenance`` record per line.

    Blank lines and ``#`` comment lines are skipped; file order is preserved.
    """
    path = Path(source)
    entries: list[DomainEntry] = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValidationError(f"{path.name}:{lineno}: expected 'name<TAB>provenance'")
        name, prov = parts[0].strip(), parts[1].strip()
        try:
            provenance = Provenance(prov)
        except ValueError:
            raise InvalidProvenance(
                f"{path.name}:{lineno}: provenance {prov!r} is not one of "
                f"{[p.value for p in Provenance]}"
            ) from None
        entries.append(DomainEntry(name=name, provenance=provenance))
    return DomainCatalog(entries=tuple(entries))


@dataclass(frozen=True)
class UseConcepts:
    """The five-field use schema: domain, purpose, capability, user, subject."""

    domain: str
    purpose: str
    capability: str
    ai_user: str
    ai_subject: str
    off_catalog: bool = False

    def __post_init__(self):
        for name in ("domain", "purpose", "capability", "ai_user", "ai_subject"):
            object.__setattr__(self, name, _require_text(getattr(self, name), name))

    def description(self) -> str:
        """The fixed rendering embedded when matching against the literature."""
        return f"{self.purpose}. {self.capability}. {self.domain}."

    def to_dict(self) -> dict:
        out = {
            "domain": self.domain,
            "purpose": self.purpose,
            "capability": self.capability,
            "ai_user": self.ai_user,
            "ai_subject": self.ai_subject,
        }
        if self.off_catalog:
            out["off_catalog"] = True
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "UseConcepts":
        return cls(
            domain=data["domain"],
            purpose=data["purpose"],
            capability=data["capability"],
            ai_user=data["ai_user"],
            ai_subject=data["ai_subject"],
            off_catalog=bool(data.get("off_catalog", False)),
        )

    def against_catalog(self, catalog: DomainCatalog) -> "UseConcepts":
        """Return a copy whose off-catalog marker reflects ``catalog``."""
        return replace(self, off_catalog=catalog.lookup(self.domain) is None)


@dataclass(frozen=True)
class RealisticnessVerdict:
    label: Realisticness
    justification: str

    def __post_init__(self):
        if not isinstance(self.label, Realisticness):
            object.__setattr__(self, "label", Realisticness(self.label))
        _require_text(self.justification, "justification")

    @property
    def realistic(self) -> bool:
        return self.label is not Realisticness.UNLIKELY

    def to_dict(self) -> dict:
        return {"label": self.label.value, "justification": self.justification}

    @classmethod
    def from_dict(cls, data: dict) -> "RealisticnessVerdict":
        return cls(label=Realisticness(data["label"]), justification=data["justification"])


@dataclass(frozen=True)
class TechnologyUse:
    use_id: str
    concepts: UseConcepts
    realisticness: RealisticnessVerdict
    summary: str = ""

    def __post_init__(self):
        _require_text(self.use_id, "use_id")
        if not self.summary.strip():
            object.__setattr__(self, "summary", self.concepts.purpose)

    def to_dict(self) -> dict:
        return {
            "use_id": self.use_id,
            "concepts": self.concepts.to_dict(),
            "realisticness": self.realisticness.to_dict(),
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TechnologyUse":
        return cls(
            use_id=data["use_id"],
            concepts=UseConcepts.from_dict(data["concepts"]),
            realisticness=RealisticnessVerdict.from_dict(data["realisticness"]),
            summary=data.get("summary", ""),
        )


@dataclass(frozen=True)
class RiskAssessment:
    """Four-field classification record bound to a use.

    Prohibited and high-risk assessments must cite an Act location inside
    ``relevant_text``; a high-severity claim without a citation is invalid.
    """

    use_id: str
    description: str
    classification: RiskTier
    reasoning: str
    relevant_text: str | None = None

    def __post_init__(self):
        _require_text(self.use_id, "use_id")
        _require_text(self.description, "description")
        _require_text(self.reasoning, "reasoning")
        if not isinstance(self.classification, RiskTier):
            object.__setattr__(self, "classification", RiskTier(self.classification))
        if self.classification in (RiskTier.PROHIBITED, RiskTier.HIGH_RISK):
            if not self.relevant_text or not find_act_locations(self.relevant_text):
                raise ValidationError(
                    f"{self.classification.value} assessment for use {self.use_id} "
                    "must cite an Act location in relevant_text"
                )

    def act_locations(self) -> list[str]:
        return find_act_locations(self.relevant_text or "")

    def to_dict(self) -> dict:
        return {
            "use_id": self.use_id,
            "description": self.description,
            "classification": self.classification.value,
            "relevant_text": self.relevant_text,
            "reasoning": self.reasoning,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RiskAssessment":
        return cls(
            use_id=data["use_id"],
            description=data["description"],
            classification=RiskTier(data["classification"]),
            reasoning=data["reasoning"],
            relevant_text=data.get("relevant_text"),
        )


@dataclass(frozen=True)
class UsePaperMatch:
    use_id: str
    paper_id: str
    similarity: float

    def __post_init__(self):
        if not -1.0 <= self.similarity <= 1.0:
            raise ValidationError(f"similarity {self.similarity} outside [-1, 1]")

    def to_dict(self) -> dict:
        return {"use_id": self.use_id, "paper_id": self.paper_id, "similarity": self.similarity}

    @classmethod
    def from_dict(cls, data: dict) -> "UsePaperMatch":
        return cls(use_id=data["use_id"], paper_id=data["paper_id"], similarity=data["similarity"])


@dataclass(frozen=True)
class OverlookedVerdict:
    use_id: str
    overlooked: bool
    supporting_papers: tuple[UsePaperMatch, ...]
    threshold_used: float

    def __post_init__(self):
        if self.overlooked != (len(self.supporting_papers) == 0):
            raise ValidationError(
                f"use {self.use_id}: overlooked flag must mirror an empty supporter list"
            )

    def to_dict(self) -> dict:
        return {
            "use_id": self.use_id,
            "overlooked": self.overlooked,
            "supporting_papers": [m.to_dict() for m in self.supporting_papers],
            "threshold_used": self.threshold_used,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OverlookedVerdict":
        return cls(
            use_id=data["use_id"],
            overlooked=data["overlooked"],
            supporting_papers=tuple(UsePaperMatch.from_dict(m) for m in data["supporting_papers"]),
            threshold_used=data["threshold_used"],
        )


@dataclass(frozen=True)
class LikertScore:
    item: LikertItem
    value: int

    def __post_init__(self):
        if not isinstance(self.item, LikertItem):
            object.__setattr__(self, "item", LikertItem(self.item))
        if not isinstance(self.value, int) or not 1 <= self.value <= 7:
            raise ValidationError(f"likert value {self.value!r} outside 1..7")


@dataclass(frozen=True)
class AnnotationCard:
    """One rater's judgments on one use.

    Compliance-expert cards carry the classification agreement block;
    developer cards must not. A disagreement requires a correction.
    """

    use_id: str
    rater_id: str
    cohort: Cohort
    realisticness_vote: Realisticness
    scores: tuple[LikertScore, ...]
    classification_agreement: AgreementVote | None = None
    corrected_classification: CorrectedTier | None = None
    reasoning_correction: str | None = None
    usefulness_notes: str | None = None

    def __post_init__(self):
        _require_text(self.use_id, "use_id")
        _require_text(self.rater_id, "rater_id")
        if not isinstance(self.cohort, Cohort):
            object.__setattr__(self, "cohort", Cohort(self.cohort))
        if not isinstance(self.realisticness_vote, Realisticness):
            object.__setattr__(self, "realisticness_vote", Realisticness(self.realisticness_vote))
        items = [s.item for s in self.scores]
        if sorted(i.value for i in items) != sorted(i.value for i in LikertItem):
            raise ValidationError(
                f"card ({self.use_id}, {self.rater_id}) must score each of the five "
                "7-point items exactly once"
            )
        order = {item: n for n, item in enumerate(LikertItem)}
        object.__setattr__(
            self, "scores", tuple(sorted(self.scores, key=lambda s: order[s.item]))
        )
        if self.cohort is Cohort.COMPLIANCE_EXPERT:
            if self.classification_agreement is None:
                raise ValidationError(
                    f"compliance card ({self.use_id}, {self.rater_id}) missing "
                    "classification_agreement"
                )
        elif self.classification_agreement is not None:
            raise ValidationError(
                f"developer card ({self.use_id}, {self.rater_id}) must not carry "
                "classification_agreement"
            )
        if self.classification_agreement is AgreementVote.DISAGREE:
            if self.corrected_classification is None:
                raise ValidationError(
                    f"card ({self.use_id}, {self.rater_id}) disagrees without a correction"
                )
        elif self.corrected_classification is not None:
            raise ValidationError(
                f"card ({self.use_id}, {self.rater_id}) carries a correction without disagreeing"
            )

    def score(self, item: LikertItem) -> int:
        for s in self.scores:
            if s.item is item:
                return s.value
        raise KeyError(item)

    def to_dict(self) -> dict:
        return {
            "use_id": self.use_id,
            "rater_id": self.rater_id,
            "cohort": self.cohort.value,
            "realisticness_vote": self.realisticness_vote.value,
            "scores": {s.item.value: s.value for s in self.scores},
            "classification_agreement": (
                self.classification_agreement.value if self.classification_agreement else None
            ),
            "corrected_classification": (
                self.corrected_classification.value if self.corrected_classification else None
            ),
            "reasoning_correction": self.reasoning_correction,
            "usefulness_notes": self.usefulness_notes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnnotationCard":
        return cls(
            use_id=data["use_id"],
            rater_id=data["rater_id"],
            cohort=Cohort(data["cohort"]),
            realisticness_vote=Realisticness(data["realisticness_vote"]),
            scores=tuple(
                LikertScore(item=LikertItem(k), value=v) for k, v in sorted(data["scores"].items())
            ),
            classification_agreement=(
                AgreementVote(data["classification_agreement"])
                if data.get("classification_agreement")
                else None
            ),
            corrected_classification=(
                CorrectedTier(data["corrected_classification"])
                if data.get("corrected_classification")
                else None
            ),
            reasoning_correction=data.get("reasoning_correction"),
            usefulness_notes=data.get("usefulness_notes"),
        )


@dataclass(frozen=True)
class RunConfig:
    """Snapshot of the knobs that shaped a run."""

    model_name: str = "gpt-4"
    temperature: float = 0.7
    uses_per_domain: int = 3
    percentile: float = 99.9

    def to_dict(self) -> dict:
        return {
            "model_name": self.model_name,
            "temperature": self.temperature,
            "uses_per_domain": self.uses_per_domain,
            "percentile": self.percentile,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        return cls(
            model_name=data.get("model_name", "gpt-4"),
            temperature=data.get("temperature", 0.7),
            uses_per_domain=data.get("uses_per_domain", 3),
            percentile=data.get("percentile", 99.9),
        )


RUN_STATES = ("pending", "generating", "classifying", "filtering", "ready", "failed")


@dataclass(frozen=True)
class RunArtifact:
    """A complete, replayable pipeline run."""

    run_id: str
    technology: str
    config: RunConfig
    uses: tuple[TechnologyUse, ...] = ()
    risk: tuple[RiskAssessment, ...] = ()
    overlooked: tuple[OverlookedVerdict, ...] = ()
    annotations: tuple[AnnotationCard, ...] = ()
    transcripts: tuple[str, ...] = ()
    created_at: str = field(default_factory=utc_now_iso)
    state: str = "ready"
    error: str | None = None
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        _require_text(self.run_id, "run_id")
        _require_text(self.technology, "technology")
        if self.state not in RUN_STATES:
            raise ValidationError(f"unknown run state {self.state!r}")
        ids = [u.use_id for u in self.uses]
        if len(set(ids)) != len(ids):
            raise ValidationError("use_id values must be unique within a run")
        known = set(ids)
        for kind, records in (("risk", self.risk), ("overlooked", self.overlooked),
                              ("annotation", self.annotations)):
            for record in records:
                if record.use_id not in known:
                    raise ValidationError(
                        f"{kind} record references unknown use_id {record.use_id!r}"
                    )
        seen_cards = set()
        for card in self.annotations:
            key = (card.use_id, card.rater_id)
            if key in seen_cards:
                raise ValidationError(f"more than one card for (use, rater) {key}")
            seen_cards.add(key)

    def use(self, use_id: str) -> TechnologyUse:
        for u in self.uses:
            if u.use_id == use_id:
                return u
        raise KeyError(use_id)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "run_id": self.run_id,
            "technology": self.technology,
            "config": self.config.to_dict(),
            "uses": [u.to_dict() for u in self.uses],
            "risk": [r.to_dict() for r in self.risk],
            "overlooked": [v.to_dict() for v in self.overlooked],
            "annotations": [c.to_dict() for c in self.annotations],
            "transcripts": list(self.transcripts),
            "created_at": self.created_at,
            "state": self.state,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunArtifact":
        return cls(
            run_id=data["run_id"],
            technology=data["technology"],
            config=RunConfig.from_dict(data.get("config", {})),
            uses=tuple(TechnologyUse.from_dict(u) for u in data.get("uses", [])),
            risk=tuple(RiskAssessment.from_dict(r) for r in data.get("risk", [])),
            overlooked=tuple(OverlookedVerdict.from_dict(v) for v in data.get("overlooked", [])),
            annotations=tuple(AnnotationCard.from_dict(c) for c in data.get("annotations", [])),
            transcripts=tuple(data.get("transcripts", [])),
            created_at=data.get("created_at", utc_now_iso()),
            state=data.get("state", "ready"),
            error=data.get("error"),
            schema_version=data.get("schema_version", SCHEMA_VERSION),
        )
