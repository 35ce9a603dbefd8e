"""Risk-tier classification of uses against EU AI Act excerpts.

A judge-role prompt is grounded in Act excerpts, asks the model to first
expand the concise use into a hypothetical system description, and requests
a four-field structured answer: description, classification, relevant text
from the Act, reasoning. Prohibited and high-risk answers must cite an Act
location.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from pathlib import Path

from .errors import (
    IncompleteCorpus,
    MalformedOutput,
    MissingReasoning,
    ParseError,
    UncitedHighSeverity,
    UnknownClassification,
    UsescopeError,
    ValidationError,
)
from .gateway import ChatGateway, ChatRequest, GatewayMode, ResponseHint, request_digest
from .model import RiskAssessment, RiskTier, TechnologyUse, find_act_locations

JUDGE_ROLE = (
    "You are an Experienced Judge who works in the field of AI technology regulation. "
    "You are thoughtful, decisive, experienced and conscientious. You have access to "
    "the entirety of the EU AI Act."
)

_TIER_FORMS = {
    "prohibited": RiskTier.PROHIBITED,
    "high risk": RiskTier.HIGH_RISK,
    "limited or low risk": RiskTier.LIMITED_OR_LOW_RISK,
}


def normalize_tier(raw: str) -> RiskTier | None:
    key = re.sub(r"[\s_/-]+", " ", (raw or "").strip().lower())
    return _TIER_FORMS.get(key)


@dataclass(frozen=True)
class ActExcerpt:
    location: str
    text: str

    def __post_init__(self):
        if not self.location.strip() or not self.text.strip():
            raise ValidationError("excerpt location and text must be non-empty")


@dataclass(frozen=True)
class ActCorpus:
    """Editable excerpt set; must cover at least Article 5 and Annex III."""

    excerpts: tuple[ActExcerpt, ...]

    def __post_init__(self):
        locations = [e.location for e in self.excerpts]
        if len(set(locations)) != len(locations):
            raise ValidationError("excerpt locations must be unique")
        if not self._covers(r"article\s+5\b"):
            raise IncompleteCorpus("corpus is missing an Article 5 excerpt")
        if not self._covers(r"annex\s+iii\b"):
            raise IncompleteCorpus("corpus is missing an Annex III excerpt")

    def _covers(self, pattern: str) -> bool:
        return any(re.search(pattern, e.location, re.IGNORECASE) for e in self.excerpts)


def parse_act_excerpts(text: str) -> list[ActExcerpt]:
    """Parse ``location <newline> text`` blocks separated by blank lines."""
    excerpts = []
    for block in re.split(r"\n\s*\n", text.strip()):
        lines = block.strip().splitlines()
        if len(lines) < 2:
            raise ValidationError(
                f"excerpt block must be a location line plus text: {block[:80]!r}"
            )
        excerpts.append(ActExcerpt(location=lines[0].strip(), text="\n".join(lines[1:]).strip()))
    return excerpts


def load_act_corpus(source: str | Path) -> ActCorpus:
    """Load one excerpt file, or every ``*.txt`` in a directory (sorted)."""
    path = Path(source)
    files = sorted(path.glob("*.txt")) if path.is_dir() else [path]
    excerpts: list[ActExcerpt] = []
    for f in files:
        excerpts.extend(parse_act_excerpts(f.read_text(encoding="utf-8")))
    return ActCorpus(excerpts=tuple(excerpts))


def build_risk_prompt(
    use: TechnologyUse,
    corpus: ActCorpus,
    technology: str = "AI technology",
    model_name: str = "gpt-4",
    temperature: float = 0.0,
) -> ChatRequest:
    """Render the classification request for one use; deterministic."""
    lines: list[str] = []
    lines.append("## Instructions")
    lines.append(
        f"1. Expand the concise {technology} use below into a description of a "
        "hypothetical AI system that employs it."
    )
    lines.append(
        "2. Consider the EU AI Act excerpts and amendments provided below, and classify "
        'the system as "prohibited", or "high risk", or, otherwise, as "limited or low risk".'
    )
    lines.append("")
    lines.append("## Relevant sections of the EU AI Act")
    for excerpt in corpus.excerpts:
        lines.append(excerpt.location)
        lines.append(excerpt.text)
        lines.append("")
    lines.append("## Use to assess")
    for fname, value in (
        ("Domain", use.concepts.domain),
        ("Purpose", use.concepts.purpose),
        ("Capability", use.concepts.capability),
        ("AI user", use.concepts.ai_user),
        ("AI subject", use.concepts.ai_subject),
    ):
        lines.append(f"- {fname}: {value}")
    lines.append("")
    lines.append("## Output structure")
    lines.append("Answer with a JSON object carrying exactly these fields:")
    lines.append("- description: a clear understanding of the intended use of the AI system")
    lines.append(
        "- classification: either prohibited, high risk, or limited or low risk"
    )
    lines.append(
        "- relevant_text: if applicable, a quote from the EU AI Act along with the relevant "
        "article, annex, or amendment for legal context"
    )
    lines.append(
        "- reasoning: the explanation that rationalises the risk classification of this use"
    )
    return ChatRequest(
        system_text=JUDGE_ROLE,
        user_text="\n".join(lines),
        model_name=model_name,
        temperature=temperature,
        response_hint=ResponseHint.OBJECT_NOTATION,
    )


_FIELD_LINE_RE = re.compile(
    r"^\s*(?:[-*]\s*)?(description|classification|relevant[ _]text(?:[ _]from[ _]the[ _]act)?|"
    r"reasoning)\s*[:：]\s*(.*)$",
    re.IGNORECASE,
)


def _parse_labeled_lines(text: str) -> dict:
    fields: dict[str, list[str]] = {}
    current: str | None = None
    for line in text.splitlines():
        match = _FIELD_LINE_RE.match(line)
        if match:
            name = re.sub(r"[ _]+", "_", match.group(1).strip().lower())
            current = "relevant_text" if name.startswith("relevant_text") else name
            fields[current] = [match.group(2).strip()]
        elif current is not None and line.strip():
            fields[current].append(line.strip())
    return {k: " ".join(v).strip() for k, v in fields.items()}


def parse_risk_response(response: str, use_id: str) -> RiskAssessment:
    """Extract the four-field assessment from a model response.

    Accepts a JSON object (fenced or bare) or ``Field: value`` labeled lines.
    """
    text = response.strip()
    stripped = re.sub(r"^```[a-zA-Z]*\n|\n```$", "", text)
    data: dict | None = None
    try:
        parsed = json.loads(stripped)
        if isinstance(parsed, dict):
            data = {re.sub(r"[ _]+", "_", str(k).strip().lower()): v for k, v in parsed.items()}
            if "relevant_text_from_the_act" in data:
                data["relevant_text"] = data.pop("relevant_text_from_the_act")
    except json.JSONDecodeError:
        data = None
    if data is None:
        data = _parse_labeled_lines(text)
    if not data or "classification" not in data:
        raise MalformedOutput(
            f"response for use {use_id} has no recognizable classification", text[:300]
        )

    raw_tier = str(data.get("classification", "")).strip()
    tier = normalize_tier(raw_tier)
    if tier is None:
        raise UnknownClassification(raw_tier, text[:300])

    reasoning = str(data.get("reasoning", "") or "").strip()
    if not reasoning:
        raise MissingReasoning(f"response for use {use_id} has no reasoning", text[:300])

    description = str(data.get("description", "") or "").strip()
    if not description:
        raise MalformedOutput(f"response for use {use_id} has no description", text[:300])

    relevant_raw = data.get("relevant_text")
    relevant = str(relevant_raw).strip() if relevant_raw else None
    if tier in (RiskTier.PROHIBITED, RiskTier.HIGH_RISK):
        if not relevant or not find_act_locations(relevant):
            raise UncitedHighSeverity(
                f"{tier.value} verdict for use {use_id} cites no Act location", text[:300]
            )
    return RiskAssessment(
        use_id=use_id,
        description=description,
        classification=tier,
        reasoning=reasoning,
        relevant_text=relevant,
    )


@dataclass
class RiskOutcome:
    """Per-use result; a failed use carries an error record, not an abort."""

    use_id: str
    assessment: RiskAssessment | None
    transcript_digest: str
    error: dict | None = None


def classify_uses(
    uses: list[TechnologyUse],
    corpus: ActCorpus,
    gateway: ChatGateway,
    mode: GatewayMode | str,
    technology: str = "AI technology",
    model_name: str = "gpt-4",
    temperature: float = 0.0,
    max_workers: int = 4,
) -> list[RiskOutcome]:
    """Classify each use, fanning out gateway calls up to ``max_workers``.

    Output order matches input order; per-use failures are recorded inline.
    """
    mode = GatewayMode(mode)
    requests = [
        build_risk_prompt(u, corpus, technology=technology,
                          model_name=model_name, temperature=temperature)
        for u in uses
    ]

    def run_one(pair: tuple[TechnologyUse, ChatRequest]) -> RiskOutcome:
        use, request = pair
        digest = request_digest(request)
        try:
            response = gateway.complete(request, mode)
            assessment = parse_risk_response(response, use.use_id)
        except (UsescopeError, ParseError) as exc:
            payload = exc.payload() if isinstance(exc, UsescopeError) else {"detail": str(exc)}
            return RiskOutcome(use.use_id, None, digest, error=payload)
        return RiskOutcome(use.use_id, assessment, digest)

    pairs = list(zip(uses, requests))
    if len(pairs) > 1 and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(run_one, pairs))
    return [run_one(p) for p in pairs]


def risk_distribution(assessments: list[RiskAssessment]) -> dict:
    """Tier counts with one-decimal and integer-rounded percentage views."""
    counts = {tier.value: 0 for tier in RiskTier}
    for a in assessments:
        counts[a.classification.value] += 1
    total = len(assessments)
    if total == 0:
        return {
            "total": 0,
            "counts": counts,
            "percent": {tier.value: None for tier in RiskTier},
            "percent_int": {tier.value: None for tier in RiskTier},
        }
    return {
        "total": total,
        "counts": counts,
        "percent": {k: round(v * 100.0 / total, 1) for k, v in counts.items()},
        "percent_int": {k: round(v * 100.0 / total) for k, v in counts.items()},
    }
