"""Candidate-use generation: prompt assembly, output parsing, dedup, partition.

The generation prompt is assembled from five documented elements (system
role, three-part instruction, concept definitions, realisticness
definitions, domain cue list, few-shot examples) with the examples section
rendered last. The model is asked for a JSON list of records carrying the
five use concepts plus a realisticness label and one-sentence justification.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    EmptyTechnology,
    IncompleteUse,
    MalformedOutput,
    ParseError,
    UnknownLabel,
    ValidationError,
)
from .gateway import ChatGateway, ChatRequest, GatewayMode, ResponseHint, request_digest
from .model import (
    DomainCatalog,
    Realisticness,
    RealisticnessVerdict,
    TechnologyUse,
    UseConcepts,
)

TECHNOLOGY_PLACEHOLDER = "[Technology X]"
USES_PER_DOMAIN_PLACEHOLDER = "[Uses Per Domain]"

CONCEPT_FIELDS = ("domain", "purpose", "capability", "ai_user", "ai_subject")

# Surface forms accepted for the three realisticness labels.
_LABEL_FORMS = {
    "already existent": Realisticness.ALREADY_EXISTENT,
    "already existing": Realisticness.ALREADY_EXISTENT,
    "existent": Realisticness.ALREADY_EXISTENT,
    "upcoming": Realisticness.UPCOMING,
    "unlikely": Realisticness.UNLIKELY,
}

_FIELD_ALIASES = {
    "domain": "domain",
    "purpose": "purpose",
    "capability": "capability",
    "ai_user": "ai_user",
    "user": "ai_user",
    "ai_subject": "ai_subject",
    "subject": "ai_subject",
    "realisticness": "realisticness",
    "realisticness_label": "realisticness",
    "category": "realisticness",
    "justification": "justification",
    "reasoning": "justification",
}


def normalize_label(raw: str) -> Realisticness | None:
    key = re.sub(r"[\s_]+", " ", (raw or "").strip().lower())
    return _LABEL_FORMS.get(key)


@dataclass(frozen=True)
class GenerationTemplate:
    """The five prompt elements plus the per-domain use count."""

    system_role: str
    instruction: tuple[str, str, str]
    concept_definitions: dict[str, str]
    realisticness_definitions: dict[str, str]
    domains: DomainCatalog
    examples: tuple[dict, ...]
    uses_per_domain: int = 3

    def __post_init__(self):
        if len(self.instruction) != 3:
            raise ValidationError("instruction must have exactly three parts")
        if set(self.concept_definitions) != set(CONCEPT_FIELDS):
            raise ValidationError(f"concept definitions must cover {CONCEPT_FIELDS}")
        if set(self.realisticness_definitions) != {r.value for r in Realisticness}:
            raise ValidationError("realisticness definitions must cover the three labels")
        if len(self.examples) != 5:
            raise ValidationError("template must carry exactly five examples")
        if self.uses_per_domain not in (2, 3):
            raise ValidationError("uses_per_domain must be 2 or 3")

    @classmethod
    def load(cls, path: str | Path, catalog: DomainCatalog,
             uses_per_domain: int | None = None) -> "GenerationTemplate":
        """Read a template file; ``domains`` in the file, when present, selects
        a subset of ``catalog`` (names must resolve), otherwise the full
        catalog is used."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        domains = catalog
        if data.get("domains"):
            entries = []
            for name in data["domains"]:
                entry = catalog.lookup(name)
                if entry is None:
                    raise ValidationError(f"template domain {name!r} is not in the catalog")
                entries.append(entry)
            domains = DomainCatalog(entries=tuple(entries))
        return cls(
            system_role=data["system_role"],
            instruction=tuple(data["instruction"]),
            concept_definitions=dict(data["concept_definitions"]),
            realisticness_definitions=dict(data["realisticness_definitions"]),
            domains=domains,
            examples=tuple(data["examples"]),
            uses_per_domain=uses_per_domain or data.get("uses_per_domain", 3),
        )

    def with_domains(self, domains: DomainCatalog) -> "GenerationTemplate":
        return GenerationTemplate(
            system_role=self.system_role,
            instruction=self.instruction,
            concept_definitions=self.concept_definitions,
            realisticness_definitions=self.realisticness_definitions,
            domains=domains,
            examples=self.examples,
            uses_per_domain=self.uses_per_domain,
        )


def _fill(text: str, technology: str, uses_per_domain: int) -> str:
    return text.replace(TECHNOLOGY_PLACEHOLDER, technology).replace(
        USES_PER_DOMAIN_PLACEHOLDER, str(uses_per_domain)
    )


def build_generation_prompt(
    technology: str,
    template: GenerationTemplate,
    model_name: str = "gpt-4",
    temperature: float = 0.7,
) -> ChatRequest:
    """Render the generation request; identical inputs render identical text."""
    if not technology or not technology.strip():
        raise EmptyTechnology("technology name must be non-empty")
    technology = technology.strip()
    n = template.uses_per_domain

    system_text = _fill(template.system_role, technology, n)

    lines: list[str] = []
    lines.append("## Instructions")
    for i, part in enumerate(template.instruction, start=1):
        lines.append(f"{i}. {_fill(part, technology, n)}")
    lines.append("")
    lines.append("## Concept definitions")
    for concept in CONCEPT_FIELDS:
        lines.append(f"- {concept}: {template.concept_definitions[concept]}")
    lines.append("")
    lines.append("## Realisticness categories")
    for label in Realisticness:
        lines.append(f"- {label.value}: {template.realisticness_definitions[label.value]}")
    lines.append("")
    lines.append(f"## Domains (generate exactly {n} uses per domain)")
    for i, name in enumerate(template.domains.names(), start=1):
        lines.append(f"{i}. {name}")
    lines.append("")
    lines.append("## Examples")
    lines.append(json.dumps(
        [{k: v for k, v in example.items() if k != "origin"} for example in template.examples],
        indent=2, ensure_ascii=False,
    ))

    return ChatRequest(
        system_text=system_text,
        user_text="\n".join(lines),
        model_name=model_name,
        temperature=temperature,
        response_hint=ResponseHint.OBJECT_NOTATION,
    )


@dataclass
class ParsedUses:
    uses: list[TechnologyUse] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)


def _strip_fences(text: str) -> str:
    stripped = text.strip()
    if stripped.startswith("```"):
        stripped = re.sub(r"^```[a-zA-Z]*\n", "", stripped)
        stripped = re.sub(r"\n```$", "", stripped.rstrip())
    return stripped


def _normalize_record(raw: dict) -> dict:
    out = {}
    for key, value in raw.items():
        canonical = _FIELD_ALIASES.get(re.sub(r"[\s_]+", "_", str(key).strip().lower()))
        if canonical and canonical not in out:
            out[canonical] = value
    return out


def _parse_record(index: int, raw, catalog: DomainCatalog | None) -> TechnologyUse:
    fragment = json.dumps(raw, ensure_ascii=False)[:300]
    if not isinstance(raw, dict):
        raise MalformedOutput(f"record {index} is not an object", fragment)
    record = _normalize_record(raw)
    for fname in CONCEPT_FIELDS:
        value = record.get(fname)
        if not isinstance(value, str) or not value.strip():
            raise IncompleteUse(index, fname, fragment)
    label_raw = record.get("realisticness")
    if not isinstance(label_raw, str) or not label_raw.strip():
        raise IncompleteUse(index, "realisticness", fragment)
    label = normalize_label(label_raw)
    if label is None:
        raise UnknownLabel(index, label_raw, fragment)
    justification = record.get("justification")
    if not isinstance(justification, str) or not justification.strip():
        raise IncompleteUse(index, "justification", fragment)

    concepts = UseConcepts(
        domain=record["domain"],
        purpose=record["purpose"],
        capability=record["capability"],
        ai_user=record["ai_user"],
        ai_subject=record["ai_subject"],
    )
    if catalog is not None:
        concepts = concepts.against_catalog(catalog)
    return TechnologyUse(
        use_id=str(index + 1),
        concepts=concepts,
        realisticness=RealisticnessVerdict(label=label, justification=justification.strip()),
    )


def parse_uses_response(
    response: str,
    catalog: DomainCatalog | None = None,
    strict: bool = False,
) -> ParsedUses:
    """Parse the model's JSON list into uses with sequential ids.

    Lenient mode (default) skips malformed records and reports them; strict
    mode raises on the first bad record. Both modes accept the same set of
    valid records. Accepts a bare JSON array or an object whose ``uses`` key
    holds the array, with or without a markdown code fence.
    """
    text = _strip_fences(response)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedOutput(f"response is not parseable JSON: {exc}", text[:300]) from exc
    if isinstance(data, dict) and isinstance(data.get("uses"), list):
        data = data["uses"]
    if not isinstance(data, list):
        raise MalformedOutput("top-level JSON is not a list of use records", text[:300])

    outcome = ParsedUses()
    for index, raw in enumerate(data):
        try:
            use = _parse_record(index, raw, catalog)
        except ParseError as exc:
            if strict:
                raise
            outcome.skipped.append(exc.payload() | {"index": index})
            continue
        outcome.uses.append(use)
    # Re-sequence so ids stay dense when lenient mode skipped records.
    outcome.uses = [
        TechnologyUse(
            use_id=str(i + 1),
            concepts=u.concepts,
            realisticness=u.realisticness,
            summary=u.summary,
        )
        for i, u in enumerate(outcome.uses)
    ]
    return outcome


def dedup_key(use: TechnologyUse) -> str:
    parts = (
        use.concepts.domain,
        use.concepts.purpose,
        use.concepts.ai_user,
        use.concepts.ai_subject,
    )
    return re.sub(r"\s+", " ", " ".join(parts).lower()).strip()


def deduplicate_uses(uses: list[TechnologyUse]) -> list[TechnologyUse]:
    """Drop records whose normalized key repeats an earlier one; order is
    otherwise preserved and ids are re-sequenced."""
    seen: set[str] = set()
    kept: list[TechnologyUse] = []
    for use in uses:
        key = dedup_key(use)
        if key in seen:
            continue
        seen.add(key)
        kept.append(use)
    return [
        TechnologyUse(
            use_id=str(i + 1),
            concepts=u.concepts,
            realisticness=u.realisticness,
            summary=u.summary,
        )
        for i, u in enumerate(kept)
    ]


def partition_by_realisticness(
    uses: list[TechnologyUse],
) -> tuple[list[TechnologyUse], list[TechnologyUse]]:
    """Split into (realistic, unlikely), both in original order."""
    realistic = [u for u in uses if u.realisticness.realistic]
    unlikely = [u for u in uses if not u.realisticness.realistic]
    return realistic, unlikely


@dataclass
class GenerationResult:
    uses: list[TechnologyUse]
    transcript_digests: list[str]
    counts: dict
    skipped: list[dict]


def _chunk_catalogs(catalog: DomainCatalog, chunk_size: int) -> list[DomainCatalog]:
    entries = catalog.entries
    return [
        DomainCatalog(entries=entries[i : i + chunk_size])
        for i in range(0, len(entries), chunk_size)
    ]


def generate_uses(
    technology: str,
    template: GenerationTemplate,
    gateway: ChatGateway,
    mode: GatewayMode | str,
    model_name: str = "gpt-4",
    temperature: float = 0.7,
    chunk_domains: int | None = None,
    strict: bool = False,
) -> GenerationResult:
    """Run build -> complete -> parse -> dedup and report per-stage counts.

    By default one request covers every domain; ``chunk_domains`` switches to
    per-chunk requests (for small context windows) whose results are merged
    in catalog order before dedup.
    """
    mode = GatewayMode(mode)
    if chunk_domains:
        templates = [template.with_domains(c) for c in
                     _chunk_catalogs(template.domains, chunk_domains)]
    else:
        templates = [template]
    requests = [
        build_generation_prompt(technology, t, model_name=model_name, temperature=temperature)
        for t in templates
    ]

    def fetch(req: ChatRequest) -> str:
        return gateway.complete(req, mode)

    if len(requests) > 1:
        with ThreadPoolExecutor(max_workers=min(4, len(requests))) as pool:
            responses = list(pool.map(fetch, requests))
    else:
        responses = [fetch(requests[0])]

    all_uses: list[TechnologyUse] = []
    skipped: list[dict] = []
    for response in responses:
        outcome = parse_uses_response(response, catalog=template.domains, strict=strict)
        all_uses.extend(outcome.uses)
        skipped.extend(outcome.skipped)
    raw_count = len(all_uses) + len(skipped)

    deduped = deduplicate_uses(all_uses)
    realistic, unlikely = partition_by_realisticness(deduped)
    return GenerationResult(
        uses=deduped,
        transcript_digests=[request_digest(r) for r in requests],
        counts={
            "raw_parsed": raw_count,
            "parsed": len(all_uses),
            "after_dedup": len(deduped),
            "realistic": len(realistic),
            "unlikely": len(unlikely),
        },
        skipped=skipped,
    )
