"""Stage orchestration: generate, classify, filter, with store-backed state.

Each stage persists its output before the next starts, so runs are
independently replayable per stage and the API can expose progress states
{pending, generating, classifying, filtering, ready, failed}.
"""

from __future__ import annotations

import uuid
from dataclasses import replace as dc_replace
from dataclasses import dataclass
from pathlib import Path

from .embeddings import get_provider
from .errors import UsescopeError
from .gateway import ChatGateway, GatewayMode
from .generation import GenerationTemplate, generate_uses
from .model import RunArtifact, RunConfig
from .overlooked import (
    build_index,
    calibrate_threshold,
    embed_uses,
    flag_overlooked,
    ingest_corpus,
    similarity_matrix,
)
from .risklabel import ActCorpus, classify_uses
from .store import RunStore


def new_run_id() -> str:
    return uuid.uuid4().hex[:12]


@dataclass
class PipelineDeps:
    """Everything a run needs beyond its own config; stage commands may leave
    the pieces they do not touch unset."""

    store: RunStore
    gateway: ChatGateway
    template: GenerationTemplate | None = None
    act_corpus: ActCorpus | None = None
    provider_spec: str = "hashed"
    corpus_path: str | Path | None = None


def _artifact(artifact: RunArtifact, **changes) -> RunArtifact:
    return dc_replace(artifact, **changes)


def start_run(deps: PipelineDeps, technology: str, config: RunConfig,
              run_id: str | None = None) -> RunArtifact:
    run_id = run_id or new_run_id()
    artifact = RunArtifact(run_id=run_id, technology=technology, config=config,
                          state="pending")
    deps.store.save_run(artifact)
    return artifact


def run_generation_stage(deps: PipelineDeps, artifact: RunArtifact,
                         mode: GatewayMode | str) -> RunArtifact:
    if deps.template is None:
        raise UsescopeError("generation stage needs a template")
    deps.store.update_run(_artifact(artifact, state="generating"))
    gateway = deps.gateway.with_transcripts(deps.store.transcripts(artifact.run_id))
    template = dc_replace(deps.template, uses_per_domain=artifact.config.uses_per_domain)
    result = generate_uses(
        artifact.technology, template, gateway, mode,
        model_name=artifact.config.model_name,
        temperature=artifact.config.temperature,
    )
    artifact = _artifact(
        artifact,
        uses=tuple(result.uses),
        transcripts=tuple(result.transcript_digests),
        state="generating",
    )
    deps.store.update_run(artifact)
    return artifact


def run_classification_stage(deps: PipelineDeps, artifact: RunArtifact,
                             mode: GatewayMode | str) -> tuple[RunArtifact, list[dict]]:
    if deps.act_corpus is None:
        raise UsescopeError("classification stage needs an Act excerpt corpus")
    deps.store.update_run(_artifact(artifact, state="classifying"))
    gateway = deps.gateway.with_transcripts(deps.store.transcripts(artifact.run_id))
    outcomes = classify_uses(
        list(artifact.uses), deps.act_corpus, gateway, mode,
        technology=artifact.technology,
        model_name=artifact.config.model_name,
    )
    assessments = tuple(o.assessment for o in outcomes if o.assessment is not None)
    errors = [
        {"use_id": o.use_id, **(o.error or {})} for o in outcomes if o.assessment is None
    ]
    artifact = _artifact(
        artifact,
        risk=assessments,
        transcripts=tuple(list(artifact.transcripts) + [o.transcript_digest for o in outcomes]),
        state="classifying",
    )
    deps.store.update_run(artifact)
    return artifact, errors


def run_overlooked_stage(deps: PipelineDeps, artifact: RunArtifact,
                         corpus_path: str | Path | None = None,
                         per_pair: bool = False) -> tuple[RunArtifact, dict]:
    deps.store.update_run(_artifact(artifact, state="filtering"))
    path = corpus_path or deps.corpus_path
    if path is None:
        raise UsescopeError("no literature corpus configured for the overlooked stage")
    papers, ingest_report = ingest_corpus(path)
    provider = get_provider(deps.provider_spec)
    index = build_index(papers, provider)
    index.save(deps.store.run_dir(artifact.run_id) / "index")
    uses = list(artifact.uses)
    vectors = embed_uses(uses, provider)
    sims = similarity_matrix(index, vectors)
    threshold, calibration = calibrate_threshold(
        index, vectors, artifact.config.percentile, per_pair=per_pair, sims=sims
    )
    verdicts = flag_overlooked(uses, vectors, index, threshold, sims=sims)
    artifact = _artifact(artifact, overlooked=tuple(verdicts), state="ready")
    deps.store.update_run(artifact)
    return artifact, {
        "ingest": ingest_report.to_dict(),
        "calibration": calibration.to_dict(),
        "overlooked": sum(1 for v in verdicts if v.overlooked),
    }


def execute_stages(deps: PipelineDeps, artifact: RunArtifact,
                   mode: GatewayMode | str, per_pair: bool = False) -> RunArtifact:
    """Drive a started run through all three stages; on failure the stored
    run carries the failing stage's name."""
    stage = "generating"
    try:
        artifact = run_generation_stage(deps, artifact, mode)
        stage = "classifying"
        artifact, _ = run_classification_stage(deps, artifact, mode)
        stage = "filtering"
        artifact, _ = run_overlooked_stage(deps, artifact, per_pair=per_pair)
    except Exception as exc:
        failed = _artifact(artifact, state="failed", error=f"{stage}: {exc}")
        deps.store.update_run(failed)
        raise
    return artifact


def execute_run(deps: PipelineDeps, technology: str, config: RunConfig,
                mode: GatewayMode | str, run_id: str | None = None,
                per_pair: bool = False) -> RunArtifact:
    artifact = start_run(deps, technology, config, run_id=run_id)
    return execute_stages(deps, artifact, mode, per_pair=per_pair)
