"""Command-line entry point: generate, classify, overlooked, evaluate,
report, export, serve.

Subcommands mirror the pipeline stages, so a full run is
``generate && classify && overlooked && report`` and each stage is
independently replayable. Exit codes: 0 success, 1 usage, 2 pipeline,
3 store, 4 network.
"""

from __future__ import annotations

import csv
import io
import sys
from pathlib import Path

import click

from .config import (
    CliConfig,
    default_act_path,
    default_catalog_path,
    default_ground_truth_path,
    default_template_path,
)
from .embeddings import get_provider
from .errors import (
    GatewayError,
    ParseError,
    StoreError,
    UsescopeError,
    ValidationError,
)
from .evaluation import (
    CoverageMatch,
    export_annotations_csv,
    import_annotations_csv,
    load_ground_truth,
    quality_gate,
)
from .gateway import ChatGateway, GatewayMode
from .generation import GenerationTemplate
from .jsonutil import stable_json
from .model import RunArtifact, RunConfig, load_domain_catalog
from .pipeline import (
    PipelineDeps,
    new_run_id,
    run_classification_stage,
    run_generation_stage,
    run_overlooked_stage,
    start_run,
)
from .reporting import (
    build_run_report,
    render_report_machine,
    render_report_text,
    render_uses_csv,
)
from .risklabel import load_act_corpus
from .store import RunStore


def _emit(payload: dict, fmt: str, text_renderer=None) -> None:
    if fmt == "machine":
        click.echo(stable_json(payload), nl=False)
    elif text_renderer is not None:
        click.echo(text_renderer(payload), nl=False)
    else:
        for key, value in payload.items():
            click.echo(f"{key}: {value}")


def _store(config: CliConfig) -> RunStore:
    return RunStore(config.store_dir)


def _gateway(config: CliConfig) -> ChatGateway:
    return ChatGateway(
        endpoint=config.endpoint,
        api_key=config.api_key,
        max_retries=config.retries,
        timeout=config.timeout,
    )


_shared = [
    click.option("--store", "store_dir", default=None, help="Run store directory."),
    click.option("--config", "config_path", default=None, help="Config file path."),
    click.option("--format", "fmt", type=click.Choice(["text", "machine"]),
                 default="text", help="Output format."),
]


def shared_options(command):
    for option in reversed(_shared):
        command = option(command)
    return command


@click.group()
def cli():
    """Use-and-risk exploration pipeline workbench."""


@cli.command()
@click.option("--technology", required=True, help="Technology under exploration.")
@click.option("--template", "template_path", default=None,
              help="Generation template file (defaults to the reference template).")
@click.option("--catalog", "catalog_path", default=None,
              help="Domain catalog file (defaults to the reference catalog).")
@click.option("--uses-per-domain", type=click.Choice(["2", "3"]), default=None)
@click.option("--mode", type=click.Choice(["live", "replay", "record"]), default=None)
@click.option("--run", "run_id", default=None, help="Run id (generated when omitted).")
@click.option("--temperature", type=float, default=None)
@shared_options
def generate(technology, template_path, catalog_path, uses_per_domain, mode,
             run_id, temperature, store_dir, config_path, fmt):
    """Generate candidate uses and store them as a new run."""
    config = CliConfig.resolve(
        {"store_dir": store_dir, "mode": mode, "temperature": temperature},
        config_path)
    catalog = load_domain_catalog(catalog_path or default_catalog_path())
    template = GenerationTemplate.load(
        template_path or default_template_path(), catalog,
        uses_per_domain=int(uses_per_domain) if uses_per_domain else None)
    store = _store(config)
    deps = PipelineDeps(store=store, gateway=_gateway(config), template=template,
                        act_corpus=None)
    run_config = RunConfig(model_name=config.model, temperature=config.temperature,
                           uses_per_domain=template.uses_per_domain)
    artifact = start_run(deps, technology, run_config, run_id=run_id or new_run_id())
    artifact = run_generation_stage(deps, artifact, GatewayMode(config.mode))
    realistic = sum(1 for u in artifact.uses if u.realisticness.realistic)
    _emit({
        "run_id": artifact.run_id,
        "uses": len(artifact.uses),
        "realistic": realistic,
        "unlikely": len(artifact.uses) - realistic,
    }, fmt)


@cli.command()
@click.option("--run", "run_id", required=True)
@click.option("--corpus", "corpus_path", default=None,
              help="Act excerpt file or directory (defaults to the shipped excerpts).")
@click.option("--mode", type=click.Choice(["live", "replay", "record"]), default=None)
@shared_options
def classify(run_id, corpus_path, mode, store_dir, config_path, fmt):
    """Classify a run's uses against the Act excerpts."""
    config = CliConfig.resolve({"store_dir": store_dir, "mode": mode}, config_path)
    store = _store(config)
    artifact = store.load_run(run_id)
    act = load_act_corpus(corpus_path or default_act_path())
    deps = PipelineDeps(store=store, gateway=_gateway(config), template=None,
                        act_corpus=act)
    artifact, errors = run_classification_stage(deps, artifact, GatewayMode(config.mode))
    counts = {tier: 0 for tier in ("prohibited", "high_risk", "limited_or_low_risk")}
    for assessment in artifact.risk:
        counts[assessment.classification.value] += 1
    _emit({"run_id": run_id, "assessed": len(artifact.risk), "errors": errors} | counts, fmt)


@cli.command()
@click.option("--run", "run_id", required=True)
@click.option("--corpus", "corpus_path", required=True,
              help="Line-delimited literature dump (paper_id/title/abstract/venue/language).")
@click.option("--percentile", type=float, default=99.9, show_default=True)
@click.option("--per-pair", is_flag=True, default=False,
              help="Calibrate on all pair similarities instead of per-paper maxima.")
@click.option("--provider", "provider_spec", default=None,
              help="Embedding provider: hashed[:dim], local[:model], remote.")
@shared_options
def overlooked(run_id, corpus_path, percentile, per_pair, provider_spec,
               store_dir, config_path, fmt):
    """Flag uses with no supporting paper in the literature corpus."""
    config = CliConfig.resolve(
        {"store_dir": store_dir, "provider": provider_spec}, config_path)
    store = _store(config)
    artifact = store.load_run(run_id)
    artifact = artifact.__class__.from_dict(
        artifact.to_dict() | {"config": artifact.config.to_dict() | {"percentile": percentile}}
    )
    deps = PipelineDeps(store=store, gateway=_gateway(config), template=None,
                        act_corpus=None, provider_spec=config.provider,
                        corpus_path=corpus_path)
    artifact, summary = run_overlooked_stage(deps, artifact, per_pair=per_pair)
    _emit({"run_id": run_id} | summary, fmt)


@cli.command()
@click.option("--run", "run_id", required=True)
@click.option("--annotations", "annotations_path", default=None,
              help="Annotation CSV; when omitted the run's stored cards are used.")
@click.option("--gt", "gt_path", default=None,
              help="Ground-truth use list (defaults to the shipped fixture).")
@click.option("--matches", "matches_path", default=None,
              help="Coverage match decisions (JSON list).")
@click.option("--checks", "checks_path", default=None,
              help="Attention-check outcomes CSV: rater_id,check1,check2,check3.")
@shared_options
def evaluate(run_id, annotations_path, gt_path, matches_path, checks_path,
             store_dir, config_path, fmt):
    """Compute the metric battery over a run's annotations."""
    import json as _json

    config = CliConfig.resolve({"store_dir": store_dir}, config_path)
    store = _store(config)
    artifact = store.load_run(run_id)
    if annotations_path:
        cards = import_annotations_csv(Path(annotations_path).read_text(encoding="utf-8"))
        artifact = RunArtifact.from_dict(
            artifact.to_dict() | {"annotations": [c.to_dict() for c in cards]}
        )
    dropped_raters: list[str] = []
    if checks_path:
        reader = csv.DictReader(io.StringIO(Path(checks_path).read_text(encoding="utf-8")))
        for row in reader:
            outcomes = [row[f"check{i}"].strip().lower() == "correct" for i in (1, 2, 3)]
            if not quality_gate(outcomes):
                dropped_raters.append(row["rater_id"])
        if dropped_raters:
            kept = [c for c in artifact.annotations if c.rater_id not in dropped_raters]
            artifact = RunArtifact.from_dict(
                artifact.to_dict() | {"annotations": [c.to_dict() for c in kept]}
            )
    gt = None
    matches = None
    if matches_path:
        gt = load_ground_truth(gt_path or default_ground_truth_path())
        matches = [CoverageMatch.from_dict(m)
                   for m in _json.loads(Path(matches_path).read_text(encoding="utf-8"))]
    report = build_run_report(artifact, gt=gt, matches=matches)
    if dropped_raters:
        report["raters_failing_quality_gate"] = sorted(dropped_raters)
    _emit(report, fmt, text_renderer=render_report_text)


@cli.command()
@click.option("--run", "run_id", required=True)
@shared_options
def report(run_id, store_dir, config_path, fmt):
    """Render the run report (risk tiers, overlooked count, evaluation)."""
    config = CliConfig.resolve({"store_dir": store_dir}, config_path)
    artifact = _store(config).load_run(run_id)
    payload = build_run_report(artifact)
    if fmt == "machine":
        click.echo(render_report_machine(payload), nl=False)
    else:
        click.echo(render_report_text(payload), nl=False)


@cli.command()
@click.option("--run", "run_id", required=True)
@click.option("--kind", type=click.Choice(["uses", "annotations"]), default="uses",
              show_default=True)
@shared_options
def export(run_id, kind, store_dir, config_path, fmt):
    """Export a run as CSV (uses table or annotation cards)."""
    config = CliConfig.resolve({"store_dir": store_dir}, config_path)
    artifact = _store(config).load_run(run_id)
    if kind == "uses":
        click.echo(render_uses_csv(artifact), nl=False)
    else:
        click.echo(export_annotations_csv(list(artifact.annotations)), nl=False)


@cli.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--corpus", "corpus_path", default=None,
              help="Literature corpus used by server-triggered runs.")
@shared_options
def serve(port, host, corpus_path, store_dir, config_path, fmt):
    """Serve the HTTP API over a run store."""
    import uvicorn

    from .api import create_app

    config = CliConfig.resolve({"store_dir": store_dir}, config_path)
    catalog = load_domain_catalog(default_catalog_path())
    template = GenerationTemplate.load(default_template_path(), catalog)
    deps = PipelineDeps(
        store=_store(config),
        gateway=_gateway(config),
        template=template,
        act_corpus=load_act_corpus(default_act_path()),
        provider_spec=config.provider,
        corpus_path=corpus_path,
    )
    app = create_app(_store(config), catalog=catalog, deps=deps)
    uvicorn.run(app, host=host, port=port, log_level="warning")


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except GatewayError as exc:
        click.echo(stable_json(exc.payload()), err=True, nl=False)
        return 4
    except StoreError as exc:
        click.echo(stable_json(exc.payload()), err=True, nl=False)
        return 3
    except (ParseError, ValidationError, UsescopeError) as exc:
        click.echo(stable_json(exc.payload()), err=True, nl=False)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
