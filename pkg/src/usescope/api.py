"""HTTP API over the run store, consumed by the CLI and the explorer UI.

Read endpoints are side-effect-free; write endpoints validate then append.
Report and export bodies render through the same functions as the CLI, so
the two surfaces are byte-identical for the same store state.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .errors import (
    DuplicateCard,
    UnknownRun,
    UnknownUse,
    UsescopeError,
    ValidationError,
)
from .gateway import GatewayMode
from .jsonutil import stable_json
from .model import AnnotationCard, DomainCatalog, RunConfig
from .pipeline import PipelineDeps, execute_stages, new_run_id, start_run
from .reporting import (
    build_run_report,
    filter_use_records,
    joined_use_records,
    render_report_machine,
    render_uses_csv,
)
from .store import RunStore


def _json(payload, status_code: int = 200) -> Response:
    return Response(content=stable_json(payload), status_code=status_code,
                    media_type="application/json")


def _parse_bool(raw: str | None) -> bool | None:
    if raw is None:
        return None
    lowered = raw.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ValidationError(f"expected a boolean, got {raw!r}")


def create_app(
    store: RunStore,
    catalog: DomainCatalog | None = None,
    deps: PipelineDeps | None = None,
) -> FastAPI:
    app = FastAPI(title="usescope", docs_url=None, redoc_url=None)

    @app.exception_handler(UsescopeError)
    async def _handle_domain_error(_request: Request, exc: UsescopeError):
        if isinstance(exc, (UnknownRun, UnknownUse)):
            status = 404
        elif isinstance(exc, DuplicateCard):
            status = 409
        else:
            status = 400
        return JSONResponse(status_code=status, content=exc.payload())

    @app.get("/catalog/domains")
    def get_catalog():
        if catalog is None:
            return _json({"entries": []})
        return _json(catalog.to_dict())

    @app.get("/runs")
    def list_runs():
        return _json({"runs": store.list_runs()})

    @app.post("/runs")
    async def create_run(request: Request):
        if deps is None:
            return JSONResponse(status_code=400, content={
                "error": "not_configured",
                "detail": "this server has no pipeline configuration; runs are read-only",
            })
        body = await request.json()
        technology = (body.get("technology") or "").strip()
        if not technology:
            raise ValidationError("technology must be non-empty")
        config = RunConfig(
            model_name=body.get("model_name", "gpt-4"),
            temperature=float(body.get("temperature", 0.7)),
            uses_per_domain=int(body.get("uses_per_domain", 3)),
            percentile=float(body.get("percentile", 99.9)),
        )
        mode = GatewayMode(body.get("mode", "replay"))
        run_id = body.get("run_id") or new_run_id()
        # the pending run is stored before we answer, so polls see it at once
        artifact = start_run(deps, technology, config, run_id=run_id)

        def _work():
            try:
                execute_stages(deps, artifact, mode)
            except Exception:
                # execute_stages already stored the failed state.
                pass

        threading.Thread(target=_work, daemon=True).start()
        return _json({"run_id": run_id, "state": "pending"}, status_code=202)

    @app.get("/runs/{run_id}")
    def get_run(run_id: str):
        artifact = store.load_run(run_id)
        return _json({
            "run_id": artifact.run_id,
            "technology": artifact.technology,
            "state": artifact.state,
            "error": artifact.error,
            "created_at": artifact.created_at,
            "config": artifact.config.to_dict(),
            "uses": len(artifact.uses),
            "assessed": len(artifact.risk),
            "overlooked": sum(1 for v in artifact.overlooked if v.overlooked),
            "annotations": len(artifact.annotations),
        })

    @app.get("/runs/{run_id}/uses")
    def get_uses(run_id: str, domain: str | None = None, risk: str | None = None,
                 overlooked: str | None = None, realisticness: str | None = None):
        artifact = store.load_run(run_id)
        try:
            records = filter_use_records(
                joined_use_records(artifact),
                domain=domain,
                risk=risk,
                overlooked=_parse_bool(overlooked),
                realisticness=realisticness,
            )
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        return _json({"run_id": run_id, "total": len(records), "uses": records})

    @app.get("/runs/{run_id}/uses/{use_id}")
    def get_use(run_id: str, use_id: str):
        artifact = store.load_run(run_id)
        for record in joined_use_records(artifact):
            if record["use_id"] == use_id:
                return _json(record)
        raise UnknownUse(f"run {run_id} has no use {use_id!r}")

    @app.post("/runs/{run_id}/uses/{use_id}/annotations")
    async def post_annotation(run_id: str, use_id: str, request: Request):
        try:
            body = await request.json()
        except Exception as exc:
            raise ValidationError(f"request body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise ValidationError("annotation body must be an object")
        body = dict(body)
        body["use_id"] = use_id
        try:
            card = AnnotationCard.from_dict(body)
        except (KeyError, ValueError) as exc:
            raise ValidationError(f"invalid annotation card: {exc}") from exc
        ack = store.append_annotation(run_id, card)
        return _json(ack, status_code=201)

    @app.get("/runs/{run_id}/report")
    def get_report(run_id: str):
        artifact = store.load_run(run_id)
        return Response(content=render_report_machine(build_run_report(artifact)),
                        media_type="application/json")

    @app.get("/runs/{run_id}/export.csv")
    def get_export(run_id: str):
        artifact = store.load_run(run_id)
        return Response(content=render_uses_csv(artifact), media_type="text/csv")

    return app
