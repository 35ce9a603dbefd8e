"""Shared fixtures: paths and a session-scoped replayed run store."""

from __future__ import annotations

import shutil
from pathlib import Path

import pytest

from usescope.config import (
    default_act_path,
    default_catalog_path,
    default_ground_truth_path,
    default_template_path,
)
from usescope.gateway import ChatGateway, GatewayMode
from usescope.generation import GenerationTemplate
from usescope.model import RunConfig, load_domain_catalog
from usescope.pipeline import (
    PipelineDeps,
    run_classification_stage,
    run_generation_stage,
    run_overlooked_stage,
    start_run,
)
from usescope.risklabel import load_act_corpus
from usescope.store import RunStore

FIXTURES = Path(__file__).parent / "fixtures"

TECHNOLOGY = "Facial Recognition and Analysis"
RUN_ID = "fixture-fra"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def catalog():
    return load_domain_catalog(default_catalog_path())


@pytest.fixture(scope="session")
def template(catalog):
    return GenerationTemplate.load(default_template_path(), catalog)


@pytest.fixture(scope="session")
def act_corpus():
    return load_act_corpus(default_act_path())


@pytest.fixture(scope="session")
def ground_truth_path() -> Path:
    return default_ground_truth_path()


def replay_fixture_run(root: Path, template, act_corpus) -> RunStore:
    """Build a store by replaying the shipped transcripts end to end."""
    store = RunStore(root)
    transcripts_dir = store.run_dir(RUN_ID) / "transcripts"
    shutil.copytree(FIXTURES / "transcripts", transcripts_dir)
    deps = PipelineDeps(
        store=store,
        gateway=ChatGateway(),
        template=template,
        act_corpus=act_corpus,
        provider_spec="hashed",
        corpus_path=FIXTURES / "corpus.jsonl",
    )
    artifact = start_run(deps, TECHNOLOGY, RunConfig(), run_id=RUN_ID)
    artifact = run_generation_stage(deps, artifact, GatewayMode.REPLAY)
    artifact, errors = run_classification_stage(deps, artifact, GatewayMode.REPLAY)
    assert not errors
    artifact, _ = run_overlooked_stage(deps, artifact)
    return store


@pytest.fixture(scope="session")
def fixture_store(tmp_path_factory, template, act_corpus) -> RunStore:
    root = tmp_path_factory.mktemp("fixture-store")
    return replay_fixture_run(root, template, act_corpus)


@pytest.fixture(scope="session")
def fixture_artifact(fixture_store):
    return fixture_store.load_run(RUN_ID)
