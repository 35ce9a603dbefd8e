import json

import pytest

from usescope.errors import DuplicateCard, RunExists, UnknownRun, UnknownUse, ValidationError
from usescope.model import (
    AnnotationCard,
    Cohort,
    LikertItem,
    LikertScore,
    Realisticness,
    RealisticnessVerdict,
    RunArtifact,
    RunConfig,
    TechnologyUse,
    UseConcepts,
)
from usescope.store import RunStore


def small_artifact(run_id="r1", cards=()):
    uses = tuple(
        TechnologyUse(
            use_id=str(i + 1),
            concepts=UseConcepts(domain="Energy", purpose=f"purpose {i}",
                                 capability="cap", ai_user="ops", ai_subject="staff"),
            realisticness=RealisticnessVerdict(label=Realisticness.UPCOMING,
                                               justification="j"),
        )
        for i in range(3)
    )
    return RunArtifact(run_id=run_id, technology="FRA", config=RunConfig(),
                       uses=uses, annotations=tuple(cards))


def make_card(use_id="1", rater_id="D01"):
    return AnnotationCard(
        use_id=use_id, rater_id=rater_id, cohort=Cohort.DEVELOPER,
        realisticness_vote=Realisticness.UPCOMING,
        scores=tuple(LikertScore(item=item, value=3) for item in LikertItem))


class TestSaveLoad:
    def test_round_trip_deep_equal(self, tmp_path):
        store = RunStore(tmp_path)
        artifact = small_artifact(cards=[make_card()])
        store.save_run(artifact)
        assert store.load_run("r1") == artifact

    def test_colliding_run_id(self, tmp_path):
        store = RunStore(tmp_path)
        store.save_run(small_artifact())
        with pytest.raises(RunExists):
            store.save_run(small_artifact())

    def test_unknown_run(self, tmp_path):
        with pytest.raises(UnknownRun):
            RunStore(tmp_path).load_run("nope")

    def test_list_runs(self, tmp_path):
        store = RunStore(tmp_path)
        store.save_run(small_artifact("a"))
        store.save_run(small_artifact("b"))
        assert [r["run_id"] for r in store.list_runs()] == ["a", "b"]


class TestAppendAnnotation:
    def test_append_then_visible(self, tmp_path):
        store = RunStore(tmp_path)
        store.save_run(small_artifact())
        ack = store.append_annotation("r1", make_card())
        assert ack["stored"] is True
        loaded = store.load_run("r1")
        assert len(loaded.annotations) == 1

    def test_duplicate_rejected(self, tmp_path):
        store = RunStore(tmp_path)
        store.save_run(small_artifact())
        store.append_annotation("r1", make_card())
        with pytest.raises(DuplicateCard):
            store.append_annotation("r1", make_card())

    def test_unknown_run_and_use(self, tmp_path):
        store = RunStore(tmp_path)
        with pytest.raises(UnknownRun):
            store.append_annotation("ghost", make_card())
        store.save_run(small_artifact())
        with pytest.raises(UnknownUse):
            store.append_annotation("r1", make_card(use_id="99"))

    def test_invalid_card_never_stored(self, tmp_path):
        store = RunStore(tmp_path)
        store.save_run(small_artifact())
        with pytest.raises(ValidationError):
            AnnotationCard(use_id="1", rater_id="L01",
                           cohort=Cohort.COMPLIANCE_EXPERT,
                           realisticness_vote=Realisticness.UPCOMING,
                           scores=tuple(LikertScore(item=item, value=3)
                                        for item in LikertItem))
        assert store.load_run("r1").annotations == ()


class TestCrashConsistency:
    def test_leftover_temp_file_is_ignored(self, tmp_path):
        store = RunStore(tmp_path)
        artifact = small_artifact()
        store.save_run(artifact)
        # simulate an interrupted replace: a stray temp file next to the artifact
        run_dir = store.run_dir("r1")
        (run_dir / "artifact.json.zzz.tmp").write_text('{"half": ')
        assert store.load_run("r1") == artifact

    def test_torn_log_line_reflects_prior_state(self, tmp_path):
        store = RunStore(tmp_path)
        store.save_run(small_artifact())
        store.append_annotation("r1", make_card())
        log = store.run_dir("r1") / "annotations.log"
        with open(log, "a", encoding="utf-8") as handle:
            handle.write('{"use_id": "2", "rater_id": "D02", "coh')  # torn write
        loaded = store.load_run("r1")
        assert len(loaded.annotations) == 1

    def test_interrupted_artifact_write_keeps_old_version(self, tmp_path, monkeypatch):
        import usescope.jsonutil as jsonutil

        store = RunStore(tmp_path)
        artifact = small_artifact()
        store.save_run(artifact)

        real_replace = jsonutil.os.replace

        def exploding_replace(src, dst):
            raise OSError("power cut")

        monkeypatch.setattr(jsonutil.os, "replace", exploding_replace)
        from usescope.errors import StoreError

        with pytest.raises(StoreError):
            store.update_run(small_artifact())
        monkeypatch.setattr(jsonutil.os, "replace", real_replace)
        assert store.load_run("r1") == artifact

    def test_update_then_load_reflects_new_state(self, tmp_path):
        store = RunStore(tmp_path)
        artifact = small_artifact()
        store.save_run(artifact)
        from dataclasses import replace

        updated = replace(artifact, state="failed", error="x")
        store.update_run(updated)
        assert store.load_run("r1").state == "failed"
