import json
import shutil
from pathlib import Path

import pytest

from usescope.cli import main

from conftest import FIXTURES, RUN_ID, TECHNOLOGY


@pytest.fixture()
def replayed_store(tmp_path, capsys):
    """A store built through the CLI itself, stage by stage."""
    store = tmp_path / "store"
    shutil.copytree(FIXTURES / "transcripts",
                    store / "runs" / RUN_ID / "transcripts")
    assert main(["generate", "--technology", TECHNOLOGY, "--run", RUN_ID,
                 "--mode", "replay", "--store", str(store)]) == 0
    assert main(["classify", "--run", RUN_ID, "--mode", "replay",
                 "--store", str(store)]) == 0
    assert main(["overlooked", "--run", RUN_ID,
                 "--corpus", str(FIXTURES / "corpus.jsonl"),
                 "--percentile", "99.9", "--store", str(store)]) == 0
    capsys.readouterr()
    return store


class TestExitCodes:
    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "generate" in capsys.readouterr().out

    def test_unknown_subcommand_usage_error(self, capsys):
        assert main(["frobnicate"]) == 1
        assert "Usage" in capsys.readouterr().err

    def test_missing_required_flag(self, capsys):
        assert main(["generate"]) == 1

    def test_unknown_run_is_store_error(self, tmp_path, capsys):
        code = main(["classify", "--run", "missing", "--mode", "replay",
                     "--store", str(tmp_path)])
        assert code == 3
        assert "unknown_run" in capsys.readouterr().err

    def test_pipeline_error_exit_2(self, tmp_path, capsys):
        # generation replay with no transcripts on disk -> gateway miss (network
        # class is 4), while an unparseable stored response is a pipeline error.
        store = tmp_path / "store"
        code = main(["generate", "--technology", TECHNOLOGY, "--run", "r",
                     "--mode", "replay", "--store", str(store)])
        assert code == 4
        assert "transcript_miss" in capsys.readouterr().err


class TestStageCommands:
    def test_generate_counts(self, tmp_path, capsys):
        store = tmp_path / "store"
        shutil.copytree(FIXTURES / "transcripts",
                        store / "runs" / RUN_ID / "transcripts")
        assert main(["generate", "--technology", TECHNOLOGY, "--run", RUN_ID,
                     "--mode", "replay", "--store", str(store),
                     "--format", "machine"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out == {"run_id": RUN_ID, "uses": 138, "realistic": 130,
                       "unlikely": 8}

    def test_report_text_table(self, replayed_store, capsys):
        assert main(["report", "--run", RUN_ID, "--store", str(replayed_store)]) == 0
        out = capsys.readouterr().out
        assert "prohibited               10  (7%" in out
        assert "high_risk                66  (48%" in out
        assert "limited_or_low_risk      62  (45%" in out
        assert "Overlooked: 16 of 138" in out

    def test_machine_report_is_byte_stable(self, replayed_store, capsys):
        assert main(["report", "--run", RUN_ID, "--store", str(replayed_store),
                     "--format", "machine"]) == 0
        first = capsys.readouterr().out
        assert main(["report", "--run", RUN_ID, "--store", str(replayed_store),
                     "--format", "machine"]) == 0
        second = capsys.readouterr().out
        assert first == second
        parsed = json.loads(first)
        assert parsed["overlooked"]["flagged"] == 16

    def test_export_uses_csv(self, replayed_store, capsys):
        assert main(["export", "--run", RUN_ID, "--store", str(replayed_store)]) == 0
        out = capsys.readouterr().out
        assert len(out.splitlines()) == 139

    def test_export_annotations_csv(self, replayed_store, capsys):
        assert main(["export", "--run", RUN_ID, "--kind", "annotations",
                     "--store", str(replayed_store)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("use_id,rater_id,cohort")

    def test_evaluate_with_fixtures(self, replayed_store, capsys):
        assert main(["evaluate", "--run", RUN_ID,
                     "--annotations", str(FIXTURES / "annotations.csv"),
                     "--matches", str(FIXTURES / "coverage_matches.json"),
                     "--store", str(replayed_store), "--format", "machine"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["evaluation"]["coverage"]["coverage_percent"] == 96.0
        assert report["evaluation"]["classification"]["accuracy_percent"] == 94.6

    def test_evaluate_quality_gate_drops_rater(self, replayed_store, tmp_path, capsys):
        checks = tmp_path / "checks.csv"
        checks.write_text(
            "rater_id,check1,check2,check3\n"
            "D01,correct,correct,wrong\n"
            "D02,wrong,wrong,correct\n")
        assert main(["evaluate", "--run", RUN_ID,
                     "--annotations", str(FIXTURES / "annotations.csv"),
                     "--checks", str(checks),
                     "--store", str(replayed_store), "--format", "machine"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["raters_failing_quality_gate"] == ["D02"]
        assert report["evaluation"]["cards"] == 138 * 5
