"""Run reports and exports shared by the CLI and the HTTP API.

Both surfaces render through these functions, so a report fetched over HTTP
is byte-identical to the CLI export for the same store state.
"""

from __future__ import annotations

import csv
import io

from .evaluation import CoverageMatch, GroundTruthUse, build_evaluation_report
from .jsonutil import stable_json
from .model import Realisticness, RiskTier, RunArtifact
from .risklabel import risk_distribution


def joined_use_records(artifact: RunArtifact) -> list[dict]:
    """One record per use joining concepts, risk verdict, and overlooked flag."""
    risk_by_use = {a.use_id: a for a in artifact.risk}
    verdict_by_use = {v.use_id: v for v in artifact.overlooked}
    records = []
    for use in artifact.uses:
        assessment = risk_by_use.get(use.use_id)
        verdict = verdict_by_use.get(use.use_id)
        records.append({
            "use_id": use.use_id,
            "summary": use.summary,
            "domain": use.concepts.domain,
            "purpose": use.concepts.purpose,
            "capability": use.concepts.capability,
            "ai_user": use.concepts.ai_user,
            "ai_subject": use.concepts.ai_subject,
            "off_catalog": use.concepts.off_catalog,
            "realisticness": use.realisticness.label.value,
            "justification": use.realisticness.justification,
            "risk": assessment.classification.value if assessment else None,
            "risk_reasoning": assessment.reasoning if assessment else None,
            "relevant_text": assessment.relevant_text if assessment else None,
            "risk_description": assessment.description if assessment else None,
            "overlooked": verdict.overlooked if verdict else None,
            "supporters": len(verdict.supporting_papers) if verdict else None,
        })
    return records


def filter_use_records(
    records: list[dict],
    domain: str | None = None,
    risk: str | None = None,
    overlooked: bool | None = None,
    realisticness: str | None = None,
) -> list[dict]:
    out = records
    if domain is not None:
        out = [r for r in out if r["domain"].casefold() == domain.casefold()]
    if risk is not None:
        tier = RiskTier(risk).value
        out = [r for r in out if r["risk"] == tier]
    if overlooked is not None:
        out = [r for r in out if r["overlooked"] is overlooked]
    if realisticness is not None:
        label = Realisticness(realisticness).value
        out = [r for r in out if r["realisticness"] == label]
    return out


def build_run_report(
    artifact: RunArtifact,
    gt: list[GroundTruthUse] | None = None,
    matches: list[CoverageMatch] | None = None,
) -> dict:
    """The full machine-readable report for one run."""
    realistic = [u for u in artifact.uses if u.realisticness.realistic]
    unlikely = [u for u in artifact.uses if not u.realisticness.realistic]
    report = {
        "run_id": artifact.run_id,
        "technology": artifact.technology,
        "state": artifact.state,
        "created_at": artifact.created_at,
        "config": artifact.config.to_dict(),
        "uses": {
            "total": len(artifact.uses),
            "realistic": len(realistic),
            "unlikely": len(unlikely),
            "already_existent": sum(
                1 for u in artifact.uses
                if u.realisticness.label is Realisticness.ALREADY_EXISTENT
            ),
            "upcoming": sum(
                1 for u in artifact.uses
                if u.realisticness.label is Realisticness.UPCOMING
            ),
            "off_catalog": sum(1 for u in artifact.uses if u.concepts.off_catalog),
        },
        "risk": risk_distribution(list(artifact.risk)),
        "overlooked": {
            "flagged": sum(1 for v in artifact.overlooked if v.overlooked),
            "assessed": len(artifact.overlooked),
            "use_ids": [v.use_id for v in artifact.overlooked if v.overlooked],
        },
    }
    if artifact.annotations:
        report["evaluation"] = build_evaluation_report(artifact, gt=gt, matches=matches)
    elif gt is not None and matches is not None:
        report["evaluation"] = build_evaluation_report(artifact, gt=gt, matches=matches)
    return report


def render_report_machine(report: dict) -> str:
    return stable_json(report)


def render_report_text(report: dict) -> str:
    lines = [
        f"Run {report['run_id']} ({report['technology']}), state {report['state']}",
        f"Uses: {report['uses']['total']} total, {report['uses']['realistic']} realistic, "
        f"{report['uses']['unlikely']} unlikely",
    ]
    risk = report["risk"]
    if risk["total"]:
        lines.append("Risk tiers:")
        for tier in RiskTier:
            key = tier.value
            lines.append(
                f"  {key:<22} {risk['counts'][key]:>4}  "
                f"({risk['percent_int'][key]}%, {risk['percent'][key]}%)"
            )
    else:
        lines.append("Risk tiers: (no assessments)")
    lines.append(
        f"Overlooked: {report['overlooked']['flagged']} of "
        f"{report['overlooked']['assessed']} assessed"
    )
    evaluation = report.get("evaluation")
    if evaluation:
        if "coverage" in evaluation:
            cov = evaluation["coverage"]
            lines.append(
                f"Coverage: {cov['coverage_percent']}% "
                f"({cov['matched']}/{cov['total']}, {len(cov['unmatched'])} unmatched)"
            )
        cls = evaluation.get("classification", {})
        if cls.get("items"):
            lines.append(
                f"Classification agreement: accuracy {cls['accuracy_percent']}%, "
                f"Cohen's kappa {cls['cohens_kappa']:.3f}"
                + (f", Fleiss' kappa {cls['fleiss_kappa']:.3f}"
                   if "fleiss_kappa" in cls else "")
            )
        real = evaluation.get("realisticness", {})
        if real.get("total"):
            lines.append(
                f"Realisticness agreement: {real['collapsed_percent']}% collapsed, "
                f"{real['full_percent']}% full-label over {real['total']} uses"
            )
    return "\n".join(lines) + "\n"


USES_CSV_HEADER = [
    "use_id", "domain", "purpose", "capability", "ai_user", "ai_subject",
    "realisticness", "justification", "risk", "relevant_text", "overlooked",
    "supporters",
]


def render_uses_csv(artifact: RunArtifact) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(USES_CSV_HEADER)
    for record in joined_use_records(artifact):
        writer.writerow([
            record["use_id"], record["domain"], record["purpose"], record["capability"],
            record["ai_user"], record["ai_subject"], record["realisticness"],
            record["justification"], record["risk"] or "",
            record["relevant_text"] or "",
            "" if record["overlooked"] is None else str(record["overlooked"]).lower(),
            "" if record["supporters"] is None else record["supporters"],
        ])
    return buffer.getvalue()
