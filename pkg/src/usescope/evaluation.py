"""Evaluation battery: coverage, agreement statistics, Likert summaries.

Implements the seven-metric battery over practitioner annotations: coverage
against a ground-truth use list, realisticness agreement, Likert
aggregation with cohort comparison, majority-vote gold labels, accuracy,
Cohen's and Fleiss' kappa, chi-squared independence with an incomplete-gamma
p-value, and the attention-check quality gate. Everything here is pure over
immutable inputs.
"""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DegenerateMarginals,
    EmptyDistribution,
    MissingDecision,
    ShapeError,
    ValidationError,
)
from .model import (
    AgreementVote,
    AnnotationCard,
    Cohort,
    CorrectedTier,
    LikertItem,
    LikertScore,
    Realisticness,
    RunArtifact,
)


class _NoConsensus:
    """Sentinel for a vote set in which no label reaches the quorum."""

    def __repr__(self):
        return "NO_CONSENSUS"

    def __bool__(self):
        return False


NO_CONSENSUS = _NoConsensus()


# --- ground truth & coverage -----------------------------------------------

@dataclass(frozen=True)
class GroundTruthUse:
    gt_id: str
    description: str
    sources: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.gt_id.strip() or not self.description.strip():
            raise ValidationError("ground-truth use needs an id and a description")


def load_ground_truth(path: str | Path) -> list[GroundTruthUse]:
    """Parse ``gt_id <TAB> description <TAB> source_keys`` lines; ``#`` comments
    and blank lines are skipped."""
    uses = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise ValidationError(f"ground truth line {lineno}: expected at least id<TAB>text")
        sources = tuple(s.strip() for s in parts[2].split(",") if s.strip()) if len(parts) > 2 else ()
        uses.append(GroundTruthUse(gt_id=parts[0].strip(), description=parts[1].strip(),
                                   sources=sources))
    return uses


@dataclass(frozen=True)
class CoverageMatch:
    """A human matching decision for one ground-truth use."""

    gt_id: str
    matched_use_ids: tuple[str, ...]
    rationale: str = ""

    def to_dict(self) -> dict:
        return {"gt_id": self.gt_id, "matched_use_ids": list(self.matched_use_ids),
                "rationale": self.rationale}

    @classmethod
    def from_dict(cls, data: dict) -> "CoverageMatch":
        return cls(gt_id=data["gt_id"], matched_use_ids=tuple(data["matched_use_ids"]),
                   rationale=data.get("rationale", ""))


def compute_coverage(
    gt: list[GroundTruthUse],
    matches: list[CoverageMatch],
    known_use_ids: set[str] | None = None,
) -> dict:
    """Coverage percent (one decimal) plus the unmatched ground-truth uses.

    Every ground-truth use must have a match record (possibly empty);
    a missing record raises ``MissingDecision``.
    """
    by_id = {m.gt_id: m for m in matches}
    matched = 0
    unmatched = []
    for use in gt:
        decision = by_id.get(use.gt_id)
        if decision is None:
            raise MissingDecision(use.gt_id)
        if known_use_ids is not None:
            for uid in decision.matched_use_ids:
                if uid not in known_use_ids:
                    raise ValidationError(
                        f"coverage match for {use.gt_id} references unknown use {uid!r}"
                    )
        if decision.matched_use_ids:
            matched += 1
        else:
            unmatched.append({"gt_id": use.gt_id, "description": use.description})
    percent = round(matched * 100.0 / len(gt), 1) if gt else None
    return {"total": len(gt), "matched": matched, "coverage_percent": percent,
            "unmatched": unmatched}


# --- majority vote and accuracy --------------------------------------------

def majority_label(votes: list, quorum: int):
    """The label reaching ``quorum`` votes, or ``NO_CONSENSUS`` when none does
    or when two labels tie at quorum."""
    if not votes:
        raise ShapeError("majority_label needs at least one vote")
    if quorum < 1:
        raise ShapeError("quorum must be >= 1")
    counts = Counter(votes)
    winners = [label for label, count in counts.items() if count >= quorum]
    if len(winners) == 1:
        return winners[0]
    return NO_CONSENSUS


def accuracy(gold: list, predicted: list) -> float:
    """Percent of positions where the lists agree, one decimal."""
    if len(gold) != len(predicted):
        raise ShapeError(f"length mismatch: {len(gold)} gold vs {len(predicted)} predicted")
    if not gold:
        raise ShapeError("accuracy needs at least one item")
    matches = sum(1 for g, p in zip(gold, predicted) if g == p)
    return round(matches * 100.0 / len(gold), 1)


# --- chance-corrected agreement --------------------------------------------

def cohens_kappa(rater_a: list, rater_b: list) -> float:
    """Cohen's kappa for two raters over a shared label set.

    kappa = (p_o - p_e) / (1 - p_e), expected agreement from the product of
    the raters' marginal label distributions. Perfect agreement returns
    exactly 1.0 even when the marginals are degenerate.
    """
    if len(rater_a) != len(rater_b):
        raise ShapeError(f"length mismatch: {len(rater_a)} vs {len(rater_b)}")
    n = len(rater_a)
    if n == 0:
        raise ShapeError("kappa needs at least one item")
    p_o = sum(1 for a, b in zip(rater_a, rater_b) if a == b) / n
    counts_a = Counter(rater_a)
    counts_b = Counter(rater_b)
    p_e = sum((counts_a[label] / n) * (counts_b[label] / n)
              for label in set(counts_a) | set(counts_b))
    if p_o == 1.0:
        return 1.0
    if abs(1.0 - p_e) < 1e-12:
        raise DegenerateMarginals(
            "expected agreement is 1 with observed disagreement; kappa undefined"
        )
    return (p_o - p_e) / (1.0 - p_e)


@dataclass(frozen=True)
class RaterMatrix:
    """Items x raters table of categorical labels from a declared label set.

    ``None`` is the documented missingness marker; operations that require a
    fully crossed design reject rows containing it.
    """

    rows: tuple[tuple, ...]
    label_set: frozenset

    def __post_init__(self):
        for row in self.rows:
            for label in row:
                if label is not None and label not in self.label_set:
                    raise ValidationError(f"label {label!r} outside the declared set")

    @classmethod
    def from_rows(cls, rows: list[list]) -> "RaterMatrix":
        labels = frozenset(l for row in rows for l in row if l is not None)
        return cls(rows=tuple(tuple(row) for row in rows), label_set=labels)


def fleiss_kappa(matrix: RaterMatrix | list) -> float:
    """Fleiss' kappa over an items x raters table.

    Every item must be rated by the same number n >= 2 of raters (a ragged
    table or missing marker raises ``ShapeError``). Returns exactly 1.0 when
    all raters agree on all items.
    """
    rows = matrix.rows if isinstance(matrix, RaterMatrix) else [tuple(r) for r in matrix]
    if not rows:
        raise ShapeError("fleiss_kappa needs at least one item")
    n = len(rows[0])
    if n < 2:
        raise ShapeError("fleiss_kappa needs at least two raters per item")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ShapeError(f"item {i} rated by {len(row)} raters, expected {n}")
        if any(label is None for label in row):
            raise ShapeError(f"item {i} has a missing rating")

    categories = sorted({label for row in rows for label in row}, key=repr)
    big_n = len(rows)
    counts = [[sum(1 for label in row if label == cat) for cat in categories] for row in rows]

    p_bar = sum(
        (sum(c * c for c in item_counts) - n) / (n * (n - 1)) for item_counts in counts
    ) / big_n
    totals = [sum(counts[i][j] for i in range(big_n)) for j in range(len(categories))]
    p_j = [t / (big_n * n) for t in totals]
    p_e = sum(p * p for p in p_j)
    if p_bar == 1.0:
        return 1.0
    if abs(1.0 - p_e) < 1e-12:
        raise DegenerateMarginals(
            "expected agreement is 1 with observed disagreement; kappa undefined"
        )
    return (p_bar - p_e) / (1.0 - p_e)


# --- chi-squared independence ----------------------------------------------

def regularized_gamma_upper(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x), the chi-squared survival
    function's core. Series expansion below a+1, Lentz continued fraction
    above; both converge to ~1e-15."""
    if a <= 0.0 or x < 0.0:
        raise ValidationError("gamma arguments need a > 0 and x >= 0")
    if x == 0.0:
        return 1.0
    log_prefactor = -x + a * math.log(x) - math.lgamma(a)
    if x < a + 1.0:
        term = 1.0 / a
        total = term
        denom = a
        for _ in range(1000):
            denom += 1.0
            term *= x / denom
            total += term
            if abs(term) < abs(total) * 1e-16:
                break
        return 1.0 - total * math.exp(log_prefactor)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return math.exp(log_prefactor) * h


def chi_squared_p_value(statistic: float, df: int) -> float:
    """Survival function of the chi-squared distribution."""
    if df <= 0:
        return 1.0
    return regularized_gamma_upper(df / 2.0, statistic / 2.0)


def chi_squared_independence(dist_a: list[int], dist_b: list[int]) -> dict:
    """Pearson independence test on the 2 x k table formed by two count
    vectors. Bins empty in both distributions (expected count zero) are
    pooled out before the test; df = k' - 1 over the surviving bins.
    """
    if len(dist_a) != len(dist_b):
        raise ShapeError(f"bin count mismatch: {len(dist_a)} vs {len(dist_b)}")
    total_a = sum(dist_a)
    total_b = sum(dist_b)
    if total_a <= 0 or total_b <= 0:
        raise EmptyDistribution("both distributions need a positive total")
    pairs = [(a, b) for a, b in zip(dist_a, dist_b) if a + b > 0]
    grand = total_a + total_b
    statistic = 0.0
    for a, b in pairs:
        column = a + b
        expected_a = total_a * column / grand
        expected_b = total_b * column / grand
        statistic += (a - expected_a) ** 2 / expected_a
        statistic += (b - expected_b) ** 2 / expected_b
    df = len(pairs) - 1
    return {
        "statistic": statistic,
        "df": df,
        "p_value": chi_squared_p_value(statistic, df),
        "pooled_bins": len(dist_a) - len(pairs),
    }


# --- Likert summaries -------------------------------------------------------

def likert_summary(
    cards: list[AnnotationCard],
    item: LikertItem,
    cohort: Cohort | None = None,
    use_ids: set[str] | None = None,
) -> dict:
    """7-bin counts and percentages for one item, optionally filtered by
    cohort and by a use subset (e.g. overlooked-only)."""
    if not isinstance(item, LikertItem):
        item = LikertItem(item)
    selected = [
        c for c in cards
        if (cohort is None or c.cohort is cohort)
        and (use_ids is None or c.use_id in use_ids)
    ]
    counts = {v: 0 for v in range(1, 8)}
    for card in selected:
        counts[card.score(item)] += 1
    total = len(selected)
    percent = {v: (round(c * 100.0 / total, 1) if total else 0.0) for v, c in counts.items()}
    return {"item": item.value, "total": total, "counts": counts, "percent": percent}


# --- realisticness agreement -------------------------------------------------

def realisticness_agreement(
    llm_labels: dict[str, Realisticness],
    participant_votes: dict[str, Realisticness],
) -> dict:
    """Agreement between generator labels and majority participant votes,
    reported both on the realistic/unlikely collapse and on all three labels.
    ``participant_votes`` must already be majority-resolved per use."""
    shared = sorted(set(llm_labels) & set(participant_votes), key=lambda u: u.rjust(12, "0"))
    if not shared:
        return {"total": 0, "collapsed_percent": None, "full_percent": None, "confusion": {}}
    collapsed = 0
    full = 0
    confusion: dict[str, int] = {}
    for use_id in shared:
        lhs = llm_labels[use_id]
        rhs = participant_votes[use_id]
        if (lhs is Realisticness.UNLIKELY) == (rhs is Realisticness.UNLIKELY):
            collapsed += 1
        if lhs is rhs:
            full += 1
        key = f"{lhs.value}->{rhs.value}"
        confusion[key] = confusion.get(key, 0) + 1
    n = len(shared)
    return {
        "total": n,
        "collapsed_percent": round(collapsed * 100.0 / n, 1),
        "full_percent": round(full * 100.0 / n, 1),
        "confusion": confusion,
    }


# --- quality gate and rater plan ---------------------------------------------

def quality_gate(outcomes: list[bool]) -> bool:
    """Pass iff at least 2 of exactly 3 attention checks are correct."""
    if len(outcomes) != 3:
        raise ShapeError(f"expected exactly 3 check outcomes, got {len(outcomes)}")
    return sum(1 for o in outcomes if o) >= 2


@dataclass(frozen=True)
class AnnotationPlan:
    """Rater quota per use and cohort, e.g. 3 developers + 3 experts per use."""

    use_ids: tuple[str, ...]
    required: tuple[tuple[Cohort, int], ...]

    def check(self, cards: list[AnnotationCard]) -> dict:
        have: dict[tuple[str, Cohort], int] = {}
        for card in cards:
            key = (card.use_id, card.cohort)
            have[key] = have.get(key, 0) + 1
        shortfalls = []
        for use_id in self.use_ids:
            for cohort, need in self.required:
                got = have.get((use_id, cohort), 0)
                if got < need:
                    shortfalls.append({"use_id": use_id, "cohort": cohort.value,
                                       "have": got, "need": need})
        return {"satisfied": not shortfalls, "shortfalls": shortfalls}


# --- annotation CSV ----------------------------------------------------------

CSV_HEADER = [
    "use_id", "rater_id", "cohort", "realisticness_vote",
    "familiarity", "adoption", "transformation", "risk_society", "risk_environment",
    "classification_agreement", "corrected_classification",
    "reasoning_correction", "usefulness_notes",
]

_ITEM_COLUMNS = [
    LikertItem.FAMILIARITY, LikertItem.ADOPTION, LikertItem.TRANSFORMATION,
    LikertItem.RISK_SOCIETY, LikertItem.RISK_ENVIRONMENT,
]


def export_annotations_csv(cards: list[AnnotationCard]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for card in cards:
        writer.writerow([
            card.use_id, card.rater_id, card.cohort.value, card.realisticness_vote.value,
            *[card.score(item) for item in _ITEM_COLUMNS],
            card.classification_agreement.value if card.classification_agreement else "",
            card.corrected_classification.value if card.corrected_classification else "",
            card.reasoning_correction or "",
            card.usefulness_notes or "",
        ])
    return buffer.getvalue()


def import_annotations_csv(text: str) -> list[AnnotationCard]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise ValidationError(
            f"unexpected annotation CSV header: {reader.fieldnames!r}"
        )
    cards = []
    for row in reader:
        cards.append(AnnotationCard(
            use_id=row["use_id"],
            rater_id=row["rater_id"],
            cohort=Cohort(row["cohort"]),
            realisticness_vote=Realisticness(row["realisticness_vote"]),
            scores=tuple(
                LikertScore(item=item, value=int(row[item.value])) for item in _ITEM_COLUMNS
            ),
            classification_agreement=(
                AgreementVote(row["classification_agreement"])
                if row["classification_agreement"] else None
            ),
            corrected_classification=(
                CorrectedTier(row["corrected_classification"])
                if row["corrected_classification"] else None
            ),
            reasoning_correction=row["reasoning_correction"] or None,
            usefulness_notes=row["usefulness_notes"] or None,
        ))
    return cards


# --- the full battery over a run ----------------------------------------------

def _majority_quorum(n: int) -> int:
    return n // 2 + 1


def resolve_rater_tier(card: AnnotationCard) -> str:
    """A compliance rater's own tier: the generator's label when agreeing,
    otherwise the correction (possibly 'insufficient_information')."""
    if card.classification_agreement is AgreementVote.AGREE:
        return "agree"
    return card.corrected_classification.value


def build_evaluation_report(
    artifact: RunArtifact,
    gt: list[GroundTruthUse] | None = None,
    matches: list[CoverageMatch] | None = None,
) -> dict:
    """Compute the metric battery over a run's annotations.

    Classification agreement is computed over uses the generator labeled
    realistic; unlikely uses keep their cards but are excluded and counted.
    """
    cards = list(artifact.annotations)
    llm_tier = {a.use_id: a.classification.value for a in artifact.risk}
    llm_real = {u.use_id: u.realisticness.label for u in artifact.uses}
    overlooked_ids = {v.use_id for v in artifact.overlooked if v.overlooked}

    report: dict = {"run_id": artifact.run_id, "cards": len(cards)}

    if gt is not None and matches is not None:
        known = {u.use_id for u in artifact.uses}
        report["coverage"] = compute_coverage(gt, matches, known_use_ids=known)

    # Majority realisticness vote per use, all cohorts pooled.
    votes_by_use: dict[str, list[Realisticness]] = {}
    for card in cards:
        votes_by_use.setdefault(card.use_id, []).append(card.realisticness_vote)
    majority_real: dict[str, Realisticness] = {}
    no_consensus_real = 0
    for use_id, votes in votes_by_use.items():
        label = majority_label(votes, _majority_quorum(len(votes)))
        if label is NO_CONSENSUS:
            no_consensus_real += 1
        else:
            majority_real[use_id] = label
    report["realisticness"] = realisticness_agreement(llm_real, majority_real)
    report["realisticness"]["no_consensus"] = no_consensus_real

    # Classification agreement over realistic uses with compliance votes.
    comp_by_use: dict[str, list[AnnotationCard]] = {}
    for card in cards:
        if card.cohort is Cohort.COMPLIANCE_EXPERT:
            comp_by_use.setdefault(card.use_id, []).append(card)
    gold: list[str] = []
    predicted: list[str] = []
    fleiss_rows: list[list[str]] = []
    excluded = {"unlikely": 0, "no_consensus": 0, "insufficient": 0}
    rater_counts = {len(v) for v in comp_by_use.values()}
    for use_id in sorted(comp_by_use, key=lambda u: u.rjust(12, "0")):
        if use_id not in llm_tier:
            continue
        if llm_real.get(use_id) is Realisticness.UNLIKELY:
            excluded["unlikely"] += 1
            continue
        tiers = [
            llm_tier[use_id] if resolve_rater_tier(c) == "agree" else resolve_rater_tier(c)
            for c in sorted(comp_by_use[use_id], key=lambda c: c.rater_id)
        ]
        label = majority_label(tiers, _majority_quorum(len(tiers)))
        if label is NO_CONSENSUS:
            excluded["no_consensus"] += 1
            continue
        if label == CorrectedTier.INSUFFICIENT_INFORMATION.value:
            excluded["insufficient"] += 1
            continue
        gold.append(label)
        predicted.append(llm_tier[use_id])
        fleiss_rows.append(tiers)
    classification: dict = {"items": len(gold), "excluded": excluded}
    if gold:
        classification["accuracy_percent"] = accuracy(gold, predicted)
        classification["cohens_kappa"] = cohens_kappa(gold, predicted)
    if fleiss_rows and len(rater_counts) == 1 and len(fleiss_rows[0]) >= 2:
        classification["fleiss_kappa"] = fleiss_kappa(fleiss_rows)
    report["classification"] = classification

    # Likert distributions and the cohort / overlooked comparisons.
    likert: dict = {}
    comparisons: dict = {}
    for item in LikertItem:
        per_item: dict = {}
        for cohort in Cohort:
            per_item[cohort.value] = {
                "all": likert_summary(cards, item, cohort=cohort),
                "overlooked": likert_summary(cards, item, cohort=cohort,
                                             use_ids=overlooked_ids),
            }
        likert[item.value] = per_item
        dev_bins = [per_item[Cohort.DEVELOPER.value]["all"]["counts"][v] for v in range(1, 8)]
        comp_bins = [per_item[Cohort.COMPLIANCE_EXPERT.value]["all"]["counts"][v]
                     for v in range(1, 8)]
        if sum(dev_bins) and sum(comp_bins):
            comparisons[f"cohorts_{item.value}"] = chi_squared_independence(dev_bins, comp_bins)
    for cohort in Cohort:
        all_bins = [likert[LikertItem.FAMILIARITY.value][cohort.value]["all"]["counts"][v]
                    for v in range(1, 8)]
        over_bins = [likert[LikertItem.FAMILIARITY.value][cohort.value]["overlooked"]["counts"][v]
                     for v in range(1, 8)]
        if sum(all_bins) and sum(over_bins):
            comparisons[f"familiarity_all_vs_overlooked_{cohort.value}"] = (
                chi_squared_independence(all_bins, over_bins)
            )
    report["likert"] = likert
    report["chi_squared"] = comparisons
    return report
