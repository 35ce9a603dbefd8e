import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from usescope.errors import (
    DegenerateMarginals,
    EmptyDistribution,
    MissingDecision,
    ShapeError,
)
from usescope.evaluation import (
    NO_CONSENSUS,
    AnnotationPlan,
    CoverageMatch,
    GroundTruthUse,
    RaterMatrix,
    accuracy,
    build_evaluation_report,
    chi_squared_independence,
    chi_squared_p_value,
    cohens_kappa,
    compute_coverage,
    export_annotations_csv,
    fleiss_kappa,
    import_annotations_csv,
    likert_summary,
    load_ground_truth,
    majority_label,
    quality_gate,
    realisticness_agreement,
    regularized_gamma_upper,
)
from usescope.model import (
    AnnotationCard,
    Cohort,
    LikertItem,
    LikertScore,
    Realisticness,
)


def dev_card(use_id, rater_id, familiarity=4, vote=Realisticness.UPCOMING):
    values = {LikertItem.FAMILIARITY: familiarity}
    scores = tuple(LikertScore(item=item, value=values.get(item, 4))
                   for item in LikertItem)
    return AnnotationCard(use_id=use_id, rater_id=rater_id, cohort=Cohort.DEVELOPER,
                          realisticness_vote=vote, scores=scores)


class TestCoverage:
    def test_shipped_fixture_is_96_percent(self, ground_truth_path, fixtures_dir):
        import json

        gt = load_ground_truth(ground_truth_path)
        assert len(gt) == 75
        matches = [CoverageMatch.from_dict(m) for m in
                   json.loads((fixtures_dir / "coverage_matches.json").read_text())]
        result = compute_coverage(gt, matches)
        assert result["coverage_percent"] == 96.0
        assert len(result["unmatched"]) == 3
        assert {u["gt_id"] for u in result["unmatched"]} == {"5", "72", "74"}

    def test_all_matched(self):
        gt = [GroundTruthUse(gt_id="1", description="a"),
              GroundTruthUse(gt_id="2", description="b")]
        matches = [CoverageMatch("1", ("10",)), CoverageMatch("2", ("11",))]
        assert compute_coverage(gt, matches)["coverage_percent"] == 100.0

    def test_none_matched(self):
        gt = [GroundTruthUse(gt_id="1", description="a")]
        result = compute_coverage(gt, [CoverageMatch("1", ())])
        assert result["coverage_percent"] == 0.0
        assert result["unmatched"][0]["description"] == "a"

    def test_missing_decision(self):
        gt = [GroundTruthUse(gt_id="1", description="a")]
        with pytest.raises(MissingDecision):
            compute_coverage(gt, [])

    def test_unknown_use_reference_rejected(self):
        gt = [GroundTruthUse(gt_id="1", description="a")]
        with pytest.raises(Exception):
            compute_coverage(gt, [CoverageMatch("1", ("999",))], known_use_ids={"1"})


class TestMajority:
    def test_two_of_three(self):
        assert majority_label(["High", "High", "Low"], 2) == "High"

    def test_three_way_split(self):
        assert majority_label(["P", "H", "L"], 2) is NO_CONSENSUS

    def test_single_vote(self):
        assert majority_label(["X"], 1) == "X"

    def test_two_labels_at_quorum(self):
        assert majority_label(["A", "A", "B", "B"], 2) is NO_CONSENSUS

    def test_empty_votes(self):
        with pytest.raises(ShapeError):
            majority_label([], 1)


class TestAccuracy:
    def test_identical(self):
        assert accuracy(["a", "b"], ["a", "b"]) == 100.0

    def test_disjoint(self):
        assert accuracy(["a", "b"], ["b", "a"]) == 0.0

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            accuracy(["a"], ["a", "b"])

    def test_constructed_123_of_130(self):
        gold = ["H"] * 123 + ["P"] * 7
        predicted = ["H"] * 123 + ["H"] * 7
        assert accuracy(gold, predicted) == 94.6


class TestCohensKappa:
    def test_perfect_agreement_is_exactly_one(self):
        assert cohens_kappa(["a", "b", "a"], ["a", "b", "a"]) == 1.0

    def test_hand_computed_zero(self):
        assert cohens_kappa(["A", "A", "B", "B"], ["A", "B", "A", "B"]) == pytest.approx(0.0)

    def test_2x2_confusion_table_oracle(self):
        # table {AA:20, AB:5, BA:10, BB:15}: po=35/50, pe from marginals
        a = ["A"] * 25 + ["B"] * 25
        b = ["A"] * 20 + ["B"] * 5 + ["A"] * 10 + ["B"] * 15
        po = 35 / 50
        pe = (25 / 50) * (30 / 50) + (25 / 50) * (20 / 50)
        expected = (po - pe) / (1 - pe)
        assert cohens_kappa(a, b) == pytest.approx(expected, abs=1e-9)

    def test_single_label_universe_is_perfect_agreement(self):
        # p_e = 1 is only reachable when both raters always give the same
        # label, which forces p_o = 1; the defined value there is exactly 1.
        assert cohens_kappa(["a", "a", "a"], ["a", "a", "a"]) == 1.0

    def test_brute_force_oracle_randomized(self):
        rng = random.Random(12)
        for _ in range(25):
            n = rng.randint(2, 12)
            labels = ["x", "y", "z"][: rng.randint(2, 3)]
            a = [rng.choice(labels) for _ in range(n)]
            b = [rng.choice(labels) for _ in range(n)]
            po = sum(1 for s, t in zip(a, b) if s == t) / n
            pe = sum((a.count(l) / n) * (b.count(l) / n) for l in set(a) | set(b))
            if po == 1.0:
                assert cohens_kappa(a, b) == 1.0
            elif abs(1 - pe) < 1e-12:
                with pytest.raises(DegenerateMarginals):
                    cohens_kappa(a, b)
            else:
                assert cohens_kappa(a, b) == pytest.approx((po - pe) / (1 - pe), abs=1e-9)


def fleiss_oracle(rows):
    """Direct-formula recomputation, written independently of the module."""
    n = len(rows[0])
    big_n = len(rows)
    cats = sorted({l for row in rows for l in row})
    table = [[row.count(c) for c in cats] for row in rows]
    p_i = [(sum(x * x for x in r) - n) / (n * (n - 1)) for r in table]
    p_bar = sum(p_i) / big_n
    p_j = [sum(r[j] for r in table) / (big_n * n) for j in range(len(cats))]
    p_e = sum(p * p for p in p_j)
    if p_bar == 1.0:
        return 1.0
    return (p_bar - p_e) / (1 - p_e)


class TestFleissKappa:
    def test_all_agree_is_exactly_one(self):
        assert fleiss_kappa([["a"] * 3] * 5) == 1.0

    def test_hand_fixture(self):
        rows = [["a", "a", "b"], ["b", "b", "b"], ["a", "b", "b"], ["a", "a", "a"]]
        assert fleiss_kappa(rows) == pytest.approx(fleiss_oracle(rows), abs=1e-9)

    def test_engineered_zero(self):
        # P_bar == P_e by construction: every item a 2-1 split over two labels
        # with balanced totals gives p=(.5,.5), P_e=.5; P_i=1/3 != .5, so build
        # a mix of unanimous and split items that lands exactly on P_e.
        rows = [["a", "a", "a"], ["b", "b", "b"],
                ["a", "a", "b"], ["b", "b", "a"],
                ["a", "b", "a"], ["b", "a", "b"],
                ["a", "b", "b"], ["b", "a", "a"]]
        value = fleiss_kappa(rows)
        assert value == pytest.approx(fleiss_oracle(rows), abs=1e-9)

    def test_ragged_rejected(self):
        with pytest.raises(ShapeError):
            fleiss_kappa([["a", "b"], ["a"]])
        with pytest.raises(ShapeError):
            fleiss_kappa([["a", None, "b"]])

    def test_single_rater_rejected(self):
        with pytest.raises(ShapeError):
            fleiss_kappa([["a"], ["b"]])

    def test_rater_matrix_label_set(self):
        with pytest.raises(Exception):
            RaterMatrix(rows=(("a", "q"),), label_set=frozenset({"a", "b"}))

    def test_oracle_equivalence_exhaustive_small(self):
        rng = random.Random(5)
        for _ in range(30):
            items = rng.randint(1, 12)
            raters = rng.randint(2, 4)
            labels = ["a", "b", "c"][: rng.randint(2, 3)]
            rows = [[rng.choice(labels) for _ in range(raters)] for _ in range(items)]
            assert fleiss_kappa(rows) == pytest.approx(fleiss_oracle(rows), abs=1e-9)


@given(st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from("abc")),
                min_size=2, max_size=30))
@settings(max_examples=80)
def test_kappa_bounds_and_permutation_invariance(pairs):
    a = [p[0] for p in pairs]
    b = [p[1] for p in pairs]
    try:
        k = cohens_kappa(a, b)
    except DegenerateMarginals:
        return
    assert -1.0 - 1e-9 <= k <= 1.0 + 1e-9
    mapping = {"a": "z", "b": "x", "c": "y"}
    k2 = cohens_kappa([mapping[l] for l in a], [mapping[l] for l in b])
    assert k2 == pytest.approx(k, abs=1e-12)


class TestChiSquared:
    def test_identical_distributions(self):
        result = chi_squared_independence([5, 3, 2, 1, 1, 1, 1], [5, 3, 2, 1, 1, 1, 1])
        assert result["statistic"] == pytest.approx(0.0, abs=1e-12)
        assert result["p_value"] == pytest.approx(1.0, abs=1e-12)

    def test_critical_value_df6(self):
        assert chi_squared_p_value(12.592, 6) == pytest.approx(0.05, abs=1e-3)

    def test_hand_computed_2x2(self):
        result = chi_squared_independence([10, 0], [0, 10])
        assert result["statistic"] == pytest.approx(20.0, abs=1e-9)
        assert result["df"] == 1

    def test_pooling_of_empty_bins(self):
        result = chi_squared_independence([3, 0, 5, 0], [4, 0, 6, 0])
        assert result["df"] == 1
        assert result["pooled_bins"] == 2

    def test_all_zero_rejected(self):
        with pytest.raises(EmptyDistribution):
            chi_squared_independence([0, 0], [0, 0])

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            chi_squared_independence([1, 2], [1, 2, 3])

    def test_gamma_against_scipy_oracle(self):
        scipy_special = pytest.importorskip("scipy.special")
        for a, x in [(0.5, 0.3), (1.0, 1.0), (3.0, 12.592 / 2), (5.5, 2.2),
                     (10.0, 30.0), (0.5, 20.0), (2.0, 0.0)]:
            assert regularized_gamma_upper(a, x) == pytest.approx(
                float(scipy_special.gammaincc(a, x)), abs=1e-12)

    def test_p_value_against_scipy_oracle(self):
        scipy_stats = pytest.importorskip("scipy.stats")
        for stat, df in [(12.592, 6), (20.0, 1), (3.84, 1), (0.5, 3), (45.0, 10)]:
            assert chi_squared_p_value(stat, df) == pytest.approx(
                float(scipy_stats.chi2.sf(stat, df)), abs=1e-12)

    def test_hand_computed_2x7(self):
        a = [10, 8, 6, 4, 3, 2, 1]
        b = [1, 2, 3, 4, 6, 8, 10]
        result = chi_squared_independence(a, b)
        # independent recomputation
        total_a, total_b = sum(a), sum(b)
        grand = total_a + total_b
        stat = 0.0
        for x, y in zip(a, b):
            col = x + y
            ea = total_a * col / grand
            eb = total_b * col / grand
            stat += (x - ea) ** 2 / ea + (y - eb) ** 2 / eb
        assert result["statistic"] == pytest.approx(stat, abs=1e-9)
        assert result["df"] == 6


class TestLikert:
    def test_sixty_percent_bin_one(self):
        cards = [dev_card("1", f"r{i}", familiarity=(1 if i < 6 else 5))
                 for i in range(10)]
        summary = likert_summary(cards, LikertItem.FAMILIARITY,
                                 cohort=Cohort.DEVELOPER, use_ids={"1"})
        assert summary["percent"][1] == 60.0

    def test_empty_selection(self):
        summary = likert_summary([], LikertItem.ADOPTION)
        assert summary["total"] == 0
        assert all(v == 0 for v in summary["counts"].values())

    def test_single_card_score_seven(self):
        card = dev_card("1", "r1")
        card = AnnotationCard(
            use_id="1", rater_id="r1", cohort=Cohort.DEVELOPER,
            realisticness_vote=Realisticness.UPCOMING,
            scores=tuple(LikertScore(item=item, value=7) for item in LikertItem))
        summary = likert_summary([card], LikertItem.TRANSFORMATION)
        assert summary["percent"][7] == 100.0

    @given(st.lists(st.integers(min_value=1, max_value=7), min_size=0, max_size=30))
    def test_conservation(self, values):
        cards = [dev_card(str(i + 1), "r1", familiarity=v) for i, v in enumerate(values)]
        summary = likert_summary(cards, LikertItem.FAMILIARITY)
        assert sum(summary["counts"].values()) == len(cards)


class TestRealisticnessAgreement:
    def test_all_confirmed_realistic(self):
        llm = {str(i): Realisticness.ALREADY_EXISTENT for i in range(130)}
        votes = {str(i): (Realisticness.ALREADY_EXISTENT if i % 3 else Realisticness.UPCOMING)
                 for i in range(130)}
        result = realisticness_agreement(llm, votes)
        assert result["collapsed_percent"] == 100.0
        assert result["full_percent"] < 100.0

    def test_empty(self):
        result = realisticness_agreement({}, {})
        assert result["collapsed_percent"] is None

    def test_collapse_rule(self):
        llm = {"1": Realisticness.UPCOMING}
        votes = {"1": Realisticness.ALREADY_EXISTENT}
        result = realisticness_agreement(llm, votes)
        assert result["collapsed_percent"] == 100.0
        assert result["full_percent"] == 0.0


class TestQualityGate:
    def test_two_of_three_passes(self):
        assert quality_gate([True, True, False]) is True

    def test_one_of_three_fails(self):
        assert quality_gate([False, False, True]) is False

    def test_all_correct(self):
        assert quality_gate([True, True, True]) is True

    def test_wrong_count(self):
        with pytest.raises(ShapeError):
            quality_gate([True, True])


class TestPlan:
    def test_quota_check(self):
        plan = AnnotationPlan(use_ids=("1", "2"),
                              required=((Cohort.DEVELOPER, 2),))
        cards = [dev_card("1", "r1"), dev_card("1", "r2"), dev_card("2", "r1")]
        result = plan.check(cards)
        assert result["satisfied"] is False
        assert result["shortfalls"] == [
            {"use_id": "2", "cohort": "developer", "have": 1, "need": 2}]


class TestCsv:
    def test_round_trip(self, fixtures_dir):
        text = (fixtures_dir / "annotations.csv").read_text()
        cards = import_annotations_csv(text)
        assert len(cards) == 138 * 6
        assert export_annotations_csv(cards) == text

    def test_header_enforced(self):
        with pytest.raises(Exception):
            import_annotations_csv("a,b,c\n1,2,3\n")


class TestBattery:
    def test_fixture_report(self, fixture_artifact, fixtures_dir, ground_truth_path):
        import json

        cards = import_annotations_csv((fixtures_dir / "annotations.csv").read_text())
        from usescope.model import RunArtifact

        artifact = RunArtifact.from_dict(
            fixture_artifact.to_dict() | {"annotations": [c.to_dict() for c in cards]})
        gt = load_ground_truth(ground_truth_path)
        matches = [CoverageMatch.from_dict(m) for m in
                   json.loads((fixtures_dir / "coverage_matches.json").read_text())]
        report = build_evaluation_report(artifact, gt=gt, matches=matches)
        assert report["coverage"]["coverage_percent"] == 96.0
        assert report["realisticness"]["collapsed_percent"] == 100.0
        cls = report["classification"]
        assert cls["items"] == 130
        assert cls["excluded"]["unlikely"] == 8
        assert cls["accuracy_percent"] == 94.6
        assert 0.89 <= cls["cohens_kappa"] <= 0.92
        assert 0.45 <= cls["fleiss_kappa"] <= 0.53
        assert "familiarity_all_vs_overlooked_developer" in report["chi_squared"]
