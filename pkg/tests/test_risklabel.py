import json

import pytest

from usescope.errors import (
    IncompleteCorpus,
    MissingReasoning,
    UncitedHighSeverity,
    UnknownClassification,
    ValidationError,
)
from usescope.gateway import ChatGateway, GatewayMode, Transcript, TranscriptStore
from usescope.model import Realisticness, RealisticnessVerdict, RiskTier, TechnologyUse, UseConcepts
from usescope.risklabel import (
    ActCorpus,
    ActExcerpt,
    build_risk_prompt,
    classify_uses,
    parse_act_excerpts,
    parse_risk_response,
    risk_distribution,
    build_risk_prompt as build,
)


def surveillance_use():
    return TechnologyUse(
        use_id="43",
        concepts=UseConcepts(
            domain="Security and Cybersecurity", purpose="Surveillance",
            capability="Identifying individuals in surveillance footage",
            ai_user="Law Enforcement, Security Companies", ai_subject="General Public",
        ),
        realisticness=RealisticnessVerdict(label=Realisticness.ALREADY_EXISTENT,
                                           justification="deployed"),
    )


class TestActCorpus:
    def test_shipped_corpus_covers_minimum(self, act_corpus):
        locations = [e.location for e in act_corpus.excerpts]
        assert any(l.startswith("Article 5") for l in locations)
        assert any(l.startswith("Annex III") for l in locations)

    def test_missing_annex_rejected(self):
        with pytest.raises(IncompleteCorpus):
            ActCorpus(excerpts=(ActExcerpt("Article 5(1)(a)", "text"),))

    def test_missing_article5_rejected(self):
        with pytest.raises(IncompleteCorpus):
            ActCorpus(excerpts=(ActExcerpt("Annex III, Section 1(a)", "text"),))

    def test_duplicate_locations_rejected(self):
        with pytest.raises(ValidationError):
            ActCorpus(excerpts=(
                ActExcerpt("Article 5(1)(a)", "a"),
                ActExcerpt("Article 5(1)(a)", "b"),
                ActExcerpt("Annex III, Section 1(a)", "c"),
            ))

    def test_block_parsing(self):
        text = "Article 5(1)(a)\nline one\nline two\n\nAnnex III, Section 2\nmore text\n"
        excerpts = parse_act_excerpts(text)
        assert [e.location for e in excerpts] == ["Article 5(1)(a)", "Annex III, Section 2"]
        assert excerpts[0].text == "line one\nline two"


class TestRiskPrompt:
    def test_contains_judge_role_and_article5(self, act_corpus):
        request = build_risk_prompt(surveillance_use(), act_corpus,
                                    technology="Facial Recognition and Analysis")
        assert "Experienced Judge" in request.system_text
        article5 = next(e for e in act_corpus.excerpts
                        if e.location == "Article 5(1)(d)")
        assert article5.text in request.user_text

    def test_section_order(self, act_corpus):
        text = build_risk_prompt(surveillance_use(), act_corpus).user_text
        positions = [text.index(h) for h in
                     ("## Instructions", "## Relevant sections", "## Use to assess",
                      "## Output structure")]
        assert positions == sorted(positions)
        assert "hypothetical AI system" in text

    def test_use_rendered_as_five_concepts(self, act_corpus):
        text = build_risk_prompt(surveillance_use(), act_corpus).user_text
        for label in ("Domain:", "Purpose:", "Capability:", "AI user:", "AI subject:"):
            assert label in text

    def test_determinism(self, act_corpus):
        use = surveillance_use()
        assert build(use, act_corpus) == build(use, act_corpus)

    def test_default_temperature_zero(self, act_corpus):
        assert build_risk_prompt(surveillance_use(), act_corpus).temperature == 0.0


class TestParseRiskResponse:
    def test_prohibited_exemplar(self, fixtures_dir):
        text = (fixtures_dir / "risk_exemplars" / "prohibited.json").read_text()
        a = parse_risk_response(text, "43")
        assert a.classification is RiskTier.PROHIBITED
        assert a.reasoning.startswith(
            "Prohibited due to the use of real-time remote biometric identification")
        assert "Article 5(1)(d)" in a.relevant_text

    def test_high_risk_exemplar(self, fixtures_dir):
        text = (fixtures_dir / "risk_exemplars" / "high_risk.json").read_text()
        a = parse_risk_response(text, "127")
        assert a.classification is RiskTier.HIGH_RISK
        assert "Annex III, Section 1(a)" in a.relevant_text

    def test_low_risk_exemplar(self, fixtures_dir):
        text = (fixtures_dir / "risk_exemplars" / "limited_or_low_risk.json").read_text()
        a = parse_risk_response(text, "121")
        assert a.classification is RiskTier.LIMITED_OR_LOW_RISK
        assert a.reasoning == (
            "Limited or Low Risk due to its application in gaming for enhancing "
            "immersion without significant risk to fundamental rights or safety.")

    def test_medium_risk_rejected(self):
        body = json.dumps({"description": "d", "classification": "medium risk",
                           "reasoning": "r"})
        with pytest.raises(UnknownClassification) as exc:
            parse_risk_response(body, "1")
        assert exc.value.label == "medium risk"

    def test_missing_reasoning(self):
        body = json.dumps({"description": "d", "classification": "limited or low risk"})
        with pytest.raises(MissingReasoning):
            parse_risk_response(body, "1")

    def test_uncited_high_severity(self):
        body = json.dumps({"description": "d", "classification": "prohibited",
                           "reasoning": "bad", "relevant_text": "the general rules"})
        with pytest.raises(UncitedHighSeverity):
            parse_risk_response(body, "1")

    def test_labeled_lines_format(self):
        text = ("Description: A kiosk that greets recognized customers.\n"
                "Classification: Limited or Low Risk\n"
                "Reasoning: Narrow consumer convenience feature.")
        a = parse_risk_response(text, "9")
        assert a.classification is RiskTier.LIMITED_OR_LOW_RISK
        assert a.description.startswith("A kiosk")

    def test_surface_form_normalization(self):
        for surface in ("PROHIBITED", "High Risk", "high_risk", "limited or low risk",
                        "Limited or Low Risk"):
            body = json.dumps({
                "description": "d", "classification": surface,
                "reasoning": "r", "relevant_text": "Article 5(1)(a) cited"})
            assert parse_risk_response(body, "1").classification in RiskTier


class TestClassifyUses:
    def test_empty_input(self, act_corpus):
        assert classify_uses([], act_corpus, ChatGateway(), GatewayMode.REPLAY) == []

    def test_order_alignment_and_inline_errors(self, tmp_path, act_corpus):
        uses = []
        store = TranscriptStore(tmp_path)
        for i in range(5):
            use = TechnologyUse(
                use_id=str(i + 1),
                concepts=UseConcepts(domain="Energy", purpose=f"purpose {i}",
                                     capability="cap", ai_user="ops", ai_subject="staff"),
                realisticness=RealisticnessVerdict(label=Realisticness.UPCOMING,
                                                   justification="j"),
            )
            uses.append(use)
            request = build_risk_prompt(use, act_corpus, technology="FRA")
            if i == 2:
                response = "totally broken {"
            else:
                response = json.dumps({
                    "description": "d", "classification": "limited or low risk",
                    "reasoning": "narrow scope"})
            store.save(Transcript.record(request, response))
        gateway = ChatGateway(transcripts=store)
        outcomes = classify_uses(uses, act_corpus, gateway, GatewayMode.REPLAY,
                                 technology="FRA")
        assert [o.use_id for o in outcomes] == ["1", "2", "3", "4", "5"]
        assert sum(1 for o in outcomes if o.assessment) == 4
        assert outcomes[2].assessment is None
        assert outcomes[2].error["error"] == "malformed_output"

    def test_fixture_replay_distribution(self, fixture_artifact):
        dist = risk_distribution(list(fixture_artifact.risk))
        assert dist["counts"] == {"prohibited": 10, "high_risk": 66,
                                  "limited_or_low_risk": 62}


class TestRiskDistribution:
    def test_paper_shaped_rounding(self, fixture_artifact):
        dist = risk_distribution(list(fixture_artifact.risk))
        assert dist["percent_int"] == {"prohibited": 7, "high_risk": 48,
                                       "limited_or_low_risk": 45}
        assert abs(sum(dist["percent"].values()) - 100.0) <= 1.0

    def test_single_prohibited(self):
        from usescope.model import RiskAssessment

        one = RiskAssessment(use_id="1", description="d",
                             classification=RiskTier.PROHIBITED, reasoning="r",
                             relevant_text="Article 5(1)(d)")
        dist = risk_distribution([one])
        assert dist["percent_int"] == {"prohibited": 100, "high_risk": 0,
                                       "limited_or_low_risk": 0}

    def test_empty_is_undefined(self):
        dist = risk_distribution([])
        assert dist["total"] == 0
        assert all(v == 0 for v in dist["counts"].values())
        assert all(v is None for v in dist["percent"].values())
