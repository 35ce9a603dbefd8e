import pytest
from hypothesis import given, strategies as st

from usescope.errors import (
    DuplicateDomain,
    EmptyCatalog,
    InvalidProvenance,
    ValidationError,
)
from usescope.model import (
    AgreementVote,
    AnnotationCard,
    Cohort,
    CorrectedTier,
    DomainCatalog,
    DomainEntry,
    LikertItem,
    LikertScore,
    Provenance,
    Realisticness,
    RealisticnessVerdict,
    RiskAssessment,
    RiskTier,
    RunArtifact,
    RunConfig,
    TechnologyUse,
    UseConcepts,
    find_act_locations,
    load_domain_catalog,
)


def make_scores():
    return tuple(LikertScore(item=item, value=4) for item in LikertItem)


def make_use(use_id="1", domain="Energy"):
    return TechnologyUse(
        use_id=use_id,
        concepts=UseConcepts(
            domain=domain, purpose="Access control",
            capability="Verify staff at gates", ai_user="Operators",
            ai_subject="Staff",
        ),
        realisticness=RealisticnessVerdict(
            label=Realisticness.ALREADY_EXISTENT, justification="Deployed widely."
        ),
    )


class TestDomainCatalog:
    def test_reference_catalog_composition(self, catalog):
        assert len(catalog) == 46
        by_prov = [e.provenance for e in catalog.entries]
        assert by_prov.count(Provenance.FOCUS_GROUP) == 6
        assert by_prov.count(Provenance.ANNEX_III) + by_prov.count(Provenance.ACT_TEXT) == 40

    def test_duplicate_name_rejected(self, tmp_path):
        f = tmp_path / "cat.tsv"
        f.write_text("Energy\tact_text\nenergy\tact_text\n")
        with pytest.raises(DuplicateDomain):
            load_domain_catalog(f)

    def test_bad_provenance(self, tmp_path):
        f = tmp_path / "cat.tsv"
        f.write_text("Energy\tannex_iv\n")
        with pytest.raises(InvalidProvenance):
            load_domain_catalog(f)

    def test_empty_catalog(self, tmp_path):
        f = tmp_path / "cat.tsv"
        f.write_text("# only a comment\n")
        with pytest.raises(EmptyCatalog):
            load_domain_catalog(f)

    def test_lookup_is_total(self, catalog):
        assert catalog.lookup("energy").name == "Energy"
        assert catalog.lookup("ENERGY").provenance is Provenance.ACT_TEXT
        assert catalog.lookup("Astrology") is None

    def test_preserves_file_order(self, catalog):
        assert catalog.entries[0].name.startswith("Biometric identification")
        assert catalog.entries[-1].name == "Interpersonal Communication"


class TestUseConcepts:
    def test_blank_field_rejected(self):
        with pytest.raises(ValidationError):
            UseConcepts(domain="Energy", purpose="  ", capability="c",
                        ai_user="u", ai_subject="s")

    def test_off_catalog_marking(self, catalog):
        concepts = UseConcepts(domain="Astrology", purpose="p", capability="c",
                               ai_user="u", ai_subject="s")
        assert concepts.against_catalog(catalog).off_catalog is True
        on = UseConcepts(domain="energy", purpose="p", capability="c",
                         ai_user="u", ai_subject="s")
        assert on.against_catalog(catalog).off_catalog is False

    def test_description_rendering(self):
        concepts = make_use().concepts
        assert concepts.description() == (
            "Access control. Verify staff at gates. Energy."
        )


class TestRiskAssessment:
    def test_high_severity_requires_citation(self):
        with pytest.raises(ValidationError):
            RiskAssessment(use_id="1", description="d",
                           classification=RiskTier.PROHIBITED, reasoning="r")
        with pytest.raises(ValidationError):
            RiskAssessment(use_id="1", description="d",
                           classification=RiskTier.HIGH_RISK, reasoning="r",
                           relevant_text="the law generally")

    def test_low_risk_needs_no_citation(self):
        a = RiskAssessment(use_id="1", description="d",
                           classification=RiskTier.LIMITED_OR_LOW_RISK, reasoning="r")
        assert a.relevant_text is None

    def test_act_location_patterns(self):
        assert find_act_locations("Article 5(1)(d) applies") == ["Article 5(1)(d)"]
        assert find_act_locations("see Annex III, Section 1(a)")[0] == "Annex III"
        assert find_act_locations("per Amendment 51") == ["Amendment 51"]
        assert find_act_locations("the annex about risk") == []


class TestAnnotationCard:
    def test_compliance_requires_agreement(self):
        with pytest.raises(ValidationError):
            AnnotationCard(use_id="1", rater_id="L01",
                           cohort=Cohort.COMPLIANCE_EXPERT,
                           realisticness_vote=Realisticness.UPCOMING,
                           scores=make_scores())

    def test_developer_must_not_carry_agreement(self):
        with pytest.raises(ValidationError):
            AnnotationCard(use_id="1", rater_id="D01", cohort=Cohort.DEVELOPER,
                           realisticness_vote=Realisticness.UPCOMING,
                           scores=make_scores(),
                           classification_agreement=AgreementVote.AGREE)

    def test_disagree_requires_correction(self):
        with pytest.raises(ValidationError):
            AnnotationCard(use_id="1", rater_id="L01",
                           cohort=Cohort.COMPLIANCE_EXPERT,
                           realisticness_vote=Realisticness.UPCOMING,
                           scores=make_scores(),
                           classification_agreement=AgreementVote.DISAGREE)

    def test_correction_requires_disagree(self):
        with pytest.raises(ValidationError):
            AnnotationCard(use_id="1", rater_id="L01",
                           cohort=Cohort.COMPLIANCE_EXPERT,
                           realisticness_vote=Realisticness.UPCOMING,
                           scores=make_scores(),
                           classification_agreement=AgreementVote.AGREE,
                           corrected_classification=CorrectedTier.HIGH_RISK)

    def test_all_five_items_required(self):
        with pytest.raises(ValidationError):
            AnnotationCard(use_id="1", rater_id="D01", cohort=Cohort.DEVELOPER,
                           realisticness_vote=Realisticness.UPCOMING,
                           scores=make_scores()[:4])

    def test_likert_bounds(self):
        with pytest.raises(ValidationError):
            LikertScore(item=LikertItem.FAMILIARITY, value=0)
        with pytest.raises(ValidationError):
            LikertScore(item=LikertItem.FAMILIARITY, value=8)


class TestRunArtifact:
    def test_duplicate_use_ids_rejected(self):
        with pytest.raises(ValidationError):
            RunArtifact(run_id="r", technology="t", config=RunConfig(),
                        uses=(make_use("1"), make_use("1", domain="Family")))

    def test_dangling_reference_rejected(self):
        assessment = RiskAssessment(use_id="9", description="d",
                                    classification=RiskTier.LIMITED_OR_LOW_RISK,
                                    reasoning="r")
        with pytest.raises(ValidationError):
            RunArtifact(run_id="r", technology="t", config=RunConfig(),
                        uses=(make_use("1"),), risk=(assessment,))

    def test_duplicate_card_rejected(self):
        card = AnnotationCard(use_id="1", rater_id="D01", cohort=Cohort.DEVELOPER,
                              realisticness_vote=Realisticness.UPCOMING,
                              scores=make_scores())
        with pytest.raises(ValidationError):
            RunArtifact(run_id="r", technology="t", config=RunConfig(),
                        uses=(make_use("1"),), annotations=(card, card))


# Serialization round-trips ---------------------------------------------------

st_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\x00"),
    min_size=1, max_size=40,
).filter(lambda s: s.strip())


@st.composite
def st_use(draw, use_id="1"):
    return TechnologyUse(
        use_id=use_id,
        concepts=UseConcepts(
            domain=draw(st_text), purpose=draw(st_text), capability=draw(st_text),
            ai_user=draw(st_text), ai_subject=draw(st_text),
            off_catalog=draw(st.booleans()),
        ),
        realisticness=RealisticnessVerdict(
            label=draw(st.sampled_from(list(Realisticness))),
            justification=draw(st_text),
        ),
        summary=draw(st_text),
    )


@given(st_use())
def test_use_round_trip(use):
    assert TechnologyUse.from_dict(use.to_dict()) == use


@given(st.sampled_from(list(RiskTier)), st_text, st_text)
def test_assessment_round_trip(tier, description, reasoning):
    relevant = "Article 5(1)(d) quoted" if tier is not RiskTier.LIMITED_OR_LOW_RISK else None
    a = RiskAssessment(use_id="1", description=description, classification=tier,
                       reasoning=reasoning, relevant_text=relevant)
    assert RiskAssessment.from_dict(a.to_dict()) == a


@given(st.sampled_from(list(Cohort)),
       st.sampled_from(list(Realisticness)),
       st.lists(st.integers(min_value=1, max_value=7), min_size=5, max_size=5),
       st.booleans())
def test_card_round_trip(cohort, vote, values, disagree):
    scores = tuple(LikertScore(item=item, value=v) for item, v in zip(LikertItem, values))
    agreement = None
    corrected = None
    if cohort is Cohort.COMPLIANCE_EXPERT:
        agreement = AgreementVote.DISAGREE if disagree else AgreementVote.AGREE
        corrected = CorrectedTier.INSUFFICIENT_INFORMATION if disagree else None
    card = AnnotationCard(use_id="7", rater_id="R1", cohort=cohort,
                          realisticness_vote=vote, scores=scores,
                          classification_agreement=agreement,
                          corrected_classification=corrected)
    assert AnnotationCard.from_dict(card.to_dict()) == card


def test_artifact_round_trip(fixture_artifact):
    again = RunArtifact.from_dict(fixture_artifact.to_dict())
    assert again == fixture_artifact
