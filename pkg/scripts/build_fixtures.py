"""Regenerate the replay fixtures under tests/fixtures/.

Deterministic: running it twice produces identical files. The fixture world
is a full technology exploration run ("Facial Recognition and Analysis",
run id fixture-fra): a generation transcript with 140 records (two planted
duplicates), one risk transcript per deduplicated use, a 2050-line synthetic
literature corpus whose 99.9th-percentile threshold leaves exactly 16 uses
unsupported, coverage match decisions (72 of 75 matched), and an annotation
CSV from six raters per use shaped to the target agreement statistics.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from fixture_uses import USE_TABLE  # noqa: E402

from usescope.config import (  # noqa: E402
    default_act_path,
    default_catalog_path,
    default_template_path,
)
from usescope.evaluation import export_annotations_csv, fleiss_kappa  # noqa: E402
from usescope.gateway import Transcript, TranscriptStore  # noqa: E402
from usescope.generation import (  # noqa: E402
    GenerationTemplate,
    build_generation_prompt,
    deduplicate_uses,
    parse_uses_response,
)
from usescope.jsonutil import stable_json  # noqa: E402
from usescope.model import (  # noqa: E402
    AgreementVote,
    AnnotationCard,
    Cohort,
    CorrectedTier,
    LikertItem,
    LikertScore,
    Realisticness,
    load_domain_catalog,
)
from usescope.risklabel import build_risk_prompt, load_act_corpus  # noqa: E402

TECHNOLOGY = "Facial Recognition and Analysis"
RUN_ID = "fixture-fra"
FIXTURES = Path(__file__).parent.parent / "tests" / "fixtures"

OVERLOOKED = {27, 52, 68, 69, 70, 80, 83, 84, 88, 91, 98, 104, 108, 114, 118, 120}
SUPPORT_COUNTS = {1: 291, 134: 251, 60: 189}

REAL_SURFACE = {"ae": "already existent", "up": "upcoming", "un": "unlikely"}
TIER_SURFACE = {"P": "prohibited", "H": "high risk", "L": "limited or low risk"}

ACT_QUOTES = {
    "Article 5(1)(a)": "deploys subliminal techniques beyond a person's consciousness in "
                       "order to materially distort a person's behaviour",
    "Article 5(1)(b)": "exploits any of the vulnerabilities of a specific group of persons "
                       "due to their age, physical or mental disability",
    "Article 5(1)(c)": "evaluation or classification of the trustworthiness of natural "
                       "persons based on their social behaviour, with the social score "
                       "leading to detrimental or unfavourable treatment",
    "Article 5(1)(d)": "The use of 'real-time' remote biometric identification systems in "
                       "publicly accessible spaces for the purpose of law enforcement is "
                       "prohibited.",
    "Amendment 51": "The indiscriminate and untargeted scraping of biometric data from "
                    "social media to create or expand facial recognition databases adds "
                    "to the feeling of mass surveillance.",
}
ANNEX_QUOTE = ("AI systems referred to in Annex III shall be considered high-risk.")

VENUES = [
    "arXiv.org",
    "International Journal for Research in Applied Science and Engineering Technology",
    "IEEE International Conference on Systems, Man and Cybernetics",
    "ACM Multimedia",
    "Interspeech",
    "PLoS ONE",
    "IEEE/ACM International Conference on Human-Robot Interaction",
    "Computer",
]

BACKGROUND_VOCAB = (
    "thermal conductivity of layered perovskite films under cyclic strain|"
    "spectral classification of variable stars in dwarf spheroidal galaxies|"
    "finite element simulation of fatigue crack growth in welded joints|"
    "catalytic decomposition pathways of nitrous oxide on copper surfaces|"
    "Bayesian calibration of watershed runoff models from sparse gauges|"
    "topological invariants of quasiperiodic lattice vibration spectra|"
    "mitochondrial gene expression shifts in alpine moss populations|"
    "queueing delay bounds for bursty traffic in optical packet switches|"
    "phase-change memory endurance under asymmetric write pulses|"
    "sediment transport regimes in braided glacial outwash channels|"
    "protein folding intermediates resolved by pulsed electron resonance|"
    "stability margins of grid-forming inverters with virtual inertia|"
    "pollinator network resilience after prescribed grassland burns|"
    "anisotropic etching kinetics of silicon carbide in chlorine plasmas|"
    "survey of coded caching strategies for fog radio access networks|"
    "magnetostratigraphy of late Miocene lacustrine deposits|"
    "deep ocean mixing estimates from Argo float drift trajectories|"
    "loop quantum corrections to homogeneous cosmological backgrounds|"
    "enzyme promiscuity and substrate channeling in synthetic operons|"
    "crosstalk-aware routing for monolithic three-dimensional circuits"
).split("|")


def load_uses():
    catalog = load_domain_catalog(default_catalog_path())
    rows = []
    for domain, uses in USE_TABLE:
        assert catalog.lookup(domain) is not None, domain
        for row in uses:
            rows.append((domain,) + row)
    assert len(rows) == 138
    return rows


def generation_record(domain, row):
    purpose, capability, ai_user, ai_subject, real, justification = row[:6]
    return {
        "domain": domain,
        "purpose": purpose,
        "capability": capability,
        "ai_user": ai_user,
        "ai_subject": ai_subject,
        "realisticness": REAL_SURFACE[real],
        "justification": justification,
    }


def build_generation_response(rows) -> str:
    records = [generation_record(r[0], r[1:]) for r in rows]
    # Two planted duplicates: same normalized key as earlier records, reworded
    # elsewhere, so deduplication drops exactly these two.
    dup_a = dict(records[25])  # workplace attendance
    dup_a["capability"] = "Recognize workers' faces at the gate to register their shift"
    dup_a["justification"] = "Face-based clocking is standard in shift work."
    dup_b = dict(records[0])  # secure access control
    dup_b["justification"] = "Entry control remains the canonical deployment."
    records = records + [dup_a, dup_b]
    assert len(records) == 140
    return json.dumps(records, indent=1, ensure_ascii=False)


def risk_reasoning(row):
    domain, purpose, capability = row[0], row[1], row[2]
    tier, act, note = row[7], row[8], row[9]
    if tier == "P":
        fragment = note or ("the use of real-time remote biometric identification in "
                            "publicly accessible spaces for law enforcement")
        loc = act.replace("Amendment 51", "Amendment 51")
        return f"Prohibited due to {fragment}, which falls under the EU AI Act {loc}."
    if tier == "H":
        fragment = note or "the use of biometric identification"
        return f"High Risk due to {fragment}, which falls under the EU AI Act {act}."
    if note:
        return f"Limited or Low Risk due to {note}."
    if domain == "Gaming and interactive experiences" and purpose == "Enhancing player immersion":
        return ("Limited or Low Risk due to its application in gaming for enhancing "
                "immersion without significant risk to fundamental rights or safety.")
    return (f"Limited or Low Risk due to its application in {domain.lower()} for "
            f"{purpose.lower()} without significant risk to fundamental rights or safety.")


def relevant_text_for(row):
    tier, act = row[7], row[8]
    if tier == "L" or act is None:
        return None
    if act in ACT_QUOTES:
        return f"{act}: \"{ACT_QUOTES[act]}\""
    return f"{act}: \"{ANNEX_QUOTE}\""


def risk_response(row) -> str:
    domain, purpose, capability, ai_user, ai_subject = row[:5]
    tier = row[7]
    description = (
        f"A hypothetical {TECHNOLOGY} system deployed by {ai_user.lower()} in the "
        f"{domain.lower()} domain. Its purpose is {purpose.lower()}: the system would "
        f"{capability[0].lower()}{capability[1:]}, directly affecting {ai_subject.lower()}."
    )
    return json.dumps({
        "description": description,
        "classification": TIER_SURFACE[tier],
        "relevant_text": relevant_text_for(row),
        "reasoning": risk_reasoning(row),
    }, indent=1, ensure_ascii=False)


def write_transcripts(rows):
    catalog = load_domain_catalog(default_catalog_path())
    template = GenerationTemplate.load(default_template_path(), catalog)
    act = load_act_corpus(default_act_path())
    store = TranscriptStore(FIXTURES / "transcripts")

    response = build_generation_response(rows)
    request = build_generation_prompt(TECHNOLOGY, template, model_name="gpt-4",
                                      temperature=0.7)
    store.save(Transcript.record(request, response))

    # Derive the post-parse, post-dedup uses exactly as the pipeline will.
    outcome = parse_uses_response(response, catalog=template.domains)
    assert not outcome.skipped
    uses = deduplicate_uses(outcome.uses)
    assert len(uses) == 138

    by_id = {str(i + 1): rows[i] for i in range(138)}
    for use in uses:
        row = by_id[use.use_id]
        assert use.concepts.purpose == row[1], (use.use_id, use.concepts.purpose, row[1])
        request = build_risk_prompt(use, act, technology=TECHNOLOGY,
                                    model_name="gpt-4", temperature=0.0)
        store.save(Transcript.record(request, risk_response(row)))
    return uses


def exemplar_fixture_rows(rows):
    # The three per-tier exemplar responses, also shipped standalone.
    return {"prohibited": rows[42], "high_risk": rows[126], "limited_or_low_risk": rows[120]}


def write_exemplars(rows):
    out = FIXTURES / "risk_exemplars"
    out.mkdir(parents=True, exist_ok=True)
    for name, row in exemplar_fixture_rows(rows).items():
        (out / f"{name}.json").write_text(risk_response(row) + "\n", encoding="utf-8")


def write_corpus(rows, uses):
    rng = random.Random(424242)
    desc = {u.use_id: u.concepts.description() for u in uses}
    records = []
    for i in range(1, 139):
        if i in OVERLOOKED:
            continue
        count = SUPPORT_COUNTS.get(i, 1)
        row = rows[i - 1]
        purpose, capability = row[1], row[2]
        domain = row[0]
        title = f"{purpose}."
        abstract = f"{capability}. {domain}."
        assert f"{title} {abstract}" == desc[str(i)]
        for _ in range(count):
            records.append({
                "title": title,
                "abstract": abstract,
                "venue": rng.choices(VENUES, weights=[30, 14, 12, 11, 9, 9, 8, 7])[0],
                "language": "en",
            })
    assert len(records) == 850

    for _ in range(1150):
        stem = rng.choice(BACKGROUND_VOCAB)
        words = stem.split()
        title = " ".join(words[: rng.randint(4, len(words))]).capitalize() + "."
        extra = " ".join(rng.choice(BACKGROUND_VOCAB) for _ in range(2))
        abstract = (f"We study {stem}. Our analysis of {extra} settings shows "
                    f"consistent effects across {rng.randint(3, 40)} configurations.")
        records.append({"title": title, "abstract": abstract,
                        "venue": rng.choice(VENUES), "language": "en"})

    # Records the ingester must drop, mixed in to exercise filtering.
    dropped = []
    for i in range(30):
        dropped.append({"title": f"Untitled manuscript draft {i}", "abstract": "",
                        "venue": "arXiv.org", "language": "en"})
    for i, lang in enumerate(["de", "fr", "zh", "es", "it"] * 3):
        dropped.append({"title": f"Regionale Studie {i}",
                        "abstract": "Eine Untersuchung ohne englische Fassung.",
                        "venue": "PLoS ONE", "language": lang})
    for i in range(5):
        dropped.append({"title": f"Legacy scan {i}",
                        "abstract": "Metadata recovered without a language tag."})

    everything = records + dropped
    rng.shuffle(everything)
    lines = []
    for n, rec in enumerate(everything, start=1):
        rec = {"paper_id": f"P{n:04d}"} | rec
        lines.append(json.dumps(rec, ensure_ascii=False))
    (FIXTURES / "corpus.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert len(everything) == 2050


# gt_id -> (matched use numbers, rationale)
COVERAGE_DECISIONS = {
    "1": ([1], "entry control for secured premises"),
    "2": ([45], "device and resource unlocking covers technology access"),
    "3": ([44], "watchlist alerting flags unauthorized persons"),
    "4": ([91], "visitor screening and registration"),
    "5": ([], "no generated use surfaces live visitor intelligence for buildings"),
    "6": ([31], "demographic detection gating restricted spaces or content"),
    "7": ([106], "footfall pattern analysis for occupancy"),
    "8": ([129], "doorbell-style courier and visitor recognition"),
    "9": ([127], "alerting on unrecognized faces at home"),
    "10": ([45], "device and application unlocking"),
    "11": ([105], "driver identity confirmation before operating a vehicle"),
    "12": ([44], "alerting when a flagged person approaches property"),
    "13": ([26], "workplace attendance and timekeeping"),
    "13b": ([22], "student attendance tracking"),
    "14": ([23], "proctoring checks rule compliance during exams"),
    "15": ([23, 24], "exam monitoring and engagement-based evaluation"),
    "16": ([2, 31], "age and demographic attribute estimation"),
    "17": ([116], "cross-agency profiling against shared lists"),
    "18": ([31], "responses customized from detected demographics"),
    "19": ([46], "reaction-targeted advertising"),
    "20": ([52], "recognizing customers to tailor offerings"),
    "21": ([48], "measuring consumer reactions to products"),
    "22": ([42], "aggregate mood measurement of audiences"),
    "23": ([128], "preference personalization on recognition"),
    "24": ([64, 85], "suspect identification in live and recorded footage"),
    "25": ([65], "custody photo capture and matching"),
    "26": ([66], "face extraction from crime scene footage"),
    "27": ([108], "camera-enforced restricted traffic zones"),
    "28": ([28], "face-linked records feeding penalty decisions"),
    "29": ([37], "banned-list and member-list gating at venues"),
    "30": ([44, 68], "watchlist comparison at perimeters and borders"),
    "31": ([97], "matching found children against reports"),
    "32": ([97], "missing-person matching after incidents"),
    "33": ([66], "identifying officers present in incident footage"),
    "34": ([35], "automatic tagging of people in photos"),
    "35": ([5], "person-grouped family albums"),
    "36": ([36], "detecting reuse of a person's face online"),
    "37": ([36], "flagging accounts misusing someone's likeness"),
    "38": ([124], "grouping photos by the members appearing"),
    "39": ([39], "retrieving all photos of one participant"),
    "40": ([40], "playful face-based interaction with artworks"),
    "41": ([36], "impersonation account detection"),
    "42": ([9], "sharing albums with recognized friends"),
    "43": ([7], "dating profile photo verification"),
    "44": ([19], "face-verified payments and banking logins"),
    "45": ([21], "matching customers against fraud watchlists at branches"),
    "46": ([96], "paying at service points by face"),
    "47": ([10], "patient identification at admission and rounds"),
    "48": ([94], "verifying certified staff in controlled zones"),
    "49": ([11], "tracking registered patients inside facilities"),
    "50": ([10], "identity checks during medication rounds"),
    "51": ([12], "facial markers supporting diagnostics"),
    "52": ([30], "identifying distressed callers for emergency response"),
    "53": ([13], "camera-based mood assessment"),
    "54": ([128], "automatic environment adjustment for recognized residents"),
    "55": ([76], "announcing recognized acquaintances to blind users"),
    "56": ([76], "camera guidance for visually impaired users"),
    "57": ([55], "robot operation gated on recognized operators"),
    "58": ([57], "home robots recognizing household members"),
    "59": ([70], "voter identity verification"),
    "60": ([24], "engagement-adaptive tutoring"),
    "61": ([18], "driving avatars and media from captured faces"),
    "62": ([73], "indexing footage by the people appearing"),
    "63": ([18], "overlaying appearance changes on recognized faces"),
    "64": ([137], "expression-triggered effects in calls"),
    "65": ([67], "automated gates at airports"),
    "66": ([67], "passport-matched border crossing"),
    "67": ([53], "matching faces against identity documents"),
    "68": ([37], "entry screening at stadiums and stations"),
    "69": ([134], "driver fatigue detection through facial analysis"),
    "70": ([13], "estimating emotional state from faces"),
    "71": ([25], "facial-cue scoring in recruitment interviews"),
    "72": ([], "no generated use overlays social identities through smart glasses"),
    "73": ([43], "identification of individuals in surveillance footage"),
    "74": ([], "no generated use brokers introductions between strangers"),
}


def write_coverage():
    payload = [
        {"gt_id": gt_id, "matched_use_ids": [str(u) for u in uses], "rationale": why}
        for gt_id, (uses, why) in COVERAGE_DECISIONS.items()
    ]
    (FIXTURES / "coverage_matches.json").write_text(stable_json(payload), encoding="utf-8")


# Compliance disagreement design: gold differs from the generated tier on 7
# realistic uses; every other realistic use resolves to the generated tier.
GOLD_OVERRIDES = {
    85: "prohibited", 110: "prohibited", 115: "prohibited",
    105: "limited_or_low_risk", 122: "limited_or_low_risk",
    19: "high_risk", 56: "high_risk",
}
CORRECTION_NOTES = {
    19: "High chance for fraud; the system could even see the PIN of the bank card.",
    56: "In case of misuse or malfunctioning the AI could lead to serious harm for "
        "individuals and put human lives at risk.",
    85: "Identification of suspects from footage enables retroactive mass surveillance "
        "and should be treated as prohibited.",
}

TIER_VALUE = {"P": "prohibited", "H": "high_risk", "L": "limited_or_low_risk"}
OTHER_TIERS = {
    "prohibited": ["high_risk", "limited_or_low_risk"],
    "high_risk": ["limited_or_low_risk", "prohibited"],
    "limited_or_low_risk": ["high_risk", "prohibited"],
}

LIKERT_WEIGHTS = {
    ("developer", "familiarity"): [30, 20, 15, 12, 10, 8, 5],
    ("developer", "familiarity", "overlooked"): [60, 15, 10, 6, 4, 3, 2],
    ("compliance_expert", "familiarity"): [28, 20, 16, 12, 10, 8, 6],
    ("compliance_expert", "familiarity", "overlooked"): [75, 10, 5, 4, 3, 2, 1],
    ("developer", "adoption"): [5, 8, 12, 15, 27, 8, 25],
    ("developer", "adoption", "overlooked"): [8, 10, 15, 20, 25, 10, 12],
    ("compliance_expert", "adoption"): [3, 5, 8, 12, 15, 20, 37],
    ("developer", "transformation"): [6, 10, 14, 20, 18, 16, 16],
    ("compliance_expert", "transformation"): [4, 6, 10, 15, 18, 21, 26],
    ("developer", "risk_society"): [15, 25, 22, 15, 10, 8, 5],
    ("compliance_expert", "risk_society"): [8, 14, 16, 18, 16, 15, 13],
    ("developer", "risk_environment"): [55, 20, 10, 6, 4, 3, 2],
    ("compliance_expert", "risk_environment"): [35, 25, 15, 10, 7, 5, 3],
}


def likert_value(rng, cohort, item, overlooked):
    key = (cohort, item, "overlooked") if overlooked else (cohort, item)
    weights = LIKERT_WEIGHTS.get(key) or LIKERT_WEIGHTS[(cohort, item)]
    return rng.choices(range(1, 8), weights=weights)[0]


def compliance_votes(rows):
    """Per-use resolved tier votes for the three experts, tuned so that the
    run's Fleiss kappa lands near 0.49 while every majority equals gold."""
    realistic = [i for i in range(1, 139) if rows[i - 1][5] != "un"]
    gold = {}
    for i in realistic:
        gold[i] = GOLD_OVERRIDES.get(i, TIER_VALUE[rows[i - 1][7]])

    def votes_for(split_set):
        votes = {}
        for idx, i in enumerate(realistic):
            g = gold[i]
            llm = TIER_VALUE[rows[i - 1][7]]
            if g != llm:
                votes[i] = [g, g, llm]
            elif i in split_set:
                votes[i] = [g, g, OTHER_TIERS[g][idx % 2]]
            else:
                votes[i] = [g, g, g]
        return votes

    eligible = [i for i in realistic if gold[i] == TIER_VALUE[rows[i - 1][7]]]
    best = None
    for n_split in range(0, len(eligible) + 1):
        votes = votes_for(set(eligible[:n_split]))
        kappa = fleiss_kappa([votes[i] for i in realistic])
        score = abs(kappa - 0.491)
        if best is None or score < best[0]:
            best = (score, n_split, kappa)
    _, n_split, kappa = best
    print(f"fleiss target search: {n_split} split items -> kappa {kappa:.4f}")
    return gold, votes_for(set(eligible[:n_split]))


def build_cards(rows):
    rng = random.Random(20240601)
    gold, votes = compliance_votes(rows)
    cards = []
    raters = [("D01", "developer"), ("D02", "developer"), ("D03", "developer"),
              ("L01", "compliance_expert"), ("L02", "compliance_expert"),
              ("L03", "compliance_expert")]
    for i in range(1, 139):
        row = rows[i - 1]
        llm_real = {"ae": "already_existent", "up": "upcoming", "un": "unlikely"}[row[5]]
        llm_tier = TIER_VALUE[row[7]]
        overlooked = i in OVERLOOKED
        off_voter = (i - 1) % 6
        for r_idx, (rater_id, cohort) in enumerate(raters):
            vote = llm_real
            if r_idx == off_voter:
                vote = {"already_existent": "upcoming",
                        "upcoming": "already_existent",
                        "unlikely": "upcoming"}[llm_real]
            scores = tuple(
                LikertScore(item=item, value=likert_value(rng, cohort, item.value, overlooked))
                for item in LikertItem
            )
            agreement = None
            corrected = None
            note = None
            if cohort == "compliance_expert":
                if row[5] == "un":
                    agreement = AgreementVote.AGREE
                else:
                    rater_tier = votes[i][r_idx - 3]
                    if rater_tier == llm_tier:
                        agreement = AgreementVote.AGREE
                    else:
                        agreement = AgreementVote.DISAGREE
                        corrected = CorrectedTier(rater_tier)
                        if i in CORRECTION_NOTES and r_idx == 3:
                            note = CORRECTION_NOTES[i]
            cards.append(AnnotationCard(
                use_id=str(i),
                rater_id=rater_id,
                cohort=Cohort(cohort),
                realisticness_vote=Realisticness(vote),
                scores=scores,
                classification_agreement=agreement,
                corrected_classification=corrected,
                reasoning_correction=note,
                usefulness_notes=(
                    "Helpful for scanning unfamiliar deployment contexts quickly."
                    if cohort == "compliance_expert" and i % 47 == 1 and r_idx == 4 else None
                ),
            ))
    return cards


MALFORMED_CASES = [
    # (name, parser, payload, expected error code)
    ("uses_not_json", "uses", "The uses are as follows: access control, payments.",
     "malformed_output"),
    ("uses_object_without_list", "uses", '{"result": "done"}', "malformed_output"),
    ("uses_truncated", "uses", None, "malformed_output"),
    ("uses_record_is_string", "uses", '["access control"]', "malformed_output"),
    ("uses_missing_domain", "uses", None, "incomplete_use"),
    ("uses_missing_purpose", "uses", None, "incomplete_use"),
    ("uses_missing_capability", "uses", None, "incomplete_use"),
    ("uses_missing_ai_user", "uses", None, "incomplete_use"),
    ("uses_missing_ai_subject", "uses", None, "incomplete_use"),
    ("uses_missing_realisticness", "uses", None, "incomplete_use"),
    ("uses_missing_justification", "uses", None, "incomplete_use"),
    ("uses_blank_purpose", "uses", None, "incomplete_use"),
    ("uses_whitespace_justification", "uses", None, "incomplete_use"),
    ("uses_numeric_realisticness", "uses", None, "incomplete_use"),
    ("uses_label_speculative", "uses", None, "unknown_label"),
    ("uses_label_maybe", "uses", None, "unknown_label"),
    ("uses_fenced_broken", "uses", "```json\n[{\"domain\": \"Energy\",]\n```",
     "malformed_output"),
    ("risk_medium", "risk", None, "unknown_classification"),
    ("risk_severe", "risk", None, "unknown_classification"),
    ("risk_labeled_unknown", "risk",
     "Description: a system.\nClassification: moderate risk\nReasoning: because.",
     "unknown_classification"),
    ("risk_missing_reasoning", "risk", None, "missing_reasoning"),
    ("risk_empty_reasoning", "risk", None, "missing_reasoning"),
    ("risk_prohibited_uncited", "risk", None, "uncited_high_severity"),
    ("risk_prohibited_null_text", "risk", None, "uncited_high_severity"),
    ("risk_high_risk_no_location", "risk", None, "uncited_high_severity"),
    ("risk_high_risk_bare_annex", "risk", None, "uncited_high_severity"),
    ("risk_labeled_high_risk_uncited", "risk",
     "Description: a border system.\nClassification: high risk\nReasoning: sensitive.",
     "uncited_high_severity"),
    ("risk_no_classification", "risk", '{"description": "x", "reasoning": "y"}',
     "malformed_output"),
    ("risk_missing_description", "risk", None, "malformed_output"),
    ("risk_free_text", "risk", "This one seems fine to me overall.", "malformed_output"),
    ("risk_array_body", "risk", "[1, 2, 3]", "malformed_output"),
    ("risk_truncated_object", "risk", None, "malformed_output"),
]


def _valid_use_record(**overrides):
    record = {
        "domain": "Energy",
        "purpose": "Substation access control",
        "capability": "Verify maintenance staff at gates",
        "ai_user": "Grid operators",
        "ai_subject": "Maintenance staff",
        "realisticness": "already existent",
        "justification": "Deployed at utility sites.",
    }
    record.update(overrides)
    for key, value in list(record.items()):
        if value is None:
            del record[key]
    return record


def _valid_risk_record(**overrides):
    record = {
        "description": "A hypothetical access-control system for substations.",
        "classification": "limited or low risk",
        "relevant_text": None,
        "reasoning": "Limited or Low Risk due to its narrow operational scope.",
    }
    record.update(overrides)
    return record


def write_malformed():
    out = FIXTURES / "malformed"
    out.mkdir(parents=True, exist_ok=True)
    generated = {
        "uses_truncated": json.dumps([_valid_use_record()])[:-25],
        "uses_missing_domain": json.dumps([_valid_use_record(domain=None)]),
        "uses_missing_purpose": json.dumps([_valid_use_record(purpose=None)]),
        "uses_missing_capability": json.dumps([_valid_use_record(capability=None)]),
        "uses_missing_ai_user": json.dumps([_valid_use_record(ai_user=None)]),
        "uses_missing_ai_subject": json.dumps([_valid_use_record(ai_subject=None)]),
        "uses_missing_realisticness": json.dumps([_valid_use_record(realisticness=None)]),
        "uses_missing_justification": json.dumps([_valid_use_record(justification=None)]),
        "uses_blank_purpose": json.dumps([_valid_use_record(purpose="")]),
        "uses_whitespace_justification": json.dumps([_valid_use_record(justification="   ")]),
        "uses_numeric_realisticness": json.dumps([_valid_use_record(realisticness=3)]),
        "uses_label_speculative": json.dumps([_valid_use_record(realisticness="speculative")]),
        "uses_label_maybe": json.dumps([_valid_use_record(realisticness="maybe upcoming")]),
        "risk_medium": json.dumps(_valid_risk_record(classification="medium risk")),
        "risk_severe": json.dumps(_valid_risk_record(classification="severe")),
        "risk_missing_reasoning": json.dumps({
            "description": "A system.", "classification": "limited or low risk"}),
        "risk_empty_reasoning": json.dumps(_valid_risk_record(reasoning="")),
        "risk_prohibited_uncited": json.dumps(_valid_risk_record(
            classification="prohibited", relevant_text="It just should not exist.",
            reasoning="Prohibited because it is harmful.")),
        "risk_prohibited_null_text": json.dumps(_valid_risk_record(
            classification="prohibited", reasoning="Prohibited due to manipulation.")),
        "risk_high_risk_no_location": json.dumps(_valid_risk_record(
            classification="high risk", relevant_text="the relevant law",
            reasoning="High Risk due to employment monitoring.")),
        "risk_high_risk_bare_annex": json.dumps(_valid_risk_record(
            classification="high risk",
            relevant_text="see the annex about high-risk systems",
            reasoning="High Risk due to biometric categorisation.")),
        "risk_missing_description": json.dumps({
            "classification": "limited or low risk", "reasoning": "Fine."}),
        "risk_truncated_object": json.dumps(_valid_risk_record())[:-20],
    }
    manifest = []
    for name, parser, payload, expected in MALFORMED_CASES:
        body = payload if payload is not None else generated[name]
        (out / f"{name}.txt").write_text(body, encoding="utf-8")
        manifest.append({"file": f"{name}.txt", "parser": parser, "error": expected})
    (out / "manifest.json").write_text(stable_json(manifest), encoding="utf-8")


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    rows = load_uses()
    uses = write_transcripts(rows)
    write_exemplars(rows)
    write_corpus(rows, uses)
    write_coverage()
    cards = build_cards(rows)
    (FIXTURES / "annotations.csv").write_text(export_annotations_csv(cards),
                                              encoding="utf-8")
    write_malformed()
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
