/** Cohort-gated validation of assessment cards, mirrored from the API rules.
 *
 * Submission is blocked until every required item for the session's cohort
 * is present, so an incomplete card never reaches the server.
 */

import {
  CardInput,
  Cohort,
  LIKERT_ITEMS,
  LikertItem,
} from "./types.js";

export type FieldErrors = Partial<Record<string, string>>;

export interface ValidationResult {
  ok: boolean;
  errors: FieldErrors;
}

export function validateCard(card: CardInput): ValidationResult {
  const errors: FieldErrors = {};

  if (!card.rater_id.trim()) {
    errors.rater_id = "rater id is required";
  }
  if (!card.realisticness_vote) {
    errors.realisticness_vote = "select one of the three realisticness labels";
  }
  for (const item of LIKERT_ITEMS) {
    const value = card.scores[item];
    if (value === undefined || value === null) {
      errors[item] = "select a value from 1 to 7";
    } else if (!Number.isInteger(value) || value < 1 || value > 7) {
      errors[item] = "value must be an integer between 1 and 7";
    }
  }

  if (card.cohort === "compliance_expert") {
    if (!card.classification_agreement) {
      errors.classification_agreement = "agree or disagree with the classification";
    } else if (card.classification_agreement === "disagree" && !card.corrected_classification) {
      errors.corrected_classification =
        "pick the corrected tier (or 'insufficient information to assess the use')";
    }
    if (card.classification_agreement === "agree" && card.corrected_classification) {
      errors.corrected_classification = "a correction is only allowed after disagreeing";
    }
  } else {
    if (card.classification_agreement !== null) {
      errors.classification_agreement = "developer cards carry no classification block";
    }
    if (card.corrected_classification !== null) {
      errors.corrected_classification = "developer cards carry no correction";
    }
  }

  return { ok: Object.keys(errors).length === 0, errors };
}

/** The wire body for a POST; only call on a card that validated. */
export function toWireBody(card: CardInput): Record<string, unknown> {
  const scores: Record<string, number> = {};
  for (const item of LIKERT_ITEMS as readonly LikertItem[]) {
    scores[item] = card.scores[item]!;
  }
  return {
    rater_id: card.rater_id,
    cohort: card.cohort,
    realisticness_vote: card.realisticness_vote,
    scores,
    classification_agreement: card.classification_agreement,
    corrected_classification: card.corrected_classification,
    reasoning_correction: card.reasoning_correction || null,
    usefulness_notes: card.usefulness_notes || null,
  };
}

export function requiredFieldsFor(cohort: Cohort): string[] {
  const base = ["realisticness_vote", ...LIKERT_ITEMS];
  return cohort === "compliance_expert" ? [...base, "classification_agreement"] : base;
}
