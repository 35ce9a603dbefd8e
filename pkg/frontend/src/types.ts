/** Shared payload types and zod schemas for the run-store API. */

import { z } from "zod";

export const RISK_TIERS = ["prohibited", "high_risk", "limited_or_low_risk"] as const;
export type RiskTier = (typeof RISK_TIERS)[number];

export const REALISTICNESS = ["already_existent", "upcoming", "unlikely"] as const;
export type Realisticness = (typeof REALISTICNESS)[number];

export const COHORTS = ["developer", "compliance_expert"] as const;
export type Cohort = (typeof COHORTS)[number];

export const LIKERT_ITEMS = [
  "familiarity",
  "adoption",
  "transformation",
  "risk_society",
  "risk_environment",
] as const;
export type LikertItem = (typeof LIKERT_ITEMS)[number];

/** Card prompts with the exact anchor wording rendered at scale ends. */
export const LIKERT_PROMPTS: Record<LikertItem, { question: string; low: string; high: string }> = {
  familiarity: {
    question: "How frequently do you encounter references to this use in your professional life?",
    low: "rarely",
    high: "always",
  },
  adoption: {
    question: "How likely is it that this use will be widely adopted in the near future?",
    low: "very unlikely",
    high: "very likely",
  },
  transformation: {
    question:
      "How likely is it that this use will fundamentally change the way businesses operate or people live?",
    low: "very unlikely",
    high: "very likely",
  },
  risk_society: {
    question: "How risky do you consider this use for society as a whole?",
    low: "not risky at all",
    high: "unacceptably risky",
  },
  risk_environment: {
    question: "How risky do you consider this use for the environment?",
    low: "not risky at all",
    high: "unacceptably risky",
  },
};

export const CORRECTED_TIERS = [
  "prohibited",
  "high_risk",
  "limited_or_low_risk",
  "insufficient_information",
] as const;
export type CorrectedTier = (typeof CORRECTED_TIERS)[number];

export const UseRecordSchema = z.object({
  use_id: z.string(),
  summary: z.string(),
  domain: z.string(),
  purpose: z.string(),
  capability: z.string(),
  ai_user: z.string(),
  ai_subject: z.string(),
  off_catalog: z.boolean(),
  realisticness: z.enum(REALISTICNESS),
  justification: z.string(),
  risk: z.enum(RISK_TIERS).nullable(),
  risk_reasoning: z.string().nullable(),
  relevant_text: z.string().nullable(),
  risk_description: z.string().nullable(),
  overlooked: z.boolean().nullable(),
  supporters: z.number().nullable(),
});
export type UseRecord = z.infer<typeof UseRecordSchema>;

export const UseListSchema = z.object({
  run_id: z.string(),
  total: z.number(),
  uses: z.array(UseRecordSchema),
});
export type UseList = z.infer<typeof UseListSchema>;

export const RunSummarySchema = z.object({
  run_id: z.string(),
  technology: z.string(),
  state: z.enum(["pending", "generating", "classifying", "filtering", "ready", "failed"]),
  error: z.string().nullable().optional(),
  created_at: z.string(),
  uses: z.number(),
  assessed: z.number(),
  overlooked: z.number(),
  annotations: z.number(),
});
export type RunSummary = z.infer<typeof RunSummarySchema>;

export const RunListSchema = z.object({
  runs: z.array(
    z.object({
      run_id: z.string(),
      technology: z.string(),
      state: z.string(),
      created_at: z.string(),
      uses: z.number(),
    }),
  ),
});
export type RunList = z.infer<typeof RunListSchema>;

export const CatalogSchema = z.object({
  entries: z.array(z.object({ name: z.string(), provenance: z.string() })),
});
export type Catalog = z.infer<typeof CatalogSchema>;

/** The card payload posted to /runs/{id}/uses/{uid}/annotations. */
export interface CardInput {
  rater_id: string;
  cohort: Cohort;
  realisticness_vote: Realisticness | null;
  scores: Partial<Record<LikertItem, number>>;
  classification_agreement: "agree" | "disagree" | null;
  corrected_classification: CorrectedTier | null;
  reasoning_correction: string | null;
  usefulness_notes: string | null;
}

export function emptyCard(raterId: string, cohort: Cohort): CardInput {
  return {
    rater_id: raterId,
    cohort,
    realisticness_vote: null,
    scores: {},
    classification_agreement: null,
    corrected_classification: null,
    reasoning_correction: null,
    usefulness_notes: null,
  };
}
