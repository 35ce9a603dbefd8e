/** Risk tier presentation: color plus non-color redundancy (label + glyph),
 * so tiers stay distinguishable without color vision.
 */

import { RiskTier } from "./types.js";

export interface TierStyle {
  label: string;
  glyph: string;
  color: string;
  background: string;
}

export const TIER_STYLES: Record<RiskTier, TierStyle> = {
  prohibited: {
    label: "Prohibited",
    glyph: "⛔",
    color: "#8f1d14",
    background: "#fcebe9",
  },
  high_risk: {
    label: "High risk",
    glyph: "⚠",
    color: "#7a5800",
    background: "#fdf3d7",
  },
  limited_or_low_risk: {
    label: "Limited or low risk",
    glyph: "✓",
    color: "#14592f",
    background: "#e9f6ee",
  },
};

export const OVERLOOKED_BADGE = {
  label: "Overlooked by research",
  glyph: "◎",
  color: "#3644a1",
  background: "#eceefb",
};

export function tierStyle(tier: RiskTier | null): TierStyle {
  if (tier === null) {
    return { label: "Unassessed", glyph: "•", color: "#555", background: "#f2f2f2" };
  }
  return TIER_STYLES[tier];
}
