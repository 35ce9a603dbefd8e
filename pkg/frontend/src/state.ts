/** Session context, filter state, and per-use progress for a rater. */

import { UseFilters } from "./api.js";
import { Cohort, UseRecord } from "./types.js";

export interface SessionContext {
  raterId: string;
  cohort: Cohort;
  /** The uses this rater is asked to annotate (e.g. the overlooked subset). */
  assignedUseIds: string[];
  annotated: Set<string>;
}

export function newSession(raterId: string, cohort: Cohort, assigned: string[]): SessionContext {
  return { raterId, cohort, assignedUseIds: [...assigned], annotated: new Set() };
}

export function markAnnotated(session: SessionContext, useId: string): SessionContext {
  const annotated = new Set(session.annotated);
  annotated.add(useId);
  return { ...session, annotated };
}

export function progress(session: SessionContext): { done: number; total: number } {
  const done = session.assignedUseIds.filter((u) => session.annotated.has(u)).length;
  return { done, total: session.assignedUseIds.length };
}

export function nextUnannotated(session: SessionContext): string | null {
  return session.assignedUseIds.find((u) => !session.annotated.has(u)) ?? null;
}

/** Explorer filters; `undefined` means "not filtering on this axis". */
export type ExplorerFilters = UseFilters;

export function toggleOverlooked(filters: ExplorerFilters): ExplorerFilters {
  return { ...filters, overlooked: filters.overlooked ? undefined : true };
}

export function withTier(filters: ExplorerFilters, tier: string | undefined): ExplorerFilters {
  return { ...filters, risk: tier || undefined };
}

export function withDomain(filters: ExplorerFilters, domain: string | undefined): ExplorerFilters {
  return { ...filters, domain: domain || undefined };
}

export function withRealisticness(
  filters: ExplorerFilters,
  label: string | undefined,
): ExplorerFilters {
  return { ...filters, realisticness: label || undefined };
}

/** Group a flat use list by domain, preserving API order within groups. */
export function groupByDomain(uses: UseRecord[]): Map<string, UseRecord[]> {
  const groups = new Map<string, UseRecord[]>();
  for (const use of uses) {
    const bucket = groups.get(use.domain) ?? [];
    bucket.push(use);
    groups.set(use.domain, bucket);
  }
  return groups;
}
