/** Local card drafts keyed by (run, use, rater), so an interrupted session
 * resumes where it stopped. The backing store is injectable; the browser
 * uses localStorage, tests use a Map.
 */

import { CardInput } from "./types.js";

export interface KeyValueStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export class MemoryStore implements KeyValueStore {
  private data = new Map<string, string>();

  getItem(key: string): string | null {
    return this.data.has(key) ? this.data.get(key)! : null;
  }

  setItem(key: string, value: string): void {
    this.data.set(key, value);
  }

  removeItem(key: string): void {
    this.data.delete(key);
  }
}

function draftKey(runId: string, useId: string, raterId: string): string {
  return `usescope-draft:${runId}:${useId}:${raterId}`;
}

export class DraftStore {
  constructor(private readonly backend: KeyValueStore) {}

  save(runId: string, useId: string, card: CardInput): void {
    this.backend.setItem(draftKey(runId, useId, card.rater_id), JSON.stringify(card));
  }

  load(runId: string, useId: string, raterId: string): CardInput | null {
    const raw = this.backend.getItem(draftKey(runId, useId, raterId));
    if (!raw) return null;
    try {
      return JSON.parse(raw) as CardInput;
    } catch {
      return null;
    }
  }

  /** Drafts are cleared only after the API acknowledges the submission. */
  clear(runId: string, useId: string, raterId: string): void {
    this.backend.removeItem(draftKey(runId, useId, raterId));
  }
}

export function browserDrafts(): DraftStore {
  return new DraftStore(globalThis.localStorage as unknown as KeyValueStore);
}
