/** Typed client over the run-store HTTP API.
 *
 * The UI never computes metrics or risk labels itself; every displayed
 * number comes through this client, which validates response shapes.
 */

import {
  Catalog,
  CatalogSchema,
  RunList,
  RunListSchema,
  RunSummary,
  RunSummarySchema,
  UseList,
  UseListSchema,
  UseRecord,
  UseRecordSchema,
} from "./types.js";

export interface UseFilters {
  domain?: string;
  risk?: string;
  overlooked?: boolean;
  realisticness?: string;
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly code: string,
  ) {
    super(message);
  }
}

export class DuplicateCardError extends ApiError {}

export interface LaunchOptions {
  technology: string;
  uses_per_domain?: number;
  percentile?: number;
  mode?: "live" | "replay" | "record";
  run_id?: string;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    } catch (cause) {
      throw new ApiError(`API unreachable: ${String(cause)}`, 0, "unreachable");
    }
    const text = await response.text();
    let body: unknown = null;
    try {
      body = text ? JSON.parse(text) : null;
    } catch {
      body = null;
    }
    if (!response.ok) {
      const payload = (body ?? {}) as { error?: string; detail?: string };
      const code = payload.error ?? `http_${response.status}`;
      const detail = payload.detail ?? text.slice(0, 200);
      if (response.status === 409) {
        throw new DuplicateCardError(detail, response.status, code);
      }
      throw new ApiError(detail, response.status, code);
    }
    return body;
  }

  async listRuns(): Promise<RunList> {
    return RunListSchema.parse(await this.request("/runs"));
  }

  async getRun(runId: string): Promise<RunSummary> {
    return RunSummarySchema.parse(await this.request(`/runs/${runId}`));
  }

  async listUses(runId: string, filters: UseFilters = {}): Promise<UseList> {
    const params = new URLSearchParams();
    if (filters.domain) params.set("domain", filters.domain);
    if (filters.risk) params.set("risk", filters.risk);
    if (filters.overlooked !== undefined) params.set("overlooked", String(filters.overlooked));
    if (filters.realisticness) params.set("realisticness", filters.realisticness);
    const query = params.toString();
    return UseListSchema.parse(
      await this.request(`/runs/${runId}/uses${query ? `?${query}` : ""}`),
    );
  }

  async getUse(runId: string, useId: string): Promise<UseRecord> {
    return UseRecordSchema.parse(await this.request(`/runs/${runId}/uses/${useId}`));
  }

  async submitAnnotation(
    runId: string,
    useId: string,
    body: Record<string, unknown>,
  ): Promise<void> {
    await this.request(`/runs/${runId}/uses/${useId}/annotations`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async getReport(runId: string): Promise<Record<string, unknown>> {
    return (await this.request(`/runs/${runId}/report`)) as Record<string, unknown>;
  }

  async getCatalog(): Promise<Catalog> {
    return CatalogSchema.parse(await this.request("/catalog/domains"));
  }

  async launchRun(options: LaunchOptions): Promise<{ run_id: string; state: string }> {
    return (await this.request("/runs", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(options),
    })) as { run_id: string; state: string };
  }

  /** Poll a run until it reaches a terminal state. */
  async waitForRun(
    runId: string,
    onState?: (summary: RunSummary) => void,
    intervalMs = 500,
    timeoutMs = 120_000,
  ): Promise<RunSummary> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const summary = await this.getRun(runId);
      onState?.(summary);
      if (summary.state === "ready" || summary.state === "failed") {
        return summary;
      }
      if (Date.now() > deadline) {
        throw new ApiError(`run ${runId} still ${summary.state}`, 0, "timeout");
      }
      await new Promise((resolve) => setTimeout(resolve, intervalMs));
    }
  }
}
