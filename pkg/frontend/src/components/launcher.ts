/** Launch a new exploration run and watch it move through the stages. */

import { LitElement, css, html, nothing } from "lit";
import { customElement, property, state } from "lit/decorators.js";

import { ApiClient } from "../api.js";

const STAGE_ORDER = ["pending", "generating", "classifying", "filtering", "ready"];

@customElement("generation-launcher")
export class GenerationLauncher extends LitElement {
  static styles = css`
    :host {
      display: block;
      font-family: system-ui, sans-serif;
      max-width: 36rem;
    }
    .stages {
      display: flex;
      gap: 0.5rem;
      margin: 0.75rem 0;
    }
    .stage {
      padding: 0.2rem 0.6rem;
      border-radius: 999px;
      background: #f0f0f0;
      font-size: 0.85rem;
    }
    .stage.active {
      background: #eceefb;
      font-weight: 600;
    }
    .stage.done {
      background: #e9f6ee;
    }
    .error {
      background: #fcebe9;
      padding: 0.5rem 0.75rem;
      border-radius: 6px;
    }
  `;

  @property({ attribute: false }) api!: ApiClient;

  @state() private technology = "";
  @state() private usesPerDomain = 3;
  @state() private percentile = 99.9;
  @state() private mode: "live" | "replay" | "record" = "replay";
  @state() private runState: string | null = null;
  @state() private error: string | null = null;
  @state() private launching = false;

  private async launch(): Promise<void> {
    this.error = null;
    if (!this.technology.trim()) {
      this.error = "Name the technology to explore.";
      return;
    }
    this.launching = true;
    try {
      const { run_id } = await this.api.launchRun({
        technology: this.technology.trim(),
        uses_per_domain: this.usesPerDomain,
        percentile: this.percentile,
        mode: this.mode,
      });
      this.runState = "pending";
      const final = await this.api.waitForRun(run_id, (summary) => {
        this.runState = summary.state;
      });
      if (final.state === "failed") {
        this.error = `Run failed during ${final.error ?? "an unknown stage"}. Retry?`;
        return;
      }
      this.dispatchEvent(
        new CustomEvent("run-ready", { detail: { runId: run_id }, bubbles: true, composed: true }),
      );
    } catch (cause) {
      this.error = `Could not reach the API: ${String(cause)}. Retry?`;
    } finally {
      this.launching = false;
    }
  }

  render() {
    return html`
      <h2>Explore a technology</h2>
      <p>
        <label>
          Technology
          <input
            .value=${this.technology}
            @input=${(e: Event) => (this.technology = (e.target as HTMLInputElement).value)}
          />
        </label>
      </p>
      <p>
        <label>
          Uses per domain
          <select
            @change=${(e: Event) =>
              (this.usesPerDomain = Number((e.target as HTMLSelectElement).value))}
          >
            <option value="2" ?selected=${this.usesPerDomain === 2}>2</option>
            <option value="3" ?selected=${this.usesPerDomain === 3}>3</option>
          </select>
        </label>
        <label>
          Similarity percentile
          <input
            type="number"
            step="0.1"
            min="50"
            max="99.9"
            .value=${String(this.percentile)}
            @input=${(e: Event) => (this.percentile = Number((e.target as HTMLInputElement).value))}
          />
        </label>
        <label>
          Mode
          <select
            @change=${(e: Event) =>
              (this.mode = (e.target as HTMLSelectElement).value as typeof this.mode)}
          >
            <option value="replay">replay</option>
            <option value="record">record</option>
            <option value="live">live</option>
          </select>
        </label>
      </p>
      <button ?disabled=${this.launching} @click=${() => void this.launch()}>
        ${this.launching ? "Running…" : "Start exploration"}
      </button>
      ${this.runState
        ? html`<div class="stages">
            ${STAGE_ORDER.map((stage) => {
              const current = STAGE_ORDER.indexOf(this.runState ?? "pending");
              const index = STAGE_ORDER.indexOf(stage);
              const cls = index < current ? "stage done" : index === current ? "stage active" : "stage";
              return html`<span class=${cls}>${stage}</span>`;
            })}
          </div>`
        : nothing}
      ${this.error ? html`<div class="error">${this.error}</div>` : nothing}
    `;
  }
}
