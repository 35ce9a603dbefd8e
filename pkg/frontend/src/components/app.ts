/** Root workbench shell: launcher, explorer, detail pane, assessment flow. */

import { LitElement, css, html, nothing } from "lit";
import { customElement, state } from "lit/decorators.js";

import { ApiClient } from "../api.js";
import { browserDrafts } from "../drafts.js";
import {
  SessionContext,
  markAnnotated,
  newSession,
  nextUnannotated,
  progress,
} from "../state.js";
import { Cohort, UseRecord } from "../types.js";
import "./assessment-card.js";
import "./explorer.js";
import "./launcher.js";
import "./use-detail.js";

@customElement("usescope-app")
export class UsescopeApp extends LitElement {
  static styles = css`
    :host {
      display: block;
      font-family: system-ui, sans-serif;
      margin: 1rem auto;
      max-width: 60rem;
      padding: 0 1rem;
    }
    header {
      display: flex;
      gap: 1rem;
      align-items: baseline;
      border-bottom: 1px solid #ddd;
      padding-bottom: 0.5rem;
    }
    .session {
      margin-left: auto;
      font-size: 0.85rem;
      color: #444;
    }
  `;

  private api = new ApiClient("");
  private drafts = browserDrafts();

  @state() private runId: string | null = null;
  @state() private selected: UseRecord | null = null;
  @state() private session: SessionContext | null = null;
  @state() private assessing = false;

  connectedCallback(): void {
    super.connectedCallback();
    void this.pickLatestRun();
  }

  private async pickLatestRun(): Promise<void> {
    try {
      const runs = await this.api.listRuns();
      const ready = runs.runs.filter((r) => r.state === "ready");
      if (ready.length) {
        this.runId = ready[ready.length - 1].run_id;
      }
    } catch {
      // no backend yet: the launcher view still renders
    }
  }

  private async startSession(cohort: Cohort): Promise<void> {
    if (!this.runId) return;
    const raterId = `${cohort === "developer" ? "D" : "L"}${Date.now() % 1000}`;
    const overlooked = await this.api.listUses(this.runId, { overlooked: true });
    this.session = newSession(
      raterId,
      cohort,
      overlooked.uses.map((u) => u.use_id),
    );
  }

  render() {
    return html`
      <header>
        <h1>usescope</h1>
        ${this.runId ? html`<span>run ${this.runId}</span>` : nothing}
        ${this.session
          ? html`<span class="session">
              ${this.session.raterId} (${this.session.cohort}):
              ${progress(this.session).done}/${progress(this.session).total} assessed
            </span>`
          : nothing}
      </header>
      ${!this.runId
        ? html`<generation-launcher
            .api=${this.api}
            @run-ready=${(e: CustomEvent) => {
              this.runId = e.detail.runId;
            }}
          ></generation-launcher>`
        : this.renderRun()}
    `;
  }

  private renderRun() {
    if (this.assessing && this.session && this.selected) {
      return html`
        <assessment-card
          .api=${this.api}
          .drafts=${this.drafts}
          .use=${this.selected}
          runId=${this.runId!}
          raterId=${this.session.raterId}
          cohort=${this.session.cohort}
          @card-submitted=${(e: CustomEvent) => this.onSubmitted(e.detail.useId)}
        ></assessment-card>
        <p><button @click=${() => (this.assessing = false)}>Back to list</button></p>
      `;
    }
    return html`
      ${this.session
        ? nothing
        : html`<p>
            Start an assessment session:
            <button @click=${() => void this.startSession("developer")}>as developer</button>
            <button @click=${() => void this.startSession("compliance_expert")}>
              as compliance expert
            </button>
          </p>`}
      ${this.selected
        ? html`
            <use-detail .use=${this.selected}></use-detail>
            <p>
              ${this.session && !this.session.annotated.has(this.selected.use_id)
                ? html`<button @click=${() => (this.assessing = true)}>Assess this use</button>`
                : nothing}
              <button @click=${() => (this.selected = null)}>Close</button>
            </p>
          `
        : nothing}
      <use-explorer
        .api=${this.api}
        runId=${this.runId!}
        @use-selected=${(e: CustomEvent) => {
          this.selected = e.detail as UseRecord;
        }}
      ></use-explorer>
    `;
  }

  private async onSubmitted(useId: string): Promise<void> {
    if (!this.session || !this.runId) return;
    this.session = markAnnotated(this.session, useId);
    const next = nextUnannotated(this.session);
    if (next) {
      this.selected = await this.api.getUse(this.runId, next);
    } else {
      this.assessing = false;
      this.selected = null;
    }
  }
}
