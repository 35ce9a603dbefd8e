/** The interactive use list: grouped by domain, tier-colored, filterable. */

import { LitElement, css, html, nothing } from "lit";
import { customElement, property, state } from "lit/decorators.js";

import { ApiClient, UseFilters } from "../api.js";
import { OVERLOOKED_BADGE, tierStyle } from "../palette.js";
import { groupByDomain } from "../state.js";
import { REALISTICNESS, RISK_TIERS, UseRecord } from "../types.js";

@customElement("use-explorer")
export class UseExplorer extends LitElement {
  static styles = css`
    :host {
      display: block;
      font-family: system-ui, sans-serif;
    }
    .filters {
      display: flex;
      gap: 0.75rem;
      align-items: center;
      flex-wrap: wrap;
      padding: 0.5rem 0;
    }
    .domain-group {
      margin: 1rem 0;
    }
    .domain-group h3 {
      margin: 0.25rem 0;
      font-size: 0.95rem;
    }
    .use-row {
      display: flex;
      gap: 0.5rem;
      align-items: baseline;
      padding: 0.3rem 0.5rem;
      border-radius: 6px;
      cursor: pointer;
    }
    .use-row:hover {
      outline: 1px solid #bbb;
    }
    .tier-chip,
    .badge {
      font-size: 0.75rem;
      border-radius: 999px;
      padding: 0.05rem 0.5rem;
      white-space: nowrap;
    }
    .error {
      background: #fcebe9;
      padding: 0.75rem;
      border-radius: 6px;
    }
    .empty {
      color: #666;
      padding: 1rem 0;
    }
  `;

  @property({ attribute: false }) api!: ApiClient;
  @property() runId = "";

  @state() private uses: UseRecord[] = [];
  @state() private total = 0;
  @state() private filters: UseFilters = {};
  @state() private error: string | null = null;
  @state() private loading = false;

  connectedCallback(): void {
    super.connectedCallback();
    void this.refresh();
  }

  async refresh(): Promise<void> {
    this.loading = true;
    this.error = null;
    try {
      const list = await this.api.listUses(this.runId, this.filters);
      this.uses = list.uses;
      this.total = list.total;
    } catch (cause) {
      this.error = `Could not load uses: ${String(cause)}`;
    } finally {
      this.loading = false;
    }
  }

  private setFilter(patch: UseFilters): void {
    this.filters = { ...this.filters, ...patch };
    void this.refresh();
  }

  private openUse(use: UseRecord): void {
    this.dispatchEvent(
      new CustomEvent("use-selected", { detail: use, bubbles: true, composed: true }),
    );
  }

  render() {
    if (this.error) {
      return html`<div class="error">
        ${this.error}
        <button @click=${() => void this.refresh()}>Retry</button>
      </div>`;
    }
    const groups = groupByDomain(this.uses);
    return html`
      <div class="filters">
        <label>
          Tier
          <select
            @change=${(e: Event) =>
              this.setFilter({ risk: (e.target as HTMLSelectElement).value || undefined })}
          >
            <option value="">all</option>
            ${RISK_TIERS.map(
              (tier) => html`<option value=${tier}>${tierStyle(tier).label}</option>`,
            )}
          </select>
        </label>
        <label>
          Realisticness
          <select
            @change=${(e: Event) =>
              this.setFilter({
                realisticness: (e.target as HTMLSelectElement).value || undefined,
              })}
          >
            <option value="">all</option>
            ${REALISTICNESS.map((label) => html`<option value=${label}>${label}</option>`)}
          </select>
        </label>
        <label>
          <input
            type="checkbox"
            .checked=${this.filters.overlooked === true}
            @change=${(e: Event) =>
              this.setFilter({
                overlooked: (e.target as HTMLInputElement).checked ? true : undefined,
              })}
          />
          overlooked only
        </label>
        <span>${this.loading ? "loading…" : `${this.total} uses`}</span>
      </div>
      ${this.total === 0 && !this.loading
        ? html`<div class="empty">No uses match the current filters.</div>`
        : nothing}
      ${[...groups.entries()].map(
        ([domain, uses]) => html`
          <div class="domain-group">
            <h3>${domain}</h3>
            ${uses.map((use) => this.renderRow(use))}
          </div>
        `,
      )}
    `;
  }

  private renderRow(use: UseRecord) {
    const style = tierStyle(use.risk);
    return html`
      <div class="use-row" @click=${() => this.openUse(use)}>
        <span
          class="tier-chip"
          style="background:${style.background};color:${style.color};border:1px solid ${style.color}"
          >${style.glyph} ${style.label}</span
        >
        <span>#${use.use_id} ${use.summary}</span>
        ${use.overlooked
          ? html`<span
              class="badge"
              style="background:${OVERLOOKED_BADGE.background};color:${OVERLOOKED_BADGE.color}"
              >${OVERLOOKED_BADGE.glyph} ${OVERLOOKED_BADGE.label}</span
            >`
          : nothing}
      </div>
    `;
  }
}
