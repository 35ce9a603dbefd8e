/** The per-use assessment card: one component, cohort-gated sections.
 *
 * Developers see the simplified variant (realisticness + five 7-point
 * items); compliance experts additionally see the generated classification
 * with its justification and the agree/disagree block with corrections.
 * Drafts autosave locally and are cleared only on API acknowledgment.
 */

import { LitElement, css, html, nothing } from "lit";
import { customElement, property, state } from "lit/decorators.js";

import { ApiClient, DuplicateCardError } from "../api.js";
import { DraftStore } from "../drafts.js";
import { tierStyle } from "../palette.js";
import {
  CORRECTED_TIERS,
  CardInput,
  Cohort,
  LIKERT_ITEMS,
  LIKERT_PROMPTS,
  REALISTICNESS,
  UseRecord,
  emptyCard,
} from "../types.js";
import { toWireBody, validateCard } from "../validation.js";

@customElement("assessment-card")
export class AssessmentCard extends LitElement {
  static styles = css`
    :host {
      display: block;
      font-family: system-ui, sans-serif;
      max-width: 44rem;
    }
    fieldset {
      border: 1px solid #ccc;
      border-radius: 8px;
      margin: 0.75rem 0;
    }
    .scale {
      display: flex;
      gap: 0.4rem;
      align-items: center;
    }
    .scale span.anchor {
      font-size: 0.8rem;
      color: #555;
    }
    .field-error {
      color: #8f1d14;
      font-size: 0.8rem;
      margin: 0.2rem 0 0;
    }
    .submit-error {
      background: #fcebe9;
      padding: 0.5rem 0.75rem;
      border-radius: 6px;
    }
    .ok {
      background: #e9f6ee;
      padding: 0.5rem 0.75rem;
      border-radius: 6px;
    }
  `;

  @property({ attribute: false }) api!: ApiClient;
  @property({ attribute: false }) drafts!: DraftStore;
  @property() runId = "";
  @property() raterId = "";
  @property() cohort: Cohort = "developer";
  @property({ attribute: false }) use!: UseRecord;

  @state() private card: CardInput = emptyCard("", "developer");
  @state() private errors: Record<string, string | undefined> = {};
  @state() private submitError: string | null = null;
  @state() private submitted = false;

  connectedCallback(): void {
    super.connectedCallback();
    const draft = this.drafts.load(this.runId, this.use.use_id, this.raterId);
    this.card = draft ?? emptyCard(this.raterId, this.cohort);
  }

  private patch(patch: Partial<CardInput>): void {
    this.card = { ...this.card, ...patch };
    this.drafts.save(this.runId, this.use.use_id, this.card);
  }

  private setScore(item: string, value: number): void {
    this.patch({ scores: { ...this.card.scores, [item]: value } });
  }

  private async submit(): Promise<void> {
    this.submitError = null;
    const result = validateCard(this.card);
    this.errors = result.errors;
    if (!result.ok) {
      return;
    }
    try {
      await this.api.submitAnnotation(this.runId, this.use.use_id, toWireBody(this.card));
    } catch (cause) {
      if (cause instanceof DuplicateCardError) {
        this.submitError = "You already submitted a card for this use.";
      } else {
        this.submitError = `Submission failed: ${String(cause)}`;
      }
      return;
    }
    // only now is the local draft safe to discard
    this.drafts.clear(this.runId, this.use.use_id, this.raterId);
    this.submitted = true;
    this.dispatchEvent(
      new CustomEvent("card-submitted", {
        detail: { useId: this.use.use_id },
        bubbles: true,
        composed: true,
      }),
    );
  }

  render() {
    if (this.submitted) {
      return html`<div class="ok">Card for use #${this.use.use_id} stored.</div>`;
    }
    return html`
      <h2>Assess use #${this.use.use_id}: ${this.use.summary}</h2>
      ${this.renderRealisticness()} ${LIKERT_ITEMS.map((item) => this.renderScale(item))}
      ${this.cohort === "compliance_expert" ? this.renderClassificationBlock() : nothing}
      <fieldset>
        <legend>Notes (optional)</legend>
        <textarea
          rows="2"
          cols="60"
          .value=${this.card.usefulness_notes ?? ""}
          @input=${(e: Event) =>
            this.patch({ usefulness_notes: (e.target as HTMLTextAreaElement).value })}
        ></textarea>
      </fieldset>
      ${this.submitError ? html`<div class="submit-error">${this.submitError}</div>` : nothing}
      <button @click=${() => void this.submit()}>Submit card</button>
    `;
  }

  private renderRealisticness() {
    return html`
      <fieldset>
        <legend>How realistic is this use?</legend>
        ${REALISTICNESS.map(
          (label) => html`
            <label>
              <input
                type="radio"
                name="realisticness"
                .checked=${this.card.realisticness_vote === label}
                @change=${() => this.patch({ realisticness_vote: label })}
              />
              ${label.replace("_", " ")}
            </label>
          `,
        )}
        ${this.errors.realisticness_vote
          ? html`<p class="field-error">${this.errors.realisticness_vote}</p>`
          : nothing}
      </fieldset>
    `;
  }

  private renderScale(item: (typeof LIKERT_ITEMS)[number]) {
    const prompt = LIKERT_PROMPTS[item];
    return html`
      <fieldset>
        <legend>${prompt.question}</legend>
        <div class="scale">
          <span class="anchor">${prompt.low}</span>
          ${[1, 2, 3, 4, 5, 6, 7].map(
            (value) => html`
              <label>
                <input
                  type="radio"
                  name=${item}
                  .checked=${this.card.scores[item] === value}
                  @change=${() => this.setScore(item, value)}
                />${value}
              </label>
            `,
          )}
          <span class="anchor">${prompt.high}</span>
        </div>
        ${this.errors[item] ? html`<p class="field-error">${this.errors[item]}</p>` : nothing}
      </fieldset>
    `;
  }

  private renderClassificationBlock() {
    const style = tierStyle(this.use.risk);
    return html`
      <fieldset>
        <legend>Generated risk classification</legend>
        <p>
          <strong style="color:${style.color}">${style.glyph} ${style.label}</strong>
          ${this.use.risk_reasoning ? html`<br />${this.use.risk_reasoning}` : nothing}
        </p>
        <label>
          <input
            type="radio"
            name="agreement"
            .checked=${this.card.classification_agreement === "agree"}
            @change=${() =>
              this.patch({ classification_agreement: "agree", corrected_classification: null })}
          />
          Agree
        </label>
        <label>
          <input
            type="radio"
            name="agreement"
            .checked=${this.card.classification_agreement === "disagree"}
            @change=${() => this.patch({ classification_agreement: "disagree" })}
          />
          Disagree
        </label>
        ${this.errors.classification_agreement
          ? html`<p class="field-error">${this.errors.classification_agreement}</p>`
          : nothing}
        ${this.card.classification_agreement === "disagree"
          ? html`
              <p>
                Correct classification:
                <select
                  @change=${(e: Event) =>
                    this.patch({
                      corrected_classification:
                        ((e.target as HTMLSelectElement).value ||
                          null) as CardInput["corrected_classification"],
                    })}
                >
                  <option value="">choose…</option>
                  ${CORRECTED_TIERS.map(
                    (tier) => html`
                      <option value=${tier} ?selected=${this.card.corrected_classification === tier}>
                        ${tier === "insufficient_information"
                          ? "insufficient information to assess the use"
                          : tierStyle(tier).label}
                      </option>
                    `,
                  )}
                </select>
              </p>
              <p>
                Your reasoning:
                <textarea
                  rows="2"
                  cols="60"
                  .value=${this.card.reasoning_correction ?? ""}
                  @input=${(e: Event) =>
                    this.patch({ reasoning_correction: (e.target as HTMLTextAreaElement).value })}
                ></textarea>
              </p>
              ${this.errors.corrected_classification
                ? html`<p class="field-error">${this.errors.corrected_classification}</p>`
                : nothing}
            `
          : nothing}
      </fieldset>
    `;
  }
}
