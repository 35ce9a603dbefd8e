/** Full record view for one use: concepts, verdicts, Act quote, reasoning. */

import { LitElement, css, html, nothing } from "lit";
import { customElement, property } from "lit/decorators.js";

import { OVERLOOKED_BADGE, tierStyle } from "../palette.js";
import { UseRecord } from "../types.js";

@customElement("use-detail")
export class UseDetail extends LitElement {
  static styles = css`
    :host {
      display: block;
      font-family: system-ui, sans-serif;
    }
    dl {
      display: grid;
      grid-template-columns: max-content 1fr;
      gap: 0.25rem 1rem;
    }
    dt {
      font-weight: 600;
    }
    blockquote {
      margin: 0.5rem 0;
      padding: 0.5rem 0.75rem;
      border-left: 3px solid #999;
      background: #fafafa;
    }
    .tier {
      display: inline-block;
      padding: 0.15rem 0.6rem;
      border-radius: 999px;
      font-size: 0.85rem;
    }
  `;

  @property({ attribute: false }) use!: UseRecord;

  render() {
    const use = this.use;
    const style = tierStyle(use.risk);
    return html`
      <h2>#${use.use_id} ${use.summary}</h2>
      <p>
        <span
          class="tier"
          style="background:${style.background};color:${style.color};border:1px solid ${style.color}"
          >${style.glyph} ${style.label}</span
        >
        ${use.overlooked
          ? html`<span
              class="tier"
              style="background:${OVERLOOKED_BADGE.background};color:${OVERLOOKED_BADGE.color}"
              >${OVERLOOKED_BADGE.glyph} ${OVERLOOKED_BADGE.label}</span
            >`
          : nothing}
      </p>
      <dl>
        <dt>Domain</dt>
        <dd>${use.domain}${use.off_catalog ? " (off-catalog)" : ""}</dd>
        <dt>Purpose</dt>
        <dd>${use.purpose}</dd>
        <dt>Capability</dt>
        <dd>${use.capability}</dd>
        <dt>AI user</dt>
        <dd>${use.ai_user}</dd>
        <dt>AI subject</dt>
        <dd>${use.ai_subject}</dd>
        <dt>Realisticness</dt>
        <dd>${use.realisticness}: ${use.justification}</dd>
      </dl>
      ${use.risk_description
        ? html`<h3>Hypothetical system</h3>
            <p>${use.risk_description}</p>`
        : nothing}
      ${use.relevant_text
        ? html`<h3>Relevant text from the Act</h3>
            <blockquote>${use.relevant_text}</blockquote>`
        : nothing}
      ${use.risk_reasoning
        ? html`<h3>Classification reasoning</h3>
            <p>${use.risk_reasoning}</p>`
        : nothing}
      ${use.supporters !== null
        ? html`<p>${use.supporters} supporting paper(s) in the literature corpus.</p>`
        : nothing}
    `;
  }
}
