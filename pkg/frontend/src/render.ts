/** Pure HTML renderers for the editor views.
 *
 * Each function maps view state to a markup string; no DOM access, so the
 * same code runs in the browser and under plain node tests. Gap badges are
 * visually distinct from missing-data badges: a gap is an asserted fact
 * about the language, missing is just incomplete coverage.
 */

import { ChangelogEvent, ConceptDetail, LexStatus } from "./api.js";
import { Dashboard, InlineError } from "./viewmodel.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const BADGE_LABEL: Record<LexStatus, string> = {
  lexicalized: "✓ word",
  gap: "∅ gap",
  missing: "? missing",
};

export function renderBadge(language: string, status: LexStatus): string {
  return `<span class="badge badge-${status}" data-language="${
    escapeHtml(language)}">${escapeHtml(language)} ${
    BADGE_LABEL[status]}</span>`;
}

export function renderConcept(concept: ConceptDetail): string {
  const badges = concept.lexicalizations
    .map((l) => renderBadge(l.language, l.status))
    .join(" ");
  const senses = concept.lexicalizations
    .flatMap((l) => l.senses)
    .map((s) => `<li>${escapeHtml(s.language)}: ${escapeHtml(s.lemma)}</li>`)
    .join("");
  const locals = concept.lexicalizations
    .flatMap((l) => (l.local_concepts ?? []).map((lc) =>
      `<li class="local">${escapeHtml(l.language)} only: ${
        escapeHtml(lc.lemmas.join(", ") || lc.gloss || `#${lc.id}`)}</li>`))
    .join("");
  // children render as lazy links; subtrees are fetched on focus
  const children = concept.children
    .map((c) => `<li><a href="#" data-concept="${c.id}">${
      escapeHtml(c.label ?? `#${c.id}`)}</a></li>`)
    .join("");
  return [
    `<h2>${escapeHtml(concept.label ?? `#${concept.id}`)}</h2>`,
    `<p class="badges">${badges}</p>`,
    `<ul class="senses">${senses}${locals}</ul>`,
    `<ul class="children">${children || "<li class='empty'>no narrower concepts</li>"}</ul>`,
  ].join("\n");
}

export function renderDashboard(
  dashboard: Dashboard | null,
  guidance: string | null,
): string {
  if (dashboard === null) {
    return `<p class="guidance">${escapeHtml(guidance ?? "")}</p>`;
  }
  const bars = Object.entries(dashboard.coverage.per_language)
    .map(([lang, value]) => {
      const percent = (value * 100).toFixed(1);
      return `<div class="bar-row" data-language="${escapeHtml(lang)}">` +
        `<span class="bar-label">${escapeHtml(lang)}</span>` +
        `<div class="bar" style="width:${percent}%"></div>` +
        `<span class="bar-value">${percent}%</span></div>`;
    })
    .join("");
  return [
    `<h3>Coverage (${escapeHtml(dashboard.capability)})</h3>`,
    `<div class="bars">${bars}</div>`,
    `<p class="bias">bias <strong>${dashboard.bias.bias.toFixed(4)}</strong>` +
      ` over ${dashboard.bias.n} languages</p>`,
  ].join("\n");
}

export function renderInlineError(error: InlineError | null): string {
  if (error === null) return "";
  return `<p class="field-error" data-field="${error.field}">${
    escapeHtml(error.code)}: ${escapeHtml(error.message)}</p>`;
}

export function renderFeed(events: ChangelogEvent[]): string {
  // newest first; rejected attempts stay visible (the log is append-only,
  // there is no undo, so the feed is the honest history)
  const rows = [...events].reverse().map((e) => {
    const cls = e.status === "ok" ? "ok" : "rejected";
    const note = e.status === "ok" ? "" : ` (rejected: ${
      escapeHtml(e.error_code ?? "error")})`;
    return `<li class="${cls}">#${e.seq} ${escapeHtml(e.contributor)} ${
      escapeHtml(e.action)}${note}</li>`;
  });
  return `<ol class="feed">${rows.join("")}</ol>`;
}
