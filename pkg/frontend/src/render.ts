/** Pure HTML-string renderers. No DOM dependency, so vitest covers them
 * directly; the browser bootstrap just assigns innerHTML. */

import type { Hit, IndexInfo, SearchResponse } from "./api.js";
import type { AppState } from "./state.js";

const ESCAPES: Record<string, string> = {
  "&": "&amp;",
  "<": "&lt;",
  ">": "&gt;",
  '"': "&quot;",
  "'": "&#39;",
};

export function escapeHtml(text: string): string {
  return text.replace(/[&<>"']/g, (c) => ESCAPES[c]);
}

function escapeRegExp(text: string): string {
  return text.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

/** Escape `text` and wrap case-insensitive whole-word occurrences of each
 * matched term in <mark>. Stripping the <mark> tags from the output and
 * unescaping yields exactly the input text. */
export function highlight(text: string, terms: string[]): string {
  const cleaned = terms.filter((t) => t.length > 0);
  if (cleaned.length === 0) return escapeHtml(text);
  const pattern = new RegExp(
    `\\b(${cleaned.map(escapeRegExp).join("|")})\\b`,
    "gi",
  );
  return text
    .split(pattern)
    .map((part, i) =>
      i % 2 === 1
        ? `<mark>${escapeHtml(part)}</mark>`
        : escapeHtml(part),
    )
    .join("");
}

/** meta.urls holds a JSON array of image URLs (caption indices); render it as
 * a link list. Anything unparseable degrades to plain escaped text. */
export function renderMeta(meta: Record<string, string>): string {
  const rows: string[] = [];
  for (const [key, value] of Object.entries(meta)) {
    if (key === "urls") {
      let urls: unknown;
      try {
        urls = JSON.parse(value);
      } catch {
        urls = null;
      }
      if (Array.isArray(urls) && urls.every((u) => typeof u === "string")) {
        const links = urls
          .map(
            (u) =>
              `<a href="${escapeHtml(u)}" rel="noopener noreferrer">${escapeHtml(u)}</a>`,
          )
          .join(" ");
        rows.push(`<div class="meta"><b>urls</b> ${links}</div>`);
        continue;
      }
    }
    rows.push(
      `<div class="meta"><b>${escapeHtml(key)}</b> ${escapeHtml(value)}</div>`,
    );
  }
  return rows.join("");
}

export function renderHit(hit: Hit): string {
  return [
    `<li class="hit">`,
    `<span class="hit-id">${escapeHtml(hit.id)}</span>`,
    `<span class="hit-score">${hit.score.toFixed(4)}</span>`,
    `<p class="hit-text">${highlight(hit.text, hit.matched_terms)}</p>`,
    renderMeta(hit.meta),
    `</li>`,
  ].join("");
}

/** One collapsible panel per index, in server order. */
export function renderResults(response: SearchResponse): string {
  const panels = Object.entries(response.results).map(([name, hits]) => {
    const took = response.took_ms[name];
    const body =
      hits.length === 0
        ? `<p class="empty">no matches</p>`
        : `<ol class="hits">${hits.map(renderHit).join("")}</ol>`;
    return [
      `<details class="index-panel" open>`,
      `<summary>${escapeHtml(name)} — ${hits.length} hit${hits.length === 1 ? "" : "s"}`,
      took === undefined ? "" : ` <span class="took">(${took} ms)</span>`,
      `</summary>`,
      body,
      `</details>`,
    ].join("");
  });
  return panels.join("");
}

export function renderIndexOptions(
  indices: IndexInfo[],
  selected: string | null,
): string {
  const all = `<option value=""${selected === null ? " selected" : ""}>all indices</option>`;
  const rest = indices.map(
    (i) =>
      `<option value="${escapeHtml(i.name)}"${i.name === selected ? " selected" : ""}>` +
      `${escapeHtml(i.name)} (${i.snippet_count})</option>`,
  );
  return [all, ...rest].join("");
}

export function renderError(message: string): string {
  return `<div class="error" role="alert">${escapeHtml(message)}</div>`;
}

/** The whole results region: banner (if any) above whatever results are
 * still valid — an error never blanks the previous answer. */
export function renderApp(state: AppState): string {
  const parts: string[] = [];
  if (state.error !== null) parts.push(renderError(state.error));
  if (state.loading) parts.push(`<div class="loading">searching…</div>`);
  if (state.response !== null) parts.push(renderResults(state.response));
  return parts.join("");
}
