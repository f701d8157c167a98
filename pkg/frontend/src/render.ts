// Pure HTML-string rendering so the display logic is testable without a
// browser. Message text is escaped but otherwise shown verbatim.

import type { Report, RuleEntry } from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderReport(report: Report): string {
  if (!report.parse_ok) {
    return `<p class="parse-error">Could not parse the submission: ${escapeHtml(
      report.parse_error ?? "unknown error",
    )}</p>`;
  }
  if (report.mistakes.length === 0) {
    return `<p class="clean">0 mistakes - nicely done.</p>`;
  }
  const rows = report.mistakes
    .map((m) => {
      const line = m.line === null ? "" : String(m.line);
      return (
        `<tr><td class="rule">${escapeHtml(m.rule)}</td>` +
        `<td class="line">${line}</td>` +
        `<td class="message">${escapeHtml(m.message)}</td></tr>`
      );
    })
    .join("");
  const total = report.mistakes.length;
  const label = total === 1 ? "1 mistake" : `${total} mistakes`;
  return (
    `<p class="total">${label}</p>` +
    `<table class="mistakes"><thead><tr><th>rule</th><th>line</th><th>message</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

export function renderRules(entries: RuleEntry[]): string {
  const rows = entries
    .map(
      (r) =>
        `<tr><td class="rule">${escapeHtml(r.code)}</td>` +
        `<td>${escapeHtml(r.title)}</td>` +
        `<td class="template">${escapeHtml(r.message_template)}</td></tr>`,
    )
    .join("");
  return (
    `<table class="rules"><thead><tr><th>code</th><th>rule</th><th>feedback</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

export function renderError(message: string): string {
  return `<div class="banner">${escapeHtml(message)}</div>`;
}
