// Tiny HTML-string renderers. Views are pure functions from API data to
// markup, so they can be tested without a DOM.

import { dirAttribute } from "./rtl.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** A span that carries dir="rtl" when the content needs it. */
export function lemmaSpan(text: string, className = "lemma"): string {
  return `<span class="${className}"${dirAttribute(text)}>${escapeHtml(text)}</span>`;
}

export function badge(text: string, className: string): string {
  return `<span class="badge ${className}">${escapeHtml(text)}</span>`;
}
