// Exploration views: the all-languages panorama of one concept, the
// hierarchy neighborhood with gap badges, the overlap heatmap, and the
// concept-by-language matrix. Every displayed number or cell comes straight
// from an API response; nothing is recomputed client-side.

import type { ApiClient } from "./api.js";
import { badge, escapeHtml, lemmaSpan } from "./render.js";
import type { OverlapDoc, PanoramaDoc, StatusDoc } from "./types.js";

export function statusCell(status: StatusDoc): string {
  if (status.kind === "lexicalized" && status.sense && status.sense.lemmas.length) {
    return status.sense.lemmas[0] ?? "?";
  }
  if (status.kind === "gap") return "GAP";
  return "?";
}

export function renderPanorama(view: PanoramaDoc): string {
  const rows = Object.entries(view.statuses)
    .map(([code, status]) => {
      const cell = statusCell(status);
      const rendered =
        cell === "GAP"
          ? badge("GAP", "gap")
          : cell === "?"
            ? badge("?", "unknown")
            : lemmaSpan(cell);
      return `<tr><td>${escapeHtml(code)}</td><td>${rendered}</td></tr>`;
    })
    .join("");
  return (
    `<section class="panorama"><h2>${escapeHtml(view.concept)}</h2>` +
    `<p>${escapeHtml(view.gloss_en)}</p>` +
    `<table><tbody>${rows}</tbody></table></section>`
  );
}

export interface HierarchyNeighbor {
  concept: string;
  gapCount: number;
  lexiconCount: number;
}

export function neighborFromPanorama(view: PanoramaDoc): HierarchyNeighbor {
  const statuses = Object.values(view.statuses);
  return {
    concept: view.concept,
    gapCount: statuses.filter((s) => s.kind === "gap").length,
    lexiconCount: statuses.length,
  };
}

export function renderHierarchy(
  center: PanoramaDoc,
  parents: HierarchyNeighbor[],
  children: HierarchyNeighbor[],
): string {
  const node = (n: HierarchyNeighbor) =>
    `<li>${escapeHtml(n.concept)} ` +
    badge(`${n.gapCount}/${n.lexiconCount} gaps`, "gap-count") +
    "</li>";
  return (
    `<section class="hierarchy"><h3>${escapeHtml(center.concept)}</h3>` +
    `<div class="parents"><h4>broader</h4><ul>${parents.map(node).join("")}</ul></div>` +
    `<div class="children"><h4>narrower</h4><ul>${children.map(node).join("")}</ul></div>` +
    `</section>`
  );
}

/** Heatmap over the API's pairwise matrix; cells show the API's own
 * one-decimal percent strings. */
export function renderHeatmap(overlap: OverlapDoc): string {
  const header = overlap.lexicons
    .map((code) => `<th>${escapeHtml(code)}</th>`)
    .join("");
  const body = overlap.lexicons
    .map((code, i) => {
      const cells = overlap.lexicons
        .map((_, j) => {
          const text = overlap.matrix_percent[i]?.[j] ?? "";
          const ratio = overlap.matrix[i]?.[j] ?? 0;
          const shade = Math.round(ratio * 100);
          return `<td class="heat" data-shade="${shade}">${escapeHtml(text)}</td>`;
        })
        .join("");
      return `<tr><th>${escapeHtml(code)}</th>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="heatmap"><thead><tr><th></th>${header}</tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}

export interface MatrixView {
  lexicons: string[];
  rows: { concept: string; cells: string[] }[];
}

/** Concept-by-language matrix of lemma / GAP / ? cells, built from the
 * panorama endpoint of each concept. */
export async function buildMatrixView(
  api: ApiClient,
  concepts: string[],
  lexicons: string[],
): Promise<MatrixView> {
  const rows = [];
  for (const concept of concepts) {
    const view = await api.panorama(concept);
    rows.push({
      concept,
      cells: lexicons.map((code) => {
        const status = view.statuses[code];
        return status ? statusCell(status) : "?";
      }),
    });
  }
  return { lexicons, rows };
}

export function renderMatrixView(view: MatrixView): string {
  const header = view.lexicons.map((c) => `<th>${escapeHtml(c)}</th>`).join("");
  const body = view.rows
    .map((row) => {
      const cells = row.cells
        .map((cell) =>
          cell === "GAP"
            ? `<td class="gap">${badge("GAP", "gap")}</td>`
            : cell === "?"
              ? `<td class="unknown">?</td>`
              : `<td>${lemmaSpan(cell)}</td>`,
        )
        .join("");
      return `<tr><th>${escapeHtml(row.concept)}</th>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="gap-matrix"><thead><tr><th>concept</th>${header}</tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}
