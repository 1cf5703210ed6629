// Task queue view model: the task list with per-state counts, plus
// state/subdomain filters over one task's items. Counts are taken from the
// API's own per-state item queries, never recomputed locally.

import type { ApiClient } from "./api.js";
import type { ItemDoc, ItemState, TaskDoc } from "./types.js";

export const ALL_STATES: ItemState[] = [
  "pending",
  "answered",
  "in-lexicon-review",
  "needs-revision",
  "lexicon-approved",
  "in-concept-review",
  "integrated",
  "skipped",
  "rejected",
];

export interface TaskQueueRow {
  task: TaskDoc;
  counts: Partial<Record<ItemState, number>>;
}

export interface ItemFilter {
  state?: ItemState;
  subdomain?: string;
}

export class TaskQueueModel {
  rows: TaskQueueRow[] = [];

  constructor(private readonly api: ApiClient) {}

  async load(): Promise<TaskQueueRow[]> {
    const { tasks } = await this.api.tasks();
    this.rows = [];
    for (const task of tasks) {
      const counts: Partial<Record<ItemState, number>> = {};
      for (const state of ALL_STATES) {
        const { items } = await this.api.taskItems(task.id, state);
        if (items.length > 0) counts[state] = items.length;
      }
      this.rows.push({ task, counts });
    }
    return this.rows;
  }

  async items(taskId: string, filter: ItemFilter = {}): Promise<ItemDoc[]> {
    const { items } = await this.api.taskItems(taskId, filter.state);
    if (!filter.subdomain) return items;
    return items.filter((item) => item.subdomain === filter.subdomain);
  }
}

export function renderQueueRow(row: TaskQueueRow): string {
  const counts = ALL_STATES.filter((state) => row.counts[state])
    .map((state) => `${state}: ${row.counts[state]}`)
    .join(", ");
  return `<tr><td>${row.task.id}</td><td>${row.task.lexicon}</td>` +
    `<td>${row.task.subdomains.join(", ")}</td><td>${counts}</td></tr>`;
}
