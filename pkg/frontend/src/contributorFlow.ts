// Contributor flow: walk the task's open items (revisions first, then
// fresh ones), show the validator's comments from earlier rounds, submit
// one answer per item, and advance. A 409 from the API means someone else
// moved the item; the flow surfaces a reload prompt instead of guessing.

import { ApiRequestError, type ApiClient } from "./api.js";
import type { DecisionFormModel } from "./decisionForm.js";
import type { AnswerBody } from "./schemas.js";
import type { AnswerDoc, HistoryEntryDoc, ItemDoc, ItemState } from "./types.js";

export interface ValidatorNote {
  actor: string;
  verdict: string;
  comment: string | null;
  correction: AnswerDoc | null;
}

export class ContributorFlow {
  queue: ItemDoc[] = [];
  needsReload = false;
  lastError: string | null = null;

  constructor(
    private readonly api: ApiClient,
    readonly taskId: string,
  ) {}

  async load(): Promise<void> {
    const revisions = await this.api.taskItems(this.taskId, "needs-revision");
    const pending = await this.api.taskItems(this.taskId, "pending");
    this.queue = [...revisions.items, ...pending.items];
    this.needsReload = false;
    this.lastError = null;
  }

  get current(): ItemDoc | null {
    return this.queue[0] ?? null;
  }

  get remaining(): number {
    return this.queue.length;
  }

  /** Validator feedback from earlier review rounds, oldest first. */
  validatorNotes(item: ItemDoc): ValidatorNote[] {
    return item.history
      .filter((entry: HistoryEntryDoc) => entry.transition === "lexicon-review")
      .map((entry) => ({
        actor: entry.actor,
        verdict: String(entry.detail["verdict"] ?? ""),
        comment: entry.comment,
        correction: (entry.detail["correction"] as AnswerDoc | null) ?? null,
      }));
  }

  async submitBody(body: AnswerBody): Promise<ItemState | null> {
    const item = this.current;
    if (!item) throw new Error("no item to answer");
    try {
      const result = await this.api.submitAnswer(this.taskId, item.concept, body);
      this.queue.shift();
      this.lastError = null;
      return result.state;
    } catch (error) {
      if (error instanceof ApiRequestError && error.isConflict) {
        this.needsReload = true;
        this.lastError = "item changed, reload";
        return null;
      }
      throw error;
    }
  }

  async submit(form: DecisionFormModel): Promise<ItemState | null> {
    return this.submitBody(form.toAnswerBody());
  }

  async skip(comment: string): Promise<ItemState | null> {
    return this.submitBody({ type: "skip", comment });
  }

  /** Propose a concept missing from the input list (extra queue entry). */
  async propose(
    placeholder: string,
    lemma: string,
    definition: string,
    subdomain: string,
  ): Promise<ItemState | null> {
    try {
      const result = await this.api.submitAnswer(this.taskId, placeholder, {
        type: "new-concept",
        lemma,
        definition,
        subdomain,
      });
      return result.state;
    } catch (error) {
      if (error instanceof ApiRequestError && error.isConflict) {
        this.needsReload = true;
        this.lastError = "item changed, reload";
        return null;
      }
      throw error;
    }
  }
}
