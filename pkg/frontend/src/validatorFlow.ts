// Validator flows. The lexicon tier works answer-by-answer (correct /
// incorrect-with-optional-correction / unclear); unclear sends the item to
// the concept tier's queue. The concept tier accepts proposals (followed by
// a merge dialog for placement), retargets duplicates onto existing
// concepts, or returns them with a comment.

import { ApiRequestError, type ApiClient } from "./api.js";
import type { ConceptReviewBody, LexiconReviewBody, MergeBody } from "./schemas.js";
import type { ItemDoc, ItemState } from "./types.js";

export interface MergeDialog {
  task: string;
  concept: string; // the placeholder id of the accepted proposal
  lemma: string;
  definition: string;
  parents: string[];
  promote: boolean;
}

export class ValidatorFlow {
  lexiconQueue: ItemDoc[] = [];
  conceptQueue: ItemDoc[] = [];
  approved: ItemDoc[] = [];
  needsReload = false;
  lastError: string | null = null;

  constructor(
    private readonly api: ApiClient,
    readonly taskId: string,
  ) {}

  async load(): Promise<void> {
    const answered = await this.api.taskItems(this.taskId, "answered");
    const reopened = await this.api.taskItems(this.taskId, "in-lexicon-review");
    const escalated = await this.api.taskItems(this.taskId, "in-concept-review");
    const ready = await this.api.taskItems(this.taskId, "lexicon-approved");
    this.lexiconQueue = [...answered.items, ...reopened.items];
    this.conceptQueue = escalated.items;
    this.approved = ready.items;
    this.needsReload = false;
    this.lastError = null;
  }

  private async guarded<T>(action: () => Promise<T>): Promise<T | null> {
    try {
      const result = await action();
      this.lastError = null;
      return result;
    } catch (error) {
      if (error instanceof ApiRequestError && error.isConflict) {
        this.needsReload = true;
        this.lastError = "item changed, reload";
        return null;
      }
      throw error;
    }
  }

  /** Lexicon-tier verdict; unclear moves the item to the concept queue. */
  async reviewLexicon(
    concept: string,
    body: LexiconReviewBody,
  ): Promise<ItemState | null> {
    const outcome = await this.guarded(() =>
      this.api.lexiconReview(this.taskId, concept, body),
    );
    if (outcome === null) return null;
    const item = this.take(this.lexiconQueue, concept);
    if (item) {
      item.state = outcome.state;
      if (outcome.state === "in-concept-review") this.conceptQueue.push(item);
      if (outcome.state === "lexicon-approved") this.approved.push(item);
    }
    return outcome.state;
  }

  async integrate(concept: string): Promise<ItemState | null> {
    const outcome = await this.guarded(() => this.api.integrate(this.taskId, concept));
    if (outcome === null) return null;
    this.take(this.approved, concept);
    return outcome.state;
  }

  /**
   * Accept a new-concept proposal. The item becomes ready to merge and the
   * returned dialog collects hierarchy placement before POSTing the merge.
   */
  async acceptProposal(concept: string, comment?: string): Promise<MergeDialog | null> {
    const outcome = await this.guarded(() =>
      this.api.conceptReview(this.taskId, concept, { verdict: "accept", comment }),
    );
    if (outcome === null) return null;
    const item = this.take(this.conceptQueue, concept);
    return {
      task: this.taskId,
      concept,
      lemma: item?.answer?.lemma ?? "",
      definition: item?.answer?.definition ?? "",
      parents: [],
      promote: false,
    };
  }

  /** Accept an escalated word/gap (non-proposal) back onto the integrate path. */
  async acceptEscalation(concept: string, comment?: string): Promise<ItemState | null> {
    const outcome = await this.guarded(() =>
      this.api.conceptReview(this.taskId, concept, { verdict: "accept", comment }),
    );
    if (outcome === null) return null;
    const item = this.take(this.conceptQueue, concept);
    if (item) {
      item.state = outcome.state;
      this.approved.push(item);
    }
    return outcome.state;
  }

  async completeMerge(dialog: MergeDialog): Promise<string | null> {
    const body: MergeBody = {
      task: dialog.task,
      concept: dialog.concept,
      parents: dialog.parents,
      promote: dialog.promote,
    };
    const outcome = await this.guarded(() => this.api.merge(body));
    return outcome?.new_id ?? null;
  }

  /** Duplicate proposal: retarget onto the concept the picker selected. */
  async confirmNotNew(concept: string, existing: string): Promise<ItemState | null> {
    const body: ConceptReviewBody = { verdict: "correct-but-not-new", existing };
    const outcome = await this.guarded(() =>
      this.api.conceptReview(this.taskId, concept, body),
    );
    if (outcome === null) return null;
    const item = this.take(this.conceptQueue, concept);
    if (item) {
      item.concept = existing;
      item.state = outcome.state;
      this.lexiconQueue.push(item); // back in the lexicon validator's queue
    }
    return outcome.state;
  }

  async rejectProposal(
    concept: string,
    comment: string,
    final = false,
  ): Promise<ItemState | null> {
    const outcome = await this.guarded(() =>
      this.api.conceptReview(this.taskId, concept, {
        verdict: "not-accepted",
        comment,
        final,
      }),
    );
    if (outcome === null) return null;
    this.take(this.conceptQueue, concept);
    return outcome.state;
  }

  private take(queue: ItemDoc[], concept: string): ItemDoc | undefined {
    const index = queue.findIndex((item) => item.concept === concept);
    return index >= 0 ? queue.splice(index, 1)[0] : undefined;
  }
}
