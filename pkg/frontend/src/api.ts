// Typed client for the lexidiv HTTP API. All state changes go through the
// documented endpoints; the acting user travels in the X-Actor header.

import {
  answerBodySchema,
  conceptReviewBodySchema,
  lexiconReviewBodySchema,
  mergeBodySchema,
  taskCreateBodySchema,
  type AnswerBody,
  type ConceptReviewBody,
  type LexiconReviewBody,
  type MergeBody,
  type TaskCreateBody,
} from "./schemas.js";
import type {
  CountsDoc,
  FallbackDoc,
  ItemDoc,
  ItemState,
  OverlapDoc,
  PanoramaDoc,
  SenseDoc,
  StatusDoc,
  TaskDoc,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }

  get isConflict(): boolean {
    return this.status === 409;
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
    public actor: string | null = null,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let code = "error";
      let message = `${response.status}`;
      try {
        const body = (await response.json()) as { code?: string; message?: string };
        code = body.code ?? code;
        message = body.message ?? message;
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiRequestError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (this.actor) headers["X-Actor"] = this.actor;
    return this.request<T>(path, {
      method: "POST",
      headers,
      body: JSON.stringify(body),
    });
  }

  // --- read side -----------------------------------------------------------

  panorama(concept: string): Promise<PanoramaDoc> {
    return this.request(`/concepts/${encodeURIComponent(concept)}`);
  }

  status(lexicon: string, concept: string): Promise<StatusDoc> {
    return this.request(
      `/lexicons/${encodeURIComponent(lexicon)}/status/${encodeURIComponent(concept)}`,
    );
  }

  fallback(lexicon: string, concept: string): Promise<FallbackDoc> {
    return this.request(
      `/lexicons/${encodeURIComponent(lexicon)}/fallback/${encodeURIComponent(concept)}`,
    );
  }

  wordMeanings(
    lexicon: string,
    lemma: string,
  ): Promise<{ lemma: string; meanings: { concept: string; sense: SenseDoc }[] }> {
    const params = new URLSearchParams({ lemma });
    return this.request(`/lexicons/${encodeURIComponent(lexicon)}/words?${params}`);
  }

  overlap(
    langs: string[],
    options: { domain?: string[]; universe?: string; mode?: string } = {},
  ): Promise<OverlapDoc> {
    const params = new URLSearchParams({ langs: langs.join(",") });
    if (options.domain?.length) params.set("domain", options.domain.join(","));
    if (options.universe) params.set("universe", options.universe);
    if (options.mode) params.set("mode", options.mode);
    return this.request(`/stats/overlap?${params}`);
  }

  counts(options: { langs?: string[]; universe?: string; mode?: string } = {}): Promise<CountsDoc> {
    const params = new URLSearchParams();
    if (options.langs?.length) params.set("langs", options.langs.join(","));
    if (options.universe) params.set("universe", options.universe);
    if (options.mode) params.set("mode", options.mode);
    const query = params.toString();
    return this.request(`/stats/counts${query ? `?${query}` : ""}`);
  }

  tasks(): Promise<{ tasks: TaskDoc[] }> {
    return this.request("/tasks");
  }

  taskItems(taskId: string, state?: ItemState): Promise<{ task: string; items: ItemDoc[] }> {
    const suffix = state ? `?state=${encodeURIComponent(state)}` : "";
    return this.request(`/tasks/${encodeURIComponent(taskId)}/items${suffix}`);
  }

  // --- mutations ------------------------------------------------------------

  createTask(body: TaskCreateBody): Promise<TaskDoc> {
    return this.post("/tasks", taskCreateBodySchema.parse(body));
  }

  submitAnswer(
    taskId: string,
    concept: string,
    body: AnswerBody,
  ): Promise<{ concept: string; state: ItemState }> {
    return this.post(
      `/tasks/${encodeURIComponent(taskId)}/items/${encodeURIComponent(concept)}/answer`,
      answerBodySchema.parse(body),
    );
  }

  lexiconReview(
    taskId: string,
    concept: string,
    body: LexiconReviewBody,
  ): Promise<{ concept: string; state: ItemState }> {
    return this.post(
      `/tasks/${encodeURIComponent(taskId)}/items/${encodeURIComponent(concept)}/lexicon-review`,
      lexiconReviewBodySchema.parse(body),
    );
  }

  conceptReview(
    taskId: string,
    concept: string,
    body: ConceptReviewBody,
  ): Promise<{ concept: string; state: ItemState }> {
    return this.post(
      `/tasks/${encodeURIComponent(taskId)}/items/${encodeURIComponent(concept)}/concept-review`,
      conceptReviewBodySchema.parse(body),
    );
  }

  integrate(taskId: string, concept: string): Promise<{ concept: string; state: ItemState }> {
    return this.post(
      `/tasks/${encodeURIComponent(taskId)}/items/${encodeURIComponent(concept)}/integrate`,
      {},
    );
  }

  merge(body: MergeBody): Promise<{
    new_id: string;
    origin: string | null;
    followups: { task: string; lexicon: string }[];
  }> {
    return this.post("/concepts/merge", mergeBodySchema.parse(body));
  }
}
