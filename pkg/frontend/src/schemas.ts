// Zod schemas for every POST body the UI sends. The client validates each
// outgoing body against these, so a payload that would 422 on the server
// never leaves the browser, and the tests hold the flows to the same
// contract.

import { z } from "zod";

export const evidenceSchema = z
  .object({
    kind: z.enum([
      "dictionary",
      "wiktionary",
      "typology-dataset",
      "search-hits",
      "attested-usage",
    ]),
    name: z.string().min(1).optional(),
    query_with_diacritics: z.string().optional(),
    hits_with: z.number().int().nonnegative().optional(),
    query_without: z.string().optional(),
    hits_without: z.number().int().nonnegative().optional(),
    total: z.number().int().nonnegative().optional(),
    note: z.string().optional(),
  })
  .refine(
    (e) =>
      e.total === undefined ||
      e.hits_with === undefined ||
      e.hits_without === undefined ||
      e.total === e.hits_with + e.hits_without,
    { message: "total must equal hits_with + hits_without" },
  );

export const answerBodySchema = z
  .object({
    type: z.enum(["word", "gap", "skip", "new-concept"]),
    lemma: z.string().optional(),
    definition: z.string().optional(),
    comment: z.string().optional(),
    subdomain: z.string().optional(),
    evidence: z.array(evidenceSchema).optional(),
  })
  .refine((a) => a.type !== "word" || (a.lemma ?? "").trim().length > 0, {
    message: "word answers need a lemma",
  })
  .refine(
    (a) =>
      a.type !== "new-concept" ||
      ((a.lemma ?? "").trim().length > 0 && (a.definition ?? "").trim().length > 0),
    { message: "new-concept answers need a lemma and a definition" },
  );

export const lexiconReviewBodySchema = z
  .object({
    verdict: z.enum(["correct", "incorrect", "unclear"]),
    comment: z.string().optional(),
    correction: z
      .object({
        type: z.enum(["word", "gap"]),
        lemma: z.string().optional(),
      })
      .optional(),
  })
  .refine((v) => v.verdict !== "incorrect" || (v.comment ?? "").trim().length > 0, {
    message: "incorrect verdicts need a comment",
  });

export const conceptReviewBodySchema = z
  .object({
    verdict: z.enum(["accept", "correct-but-not-new", "not-accepted"]),
    existing: z.string().optional(),
    comment: z.string().optional(),
    final: z.boolean().optional(),
  })
  .refine(
    (v) => v.verdict !== "correct-but-not-new" || (v.existing ?? "").length > 0,
    { message: "correct-but-not-new must name the existing concept" },
  )
  .refine(
    (v) => v.verdict !== "not-accepted" || (v.comment ?? "").trim().length > 0,
    { message: "not-accepted verdicts need a comment" },
  );

export const taskCreateBodySchema = z.object({
  lexicon: z.string().min(3),
  subdomains: z.array(z.string().min(1)).min(1),
  contributor: z.string().min(1),
  lexicon_validator: z.string().min(1),
  concept_validator: z.string().min(1),
  max_cycles: z.number().int().positive().optional(),
  id: z.string().optional(),
});

export const mergeBodySchema = z.object({
  task: z.string().min(1),
  concept: z.string().min(1),
  parents: z.array(z.string().min(1)).min(1),
  new_id: z.string().optional(),
  promote: z.boolean().optional(),
  study_set: z.array(z.string()).optional(),
});

export type AnswerBody = z.infer<typeof answerBodySchema>;
export type LexiconReviewBody = z.infer<typeof lexiconReviewBodySchema>;
export type ConceptReviewBody = z.infer<typeof conceptReviewBodySchema>;
export type TaskCreateBody = z.infer<typeof taskCreateBodySchema>;
export type MergeBody = z.infer<typeof mergeBodySchema>;

export const endpointSchemas = {
  answer: answerBodySchema,
  "lexicon-review": lexiconReviewBodySchema,
  "concept-review": conceptReviewBodySchema,
  tasks: taskCreateBodySchema,
  merge: mergeBodySchema,
} as const;
