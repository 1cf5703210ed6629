// Shared fixtures: a pristine item factory and the nine-sibling-meanings by
// eight-languages lexicalization pattern used by the matrix-view tests.

import type { ItemDoc, PanoramaDoc, StatusDoc } from "../src/types.js";

export function pendingItem(concept: string, subdomain = "siblings"): ItemDoc {
  return {
    concept,
    state: "pending",
    answer: null,
    history: [],
    revision_count: 0,
    subdomain,
    pending_correction: null,
  };
}

export const MATRIX_LANGS = [
  "eng", "jpn", "arb", "ita", "ind", "hin", "hun", "jav",
] as const;

// null marks an asserted gap
export const MATRIX_PATTERN: Record<string, (string | null)[]> = {
  "sibling": ["sibling", null, null, null, "saudara", "सहोदर", "testvér", "sedulur"],
  "elder-sibling": [null, null, null, null, "kakak", null, "nagytestvér", null],
  "younger-sibling": [null, null, null, null, "adik", null, "kistestvér", "adhi"],
  "brother": ["brother", null, "أخ", "fratello", null, "भैया", null, null],
  "sister": ["sister", null, "أُخْت", "sorella", null, "बहन", null, null],
  "elder-brother": [null, "あに", null, "fratellone", "abang", "भैया", "báty", "kangmas"],
  "elder-sister": [null, "あね", null, "sorellona", null, "दीदी", "nővér", "mbakyu"],
  "younger-brother": [null, "おとうと", null, "fratellino", null, "भाई", "öcs", null],
  "younger-sister": [null, "いもうと", null, "sorellina", null, "बहन", "húg", null],
};

export function statusFor(lexicon: string, concept: string, lemma: string | null): StatusDoc {
  if (lemma === null) {
    return {
      kind: "gap",
      sense: null,
      gap: { lexicon, concept, evidence: [], unevidenced: true },
    };
  }
  return {
    kind: "lexicalized",
    sense: { lexicon, concept, lemmas: [lemma], definition: null, pos: null },
    gap: null,
  };
}

export function panoramaFor(concept: string): PanoramaDoc {
  const pattern = MATRIX_PATTERN[concept];
  if (!pattern) throw new Error(`no pattern for ${concept}`);
  const statuses: Record<string, StatusDoc> = {};
  MATRIX_LANGS.forEach((code, index) => {
    statuses[code] = statusFor(code, concept, pattern[index] ?? null);
  });
  return {
    concept,
    gloss_en: `meaning: ${concept}`,
    gloss_std: null,
    subdomain: "siblings",
    origin: null,
    statuses,
    parents: [],
    children: [],
    relations: [],
  };
}
