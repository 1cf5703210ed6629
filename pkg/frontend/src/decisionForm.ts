// Decision form model: one concept, one decision. Holds the answer controls
// (word / gap / skip / new-concept) and the evidence fields, and knows when
// the form may be submitted: never before an answer type is chosen, and a
// new-concept proposal needs both a lemma and a definition.

import type { AnswerBody } from "./schemas.js";
import type { EvidenceDoc, PanoramaDoc } from "./types.js";

export type AnswerChoice = "word" | "gap" | "skip" | "new-concept" | null;

export interface SearchHitsFields {
  queryWithDiacritics: string;
  hitsWith: string;
  queryWithout: string;
  hitsWithout: string;
}

export class DecisionFormModel {
  answerType: AnswerChoice = null;
  lemma = "";
  definition = "";
  comment = "";
  dictionaryName = "";
  wiktionary = false;
  typologySource = "";
  searchHits: SearchHitsFields = {
    queryWithDiacritics: "",
    hitsWith: "",
    queryWithout: "",
    hitsWithout: "",
  };

  constructor(readonly concept: PanoramaDoc, readonly subdomain?: string) {}

  get glossStd(): string {
    return this.concept.gloss_std ?? this.concept.gloss_en;
  }

  get glossEn(): string {
    return this.concept.gloss_en;
  }

  get canSubmit(): boolean {
    if (this.answerType === null) return false;
    if (this.answerType === "word") return this.lemma.trim().length > 0;
    if (this.answerType === "new-concept") {
      return this.lemma.trim().length > 0 && this.definition.trim().length > 0;
    }
    return true;
  }

  evidence(): EvidenceDoc[] {
    const collected: EvidenceDoc[] = [];
    if (this.dictionaryName.trim()) {
      collected.push({ kind: "dictionary", name: this.dictionaryName.trim() });
    }
    if (this.wiktionary) {
      collected.push({ kind: "wiktionary" });
    }
    if (this.typologySource.trim()) {
      collected.push({ kind: "typology-dataset", name: this.typologySource.trim() });
    }
    const hits = this.searchHits;
    if (hits.queryWithDiacritics.trim() || hits.queryWithout.trim()) {
      const hitsWith = Number.parseInt(hits.hitsWith, 10);
      const hitsWithout = Number.parseInt(hits.hitsWithout, 10);
      if (Number.isFinite(hitsWith) && Number.isFinite(hitsWithout)) {
        collected.push({
          kind: "search-hits",
          query_with_diacritics: hits.queryWithDiacritics.trim(),
          hits_with: hitsWith,
          query_without: hits.queryWithout.trim(),
          hits_without: hitsWithout,
          total: hitsWith + hitsWithout,
        });
      }
    }
    return collected;
  }

  /** The POST body for /answer; only valid when canSubmit is true. */
  toAnswerBody(): AnswerBody {
    if (!this.canSubmit || this.answerType === null) {
      throw new Error("form is not ready to submit");
    }
    const body: AnswerBody = { type: this.answerType };
    if (this.answerType === "word" || this.answerType === "new-concept") {
      body.lemma = this.lemma.trim();
    }
    if (this.answerType === "new-concept") {
      body.definition = this.definition.trim();
      body.subdomain = this.subdomain ?? this.concept.subdomain;
    }
    if (this.comment.trim()) body.comment = this.comment.trim();
    const evidence = this.evidence();
    if (evidence.length > 0) body.evidence = evidence;
    return body;
  }
}
