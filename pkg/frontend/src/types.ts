// Payload shapes of the lexidiv HTTP API (read side).

export type StatusKind = "lexicalized" | "gap" | "unknown";

export interface SenseDoc {
  lexicon: string;
  concept: string;
  lemmas: string[];
  definition: string | null;
  pos: string | null;
}

export interface EvidenceDoc {
  kind: "dictionary" | "wiktionary" | "typology-dataset" | "search-hits" | "attested-usage";
  name?: string;
  query_with_diacritics?: string;
  hits_with?: number;
  query_without?: string;
  hits_without?: number;
  total?: number;
  note?: string;
}

export interface GapDoc {
  lexicon: string;
  concept: string;
  evidence: EvidenceDoc[];
  unevidenced: boolean;
}

export interface StatusDoc {
  kind: StatusKind;
  sense: SenseDoc | null;
  gap: GapDoc | null;
}

export interface RelationDoc {
  kind: string;
  source: string;
  target: string;
}

export interface PanoramaDoc {
  concept: string;
  gloss_en: string;
  gloss_std: string | null;
  subdomain: string;
  origin: string | null;
  statuses: Record<string, StatusDoc>;
  parents: string[];
  children: string[];
  relations: RelationDoc[];
}

export interface FallbackDoc {
  status: "exact" | "ancestor" | "none";
  distance: number;
  matches: { concept: string; sense: SenseDoc }[];
}

export type ItemState =
  | "pending"
  | "answered"
  | "in-lexicon-review"
  | "needs-revision"
  | "lexicon-approved"
  | "in-concept-review"
  | "integrated"
  | "skipped"
  | "rejected";

export interface AnswerDoc {
  kind: "word" | "gap" | "skip" | "new-concept";
  lemma: string | null;
  definition: string | null;
  comment: string | null;
  evidence: EvidenceDoc[];
}

export interface HistoryEntryDoc {
  seq: number;
  at: number;
  actor: string;
  transition: string;
  comment: string | null;
  detail: Record<string, unknown>;
}

export interface ItemDoc {
  concept: string;
  state: ItemState;
  answer: AnswerDoc | null;
  history: HistoryEntryDoc[];
  revision_count: number;
  subdomain: string | null;
  pending_correction: AnswerDoc | null;
}

export interface TaskDoc {
  id: string;
  lexicon: string;
  subdomains: string[];
  contributor: string;
  lexicon_validator: string;
  concept_validator: string;
  items_total: number;
  state_counts: Partial<Record<ItemState, number>>;
}

export interface OverlapDoc {
  lexicons: string[];
  subdomains: string[] | null;
  universe: string;
  intersection_size: number;
  max_size: number;
  ratio: number;
  percent: string;
  degenerate: boolean;
  matrix: number[][];
  matrix_percent: string[][];
}

export interface CountsRowDoc {
  lexicon: string;
  words: number;
  gaps: number;
  new_concepts: number;
}

export interface CountsDoc {
  universe: string;
  mode: string;
  rows: CountsRowDoc[];
}

export interface ApiError {
  code: string;
  message: string;
}
