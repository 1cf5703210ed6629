"""Two-layer lexical model: a shared concept graph above per-language lexicons.

The top layer is a DAG of concepts (multiple hypernyms allowed). The bottom
layer is one lexicon per language or dialect, holding lexicalizations
(senses) and explicit lexical-gap assertions. For any (lexicon, concept)
pair the status is tri-state: lexicalized, gap, or unknown — "unknown" means
nobody has examined the pair yet, which is different from an asserted gap.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    BadEvidence,
    ConflictsWithGap,
    ConflictsWithSense,
    CycleDetected,
    DuplicateId,
    DuplicateLexicon,
    EmptyLemmas,
    MalformedCode,
    UnknownConcept,
    UnknownLexicon,
    UnknownParent,
)

_CODE_RE = re.compile(r"^[a-z]{3}(-[a-z]{3})?$")


def nfc(text: str) -> str:
    """NFC-normalize user-supplied text; lemmas are stored exactly as entered
    apart from this normalization (no diacritic stripping)."""
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class LanguageCode:
    """ISO 639-3 code, optionally extended with three extra lowercase letters
    for dialects that have no standardized code of their own."""

    base: str
    ext: Optional[str] = None

    def render(self) -> str:
        return self.base if self.ext is None else f"{self.base}-{self.ext}"

    def __str__(self) -> str:
        return self.render()


def parse_language_code(text: str) -> LanguageCode:
    if not isinstance(text, str) or not _CODE_RE.match(text):
        raise MalformedCode(f"not a valid language code: {text!r}")
    base, _, ext = text.partition("-")
    return LanguageCode(base, ext or None)


class RelationKind(str, Enum):
    HYPERNYM = "hypernym-of"
    SIMILAR = "similar-to"
    ANTONYM = "antonym"
    METONYMY = "metonymy"
    MERONYMY = "meronymy"


SYMMETRIC_RELATIONS = frozenset({RelationKind.SIMILAR, RelationKind.ANTONYM})


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    source: str
    target: str


@dataclass(frozen=True)
class Concept:
    """A meaning node. ``origin`` is None for shared (supra-lingual) concepts,
    or a lexicon code for concepts that live inside one language's layer."""

    id: str
    gloss_en: str
    gloss_std: Optional[str] = None
    subdomain: str = "other"
    origin: Optional[str] = None
    parents: tuple[str, ...] = ()

    @property
    def supra_lingual(self) -> bool:
        return self.origin is None


class EvidenceKind(str, Enum):
    DICTIONARY = "dictionary"
    WIKTIONARY = "wiktionary"
    TYPOLOGY_DATASET = "typology-dataset"
    SEARCH_HITS = "search-hits"
    ATTESTED_USAGE = "attested-usage"


@dataclass(frozen=True)
class Evidence:
    """Provenance for an answer: a named dictionary, Wiktionary, a typology
    dataset, attested usage, or web-search hit counts for the query written
    with and without diacritics."""

    kind: EvidenceKind
    name: Optional[str] = None
    query_with_diacritics: Optional[str] = None
    hits_with: Optional[int] = None
    query_without: Optional[str] = None
    hits_without: Optional[int] = None
    total: Optional[int] = None
    note: Optional[str] = None

    def __post_init__(self):
        for label, count in (
            ("hits_with", self.hits_with),
            ("hits_without", self.hits_without),
            ("total", self.total),
        ):
            if count is not None and count < 0:
                raise BadEvidence(f"{label} must be nonnegative, got {count}")
        if self.hits_with is not None and self.hits_without is not None:
            expected = self.hits_with + self.hits_without
            if self.total is None:
                object.__setattr__(self, "total", expected)
            elif self.total != expected:
                raise BadEvidence(
                    f"total {self.total} != hits_with + hits_without = {expected}"
                )

    @classmethod
    def dictionary(cls, name: str, note: str | None = None) -> "Evidence":
        return cls(EvidenceKind.DICTIONARY, name=name, note=note)

    @classmethod
    def wiktionary(cls, note: str | None = None) -> "Evidence":
        return cls(EvidenceKind.WIKTIONARY, note=note)

    @classmethod
    def typology_dataset(cls, name: str, note: str | None = None) -> "Evidence":
        return cls(EvidenceKind.TYPOLOGY_DATASET, name=name, note=note)

    @classmethod
    def search_hits(
        cls,
        query_with_diacritics: str,
        hits_with: int,
        query_without: str,
        hits_without: int,
        total: int | None = None,
        note: str | None = None,
    ) -> "Evidence":
        return cls(
            EvidenceKind.SEARCH_HITS,
            query_with_diacritics=nfc(query_with_diacritics),
            hits_with=hits_with,
            query_without=nfc(query_without),
            hits_without=hits_without,
            total=total,
            note=note,
        )

    @classmethod
    def attested_usage(cls, note: str) -> "Evidence":
        return cls(EvidenceKind.ATTESTED_USAGE, note=note)


@dataclass(frozen=True)
class Sense:
    """One lexicalization of a concept in a lexicon. Synonymous words are
    lemmas of the same sense; there is at most one sense per
    (lexicon, concept)."""

    lexicon: str
    concept: str
    lemmas: tuple[str, ...]
    definition: Optional[str] = None
    pos: Optional[str] = None


@dataclass(frozen=True)
class GapAssertion:
    """An explicit claim that the lexicon has no concise equivalent for the
    concept. Evidence is optional but its absence is flagged."""

    lexicon: str
    concept: str
    evidence: tuple[Evidence, ...] = ()

    @property
    def unevidenced(self) -> bool:
        return not self.evidence


class StatusKind(str, Enum):
    LEXICALIZED = "lexicalized"
    GAP = "gap"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class LexStatus:
    kind: StatusKind
    sense: Optional[Sense] = None
    gap: Optional[GapAssertion] = None

    @classmethod
    def lexicalized(cls, sense: Sense) -> "LexStatus":
        return cls(StatusKind.LEXICALIZED, sense=sense)

    @classmethod
    def gap_status(cls, gap: GapAssertion) -> "LexStatus":
        return cls(StatusKind.GAP, gap=gap)

    @classmethod
    def unknown(cls) -> "LexStatus":
        return cls(StatusKind.UNKNOWN)


@dataclass
class Lexicon:
    code: str
    display_name: str = ""
    senses: dict[str, Sense] = field(default_factory=dict)
    gaps: dict[str, GapAssertion] = field(default_factory=dict)


@dataclass(frozen=True)
class AssertionEvent:
    """Append-only log entry for sense/gap assertions (re-assertion included)."""

    seq: int
    op: str  # "sense" | "gap"
    lexicon: str
    concept: str
    lemmas: tuple[str, ...] = ()


@dataclass(frozen=True)
class LayerViolation:
    kind: str  # "unlexicalized-supra" | "homeless-language-specific"
    concept: str
    detail: str


def _clean_lemmas(lemmas: Iterable[str]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for lemma in lemmas:
        lemma = nfc(lemma).strip()
        if lemma:
            seen.setdefault(lemma, None)
    return tuple(seen)


class Database:
    """In-memory store for the whole two-layer model plus workflow tasks.

    Single-writer, multiple-reader: reads are pure on a snapshot and all
    mutations go through methods of this class. Merged (workflow-accepted)
    concepts are tracked separately from the imported base so analytics can
    choose its concept universe.
    """

    SCHEMA_VERSION = 1

    def __init__(self):
        self.concepts: dict[str, Concept] = {}
        self.lexicons: dict[str, Lexicon] = {}
        self.relations: list[Relation] = []
        self.assertion_log: list[AssertionEvent] = []
        self.retired_ids: set[str] = set()
        # concept id -> code of the lexicon that first proposed it
        self.merged_from: dict[str, str] = {}
        self.tasks: dict = {}  # task id -> workflow.Task; managed by lexidiv.workflow
        self._children: dict[str, set[str]] = {}

    # --- lexicons ----------------------------------------------------------

    def add_lexicon(self, code: str, display_name: str = "") -> Lexicon:
        parse_language_code(code)
        if code in self.lexicons:
            raise DuplicateLexicon(f"lexicon {code!r} already exists")
        lexicon = Lexicon(code=code, display_name=display_name or code)
        self.lexicons[code] = lexicon
        return lexicon

    def lexicon(self, code: str) -> Lexicon:
        try:
            return self.lexicons[code]
        except KeyError:
            raise UnknownLexicon(f"unknown lexicon {code!r}") from None

    # --- concept graph ------------------------------------------------------

    def concept(self, concept_id: str) -> Concept:
        try:
            return self.concepts[concept_id]
        except KeyError:
            raise UnknownConcept(f"unknown concept {concept_id!r}") from None

    def add_concept(self, concept: Concept) -> str:
        if not concept.id:
            raise DuplicateId("concept id must be nonempty")
        if concept.id in self.concepts or concept.id in self.retired_ids:
            raise DuplicateId(f"concept id {concept.id!r} already used")
        if concept.id in concept.parents:
            raise CycleDetected(f"{concept.id!r} cannot be its own hypernym")
        for parent in concept.parents:
            if parent not in self.concepts:
                raise UnknownParent(f"unknown parent {parent!r}")
        concept = replace(
            concept,
            gloss_en=nfc(concept.gloss_en),
            gloss_std=nfc(concept.gloss_std) if concept.gloss_std else None,
            parents=tuple(dict.fromkeys(concept.parents)),
        )
        self.concepts[concept.id] = concept
        self._children.setdefault(concept.id, set())
        for parent in concept.parents:
            self._children.setdefault(parent, set()).add(concept.id)
        return concept.id

    def add_parent(self, child: str, parent: str) -> None:
        child_c = self.concept(child)
        if parent not in self.concepts:
            raise UnknownParent(f"unknown parent {parent!r}")
        if parent == child or child in self.ancestors(parent):
            raise CycleDetected(f"edge {child!r} -> {parent!r} closes a cycle")
        if parent not in child_c.parents:
            self.concepts[child] = replace(
                child_c, parents=child_c.parents + (parent,)
            )
            self._children.setdefault(parent, set()).add(child)

    def parents_of(self, concept_id: str) -> tuple[str, ...]:
        return self.concept(concept_id).parents

    def children_of(self, concept_id: str) -> tuple[str, ...]:
        self.concept(concept_id)
        return tuple(sorted(self._children.get(concept_id, ())))

    def ancestors(self, concept_id: str) -> set[str]:
        """All hypernym-reachable concepts, excluding the start node."""
        seen: set[str] = set()
        stack = list(self.concept(concept_id).parents)
        while stack:
            node = stack.pop()
            if node not in seen:
                seen.add(node)
                stack.extend(self.concepts[node].parents)
        return seen

    def add_relation(self, kind: RelationKind | str, source: str, target: str) -> Relation:
        kind = RelationKind(kind)
        if kind is RelationKind.HYPERNYM:
            # hypernym-of(parent, child): parent subsumes child
            self.add_parent(target, source)
            relation = Relation(kind, source, target)
            return relation
        self.concept(source)
        self.concept(target)
        relation = Relation(kind, source, target)
        if relation not in self.relations:
            self.relations.append(relation)
        return relation

    def relations_of(self, concept_id: str) -> list[Relation]:
        """Non-hypernym relations touching the concept; symmetric kinds are
        reported from both ends."""
        self.concept(concept_id)
        found = []
        for rel in self.relations:
            if rel.source == concept_id:
                found.append(rel)
            elif rel.target == concept_id and rel.kind in SYMMETRIC_RELATIONS:
                found.append(Relation(rel.kind, rel.target, rel.source))
        return found

    # --- senses and gaps ------------------------------------------------

    def assert_sense(
        self,
        lexicon: str,
        concept: str,
        lemmas: Sequence[str],
        definition: str | None = None,
        pos: str | None = None,
    ) -> Sense:
        lex = self.lexicon(lexicon)
        self.concept(concept)
        if concept in lex.gaps:
            raise ConflictsWithGap(
                f"({lexicon}, {concept}) already asserted as a gap"
            )
        cleaned = _clean_lemmas(lemmas)
        if not cleaned:
            raise EmptyLemmas(f"no usable lemmas for ({lexicon}, {concept})")
        sense = Sense(
            lexicon=lexicon,
            concept=concept,
            lemmas=cleaned,
            definition=nfc(definition) if definition else None,
            pos=pos,
        )
        lex.senses[concept] = sense  # last writer wins; the log keeps history
        self.assertion_log.append(
            AssertionEvent(len(self.assertion_log), "sense", lexicon, concept, cleaned)
        )
        return sense

    def assert_gap(
        self,
        lexicon: str,
        concept: str,
        evidence: Sequence[Evidence] = (),
    ) -> GapAssertion:
        lex = self.lexicon(lexicon)
        self.concept(concept)
        if concept in lex.senses:
            raise ConflictsWithSense(
                f"({lexicon}, {concept}) already lexicalized"
            )
        gap = GapAssertion(lexicon=lexicon, concept=concept, evidence=tuple(evidence))
        lex.gaps[concept] = gap
        self.assertion_log.append(
            AssertionEvent(len(self.assertion_log), "gap", lexicon, concept)
        )
        return gap

    def status(self, lexicon: str, concept: str) -> LexStatus:
        lex = self.lexicon(lexicon)
        self.concept(concept)
        if concept in lex.senses:
            return LexStatus.lexicalized(lex.senses[concept])
        if concept in lex.gaps:
            return LexStatus.gap_status(lex.gaps[concept])
        return LexStatus.unknown()

    def _filtered(self, ids: Iterable[str], subdomains) -> set[str]:
        if subdomains is None:
            return set(ids)
        wanted = {subdomains} if isinstance(subdomains, str) else set(subdomains)
        return {c for c in ids if self.concepts[c].subdomain in wanted}

    def lexicalized_concepts(self, lexicon: str, subdomains=None) -> set[str]:
        return self._filtered(self.lexicon(lexicon).senses, subdomains)

    def gap_concepts(self, lexicon: str, subdomains=None) -> set[str]:
        return self._filtered(self.lexicon(lexicon).gaps, subdomains)

    def unknown_concepts(self, lexicon: str, subdomains=None) -> set[str]:
        lex = self.lexicon(lexicon)
        unknown = set(self.concepts) - set(lex.senses) - set(lex.gaps)
        return self._filtered(unknown, subdomains)

    def base_concept_ids(self) -> set[str]:
        """Concepts that were present before any workflow merge."""
        return set(self.concepts) - set(self.merged_from)

    # --- integrity --------------------------------------------------------

    def check_concept_layer(self) -> list[LayerViolation]:
        """Shared-layer health check, run at export/merge time rather than on
        insert: every supra-lingual concept must be lexicalized somewhere, and
        a language-specific concept must have a sense in its home lexicon."""
        lexicalized_anywhere: set[str] = set()
        for lex in self.lexicons.values():
            lexicalized_anywhere.update(lex.senses)
        violations = []
        for concept in self.concepts.values():
            if concept.supra_lingual:
                if concept.id not in lexicalized_anywhere:
                    violations.append(
                        LayerViolation(
                            "unlexicalized-supra",
                            concept.id,
                            "supra-lingual concept lexicalized by no lexicon",
                        )
                    )
            else:
                home = self.lexicons.get(concept.origin)
                if home is None or concept.id not in home.senses:
                    violations.append(
                        LayerViolation(
                            "homeless-language-specific",
                            concept.id,
                            f"no sense in its own lexicon {concept.origin!r}",
                        )
                    )
        return violations

    # --- iteration helpers -------------------------------------------------

    def iter_concepts(self) -> Iterator[Concept]:
        return iter(self.concepts.values())

    def subdomains(self) -> list[str]:
        seen: dict[str, None] = {}
        for concept in self.concepts.values():
            seen.setdefault(concept.subdomain, None)
        return list(seen)
