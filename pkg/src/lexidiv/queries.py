"""Read-side lookups: status, hypernym fallback, reverse word search, and
the all-languages panorama of one concept."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .model import Database, LexStatus, Relation, Sense, StatusKind, nfc


@dataclass(frozen=True)
class FallbackMatch:
    concept: str
    sense: Sense


@dataclass(frozen=True)
class FallbackResult:
    """Exact lexicalization, or the nearest lexicalized hypernyms.

    ``matches`` holds every minimal-distance lexicalized ancestor, ordered by
    concept id; ``distance`` is the hop count (0 for exact). Only hypernym
    edges are followed — they are the only relation that guarantees the
    fallback word subsumes the requested meaning.
    """

    status: str  # "exact" | "ancestor" | "none"
    distance: int = 0
    matches: tuple[FallbackMatch, ...] = ()

    @property
    def sense(self) -> Optional[Sense]:
        return self.matches[0].sense if self.matches else None


def lookup(db: Database, lexicon: str, concept: str) -> LexStatus:
    return db.status(lexicon, concept)


def fallback(db: Database, lexicon: str, concept: str) -> FallbackResult:
    status = db.status(lexicon, concept)
    if status.kind is StatusKind.LEXICALIZED:
        return FallbackResult(
            "exact", 0, (FallbackMatch(concept, status.sense),)
        )
    lex = db.lexicon(lexicon)
    seen = {concept}
    frontier = deque([(concept, 0)])
    best_distance: Optional[int] = None
    found: list[FallbackMatch] = []
    while frontier:
        node, distance = frontier.popleft()
        if best_distance is not None and distance > best_distance:
            break
        if node != concept and node in lex.senses:
            best_distance = distance
            found.append(FallbackMatch(node, lex.senses[node]))
            continue  # no need to look above a lexicalized ancestor
        for parent in db.concepts[node].parents:
            if parent not in seen:
                seen.add(parent)
                frontier.append((parent, distance + 1))
    if not found:
        return FallbackResult("none")
    found.sort(key=lambda m: m.concept)
    return FallbackResult("ancestor", best_distance or 0, tuple(found))


def word_meanings(db: Database, lexicon: str, lemma: str) -> list[tuple[str, Sense]]:
    """All senses of the lexicon whose lemma list contains the query, matched
    exactly after NFC normalization (no diacritic stripping)."""
    lex = db.lexicon(lexicon)
    query = nfc(lemma)
    return sorted(
        ((concept, sense) for concept, sense in lex.senses.items()
         if query in sense.lemmas),
        key=lambda pair: pair[0],
    )


@dataclass(frozen=True)
class ConceptPanorama:
    concept: str
    statuses: dict[str, LexStatus]  # one entry per lexicon in the database
    parents: tuple[str, ...]
    children: tuple[str, ...]
    relations: tuple[Relation, ...]


def concept_panorama(db: Database, concept: str) -> ConceptPanorama:
    node = db.concept(concept)
    statuses = {code: db.status(code, concept) for code in db.lexicons}
    return ConceptPanorama(
        concept=concept,
        statuses=statuses,
        parents=node.parents,
        children=db.children_of(concept),
        relations=tuple(db.relations_of(concept)),
    )
