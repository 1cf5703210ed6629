from __future__ import annotations

import random

import pytest

from lexidiv.errors import UnknownConcept, UnknownLexicon
from lexidiv.model import Concept, Database, StatusKind
from lexidiv.queries import concept_panorama, fallback, lookup, word_meanings

from oracles import bfs_fallback


# --- lookup ---------------------------------------------------------------


def nephew_db() -> Database:
    db = Database()
    db.add_concept(Concept("siblings-child", "child of a sibling", subdomain="nephew-niece"))
    db.add_concept(Concept("nephew", "son of a sibling", subdomain="nephew-niece",
                           parents=("siblings-child",)))
    db.add_lexicon("jav")
    db.add_lexicon("bjn")
    db.assert_sense("jav", "nephew", ["ponakan jaler"])
    db.assert_gap("bjn", "nephew")
    return db


def test_lookup_tristate():
    db = nephew_db()
    assert lookup(db, "jav", "nephew").sense.lemmas == ("ponakan jaler",)
    assert lookup(db, "bjn", "nephew").kind is StatusKind.GAP
    assert lookup(db, "jav", "siblings-child").kind is StatusKind.UNKNOWN
    with pytest.raises(UnknownLexicon):
        lookup(db, "xxx", "nephew")
    with pytest.raises(UnknownConcept):
        lookup(db, "jav", "xxx")


# --- fallback ----------------------------------------------------------------


def test_fallback_exact(table1_db):
    result = fallback(table1_db, "ind", "sibling")
    assert result.status == "exact" and result.distance == 0
    assert result.sense.lemmas == ("saudara",)


def test_fallback_javanese_younger_sister(table1_db):
    result = fallback(table1_db, "jav", "younger-sister")
    assert result.status == "ancestor"
    assert result.distance == 1
    assert [m.concept for m in result.matches] == ["younger-sibling"]
    assert result.sense.lemmas == ("adhi",)


def test_fallback_none_when_no_lexicalized_ancestor(table1_db):
    # arb lexicalizes only brother/sister; eldest-brother climbs to them
    result = fallback(table1_db, "jpn", "sibling")
    assert result.status == "none"


def test_fallback_tie_returns_all_minimal_ancestors_sorted():
    db = Database()
    db.add_concept(Concept("a-parent", "a"))
    db.add_concept(Concept("b-parent", "b"))
    db.add_concept(Concept("child", "c", parents=("b-parent", "a-parent")))
    db.add_lexicon("eng")
    db.assert_sense("eng", "a-parent", ["wa"])
    db.assert_sense("eng", "b-parent", ["wb"])
    result = fallback(db, "eng", "child")
    assert result.distance == 1
    assert [m.concept for m in result.matches] == ["a-parent", "b-parent"]


def test_fallback_exact_iff_lexicalized(table1_db):
    for code in table1_db.lexicons:
        for concept in table1_db.concepts:
            result = fallback(table1_db, code, concept)
            lexicalized = lookup(table1_db, code, concept).kind is StatusKind.LEXICALIZED
            assert (result.status == "exact") == lexicalized


def random_dag(rng: random.Random, n: int) -> dict[str, set[str]]:
    """Parents always have lower indices, so the graph is acyclic."""
    parents: dict[str, set[str]] = {}
    for i in range(n):
        choices = [f"n{j}" for j in range(i)]
        k = rng.randint(0, min(3, len(choices)))
        parents[f"n{i}"] = set(rng.sample(choices, k)) if k else set()
    return parents


def test_fallback_matches_bfs_oracle_on_random_dags():
    rng = random.Random(4242)
    for _ in range(60):
        n = rng.randint(1, 50)
        parents = random_dag(rng, n)
        db = Database()
        for i in range(n):
            name = f"n{i}"
            db.add_concept(Concept(name, name, parents=tuple(sorted(parents[name]))))
        db.add_lexicon("eng")
        lexicalized = {name for name in parents if rng.random() < 0.3}
        for name in lexicalized:
            db.assert_sense("eng", name, [f"w-{name}"])
        for start in parents:
            result = fallback(db, "eng", start)
            expected = bfs_fallback(parents, lexicalized, start)
            if expected is None:
                assert result.status == "none"
            else:
                distance, matches = expected
                if distance == 0:
                    assert result.status == "exact" and result.distance == 0
                else:
                    assert result.status == "ancestor"
                    assert result.distance == distance
                    assert [m.concept for m in result.matches] == matches


# --- word meanings --------------------------------------------------------------


def test_polysemous_word_maps_to_all_meanings():
    db = Database()
    for concept in ("elder-sister", "fathers-elder-sister", "mothers-elder-sister"):
        db.add_concept(Concept(concept, concept))
    db.add_lexicon("arb-alg")
    for concept in db.concepts:
        db.assert_sense("arb-alg", concept, ["لالّة"])
    found = word_meanings(db, "arb-alg", "لالّة")
    assert [concept for concept, _ in found] == [
        "elder-sister", "fathers-elder-sister", "mothers-elder-sister",
    ]


def test_unknown_lemma_gives_empty_list(table1_db):
    assert word_meanings(table1_db, "ind", "zzz") == []


def test_word_meanings_exact_after_nfc(table1_db):
    table1_db.assert_sense("arb", "eldest-brother", ["جَدّ"])
    assert word_meanings(table1_db, "arb", "جَدّ")
    # stripping the diacritics is a different string: exact-match policy
    assert word_meanings(table1_db, "arb", "جد") == []


def test_word_meanings_is_inverse_image_of_senses(table1_db):
    for code in table1_db.lexicons:
        lex = table1_db.lexicons[code]
        for concept, sense in lex.senses.items():
            for lemma in sense.lemmas:
                assert (concept, sense) in word_meanings(table1_db, code, lemma)


def test_hindi_sibling_terms_are_polysemous(table1_db):
    assert [c for c, _ in word_meanings(table1_db, "hin", "भैया")] == [
        "brother", "elder-brother",
    ]


# --- panorama ----------------------------------------------------------------


def test_panorama_counts_for_brother(table1_db):
    view = concept_panorama(table1_db, "brother")
    assert len(view.statuses) == 8
    kinds = [s.kind for s in view.statuses.values()]
    assert kinds.count(StatusKind.LEXICALIZED) == 4
    assert kinds.count(StatusKind.GAP) == 4


def test_panorama_statuses_match_lookup(table1_db):
    for concept in ("sibling", "elder-brother", "younger-sister"):
        view = concept_panorama(table1_db, concept)
        assert set(view.statuses) == set(table1_db.lexicons)
        for code, status in view.statuses.items():
            assert status == lookup(table1_db, code, concept)


def test_panorama_hierarchy_context(table1_db):
    view = concept_panorama(table1_db, "sibling")
    assert view.parents == ()
    assert {"brother", "sister", "elder-sibling", "younger-sibling"} <= set(view.children)
    leaf = concept_panorama(table1_db, "youngest-sister")
    assert leaf.children == ()


def test_panorama_includes_relations(table1_db):
    table1_db.add_relation("antonym", "elder-sibling", "younger-sibling")
    view = concept_panorama(table1_db, "younger-sibling")
    assert any(
        r.kind.value == "antonym" and r.target == "elder-sibling"
        for r in view.relations
    )
