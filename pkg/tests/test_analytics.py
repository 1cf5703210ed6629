from __future__ import annotations

import random

import pytest

from lexidiv import analytics
from lexidiv.analytics import CountingMode, percent
from lexidiv.model import Concept, Database

from oracles import brute_overlap


def db_with_sets(sets: dict[str, set[str]], n_concepts: int) -> Database:
    db = Database()
    for i in range(n_concepts):
        db.add_concept(Concept(f"c{i}", f"c{i}", subdomain="siblings"))
    for code, concepts in sets.items():
        db.add_lexicon(code)
        for concept in concepts:
            db.assert_sense(code, concept, [f"{concept}~{code}"])
    return db


def span(lo: int, hi: int) -> set[str]:
    return {f"c{i}" for i in range(lo, hi)}


# --- worked example and rendering ------------------------------------------


def test_two_lexicon_worked_example():
    db = db_with_sets({"aaa": span(0, 51), "bbb": span(13, 55)}, 60)
    report = analytics.overlap(db, ["aaa", "bbb"])
    assert report.intersection_size == 38
    assert report.max_size == 51
    assert report.percent == "74.5"


def test_self_overlap_is_one():
    db = db_with_sets({"aaa": span(0, 5)}, 10)
    assert analytics.overlap(db, ["aaa", "aaa"]).ratio == 1.0
    assert analytics.overlap(db, ["aaa"]).ratio == 1.0


def test_degenerate_max_flagged_not_error():
    db = db_with_sets({"aaa": set(), "bbb": set()}, 5)
    report = analytics.overlap(db, ["aaa", "bbb"])
    assert report.ratio == 0.0 and report.degenerate


@pytest.mark.parametrize(
    "ratio, rendered",
    [
        (38 / 51, "74.5"),
        (8 / 17, "47.1"),
        (6 / 17, "35.3"),
        (1 / 17, "5.9"),
        (2 / 51, "3.9"),
        (0.595, "59.5"),
        (1.0, "100.0"),
        (0.0, "0.0"),
    ],
)
def test_percent_rendering_half_up(ratio, rendered):
    assert percent(ratio) == rendered


# --- oracle and algebraic properties ------------------------------------------


def random_fixture(rng: random.Random) -> tuple[Database, list[str]]:
    n_concepts = rng.randint(1, 50)
    n_lex = rng.randint(1, 10)
    sets = {
        f"l{chr(ord('a') + i)}a".ljust(3, "x")[:3]: {
            f"c{j}" for j in range(n_concepts) if rng.random() < rng.random()
        }
        for i in range(n_lex)
    }
    return db_with_sets(sets, n_concepts), list(sets)


def test_overlap_matches_set_oracle_on_random_fixtures():
    rng = random.Random(2024)
    for _ in range(120):
        db, codes = random_fixture(rng)
        chosen = rng.sample(codes, rng.randint(1, len(codes)))
        report = analytics.overlap(db, chosen)
        inter, max_size, ratio = brute_overlap(
            [db.lexicalized_concepts(c) for c in chosen]
        )
        assert (report.intersection_size, report.max_size) == (inter, max_size)
        assert report.ratio == pytest.approx(ratio)


def test_matrix_symmetry_and_diagonal():
    rng = random.Random(99)
    for _ in range(30):
        db, codes = random_fixture(rng)
        matrix = analytics.overlap_matrix(db, codes)
        n = len(codes)
        for i in range(n):
            for j in range(n):
                assert matrix.cells[i][j] == pytest.approx(matrix.cells[j][i])
        for i, code in enumerate(codes):
            if db.lexicalized_concepts(code):
                assert matrix.cells[i][i] == 1.0


def test_overlap_monotone_in_lexicon_list():
    rng = random.Random(5)
    for _ in range(30):
        db, codes = random_fixture(rng)
        rng.shuffle(codes)
        previous = None
        for k in range(1, len(codes) + 1):
            ratio = analytics.overlap(db, codes[:k]).ratio
            if previous is not None:
                assert ratio <= previous + 1e-12
            previous = ratio


def test_overlap_permutation_invariant():
    db = db_with_sets({"aaa": span(0, 20), "bbb": span(5, 30), "ccc": span(10, 18)}, 40)
    forward = analytics.overlap(db, ["aaa", "bbb", "ccc"])
    backward = analytics.overlap(db, ["ccc", "aaa", "bbb"])
    assert forward.ratio == backward.ratio


# --- counting modes --------------------------------------------------------------


def test_diversity_counts_closed_world_identity():
    db = db_with_sets({"aaa": span(0, 28)}, 184)
    counts = analytics.diversity_counts(db, "aaa", "base", CountingMode.CLOSED_WORLD)
    assert (counts.words, counts.gaps) == (28, 156)


def test_empty_lexicon_closed_world():
    db = db_with_sets({"aaa": set()}, 40)
    counts = analytics.diversity_counts(db, "aaa")
    assert (counts.words, counts.gaps) == (0, 40)


def test_asserted_gaps_bounded_by_closed_world():
    rng = random.Random(8)
    for _ in range(20):
        db, codes = random_fixture(rng)
        code = codes[0]
        for concept in list(db.unknown_concepts(code))[: rng.randint(0, 5)]:
            db.assert_gap(code, concept)
        asserted = analytics.diversity_counts(db, code, "base", CountingMode.ASSERTED_ONLY)
        closed = analytics.diversity_counts(db, code, "base", CountingMode.CLOSED_WORLD)
        assert asserted.gaps <= closed.gaps
        assert asserted.words == closed.words


def test_universe_override():
    db = db_with_sets({"aaa": span(0, 10)}, 20)
    counts = analytics.diversity_counts(db, "aaa", universe=span(0, 5))
    assert (counts.words, counts.gaps) == (5, 0)


def test_domain_breakdown_zero_lexicons():
    db = db_with_sets({"aaa": span(0, 4)}, 8)
    breakdown = analytics.domain_breakdown(db, [])
    assert breakdown.total_words == 0 and breakdown.total_gaps == 0


def test_new_concept_attribution_first_proposer_only(case_db):
    """A meaning accepted once and re-derived in later dialects counts for
    its first proposer: per-lexicon tallies add up to the distinct total."""
    per_lexicon = [
        analytics.diversity_counts(case_db, code).new_concepts
        for code in case_db.lexicons
    ]
    assert sum(per_lexicon) == len(case_db.merged_from) == 22


def test_extended_universe_contains_base(case_db):
    base = analytics.resolve_universe(case_db, "base")
    extended = analytics.resolve_universe(case_db, "extended")
    assert base <= extended
    assert len(base) == 184 and len(extended) == 206


def test_single_lexicon_matrix():
    db = db_with_sets({"aaa": span(0, 5)}, 10)
    matrix = analytics.overlap_matrix(db, ["aaa"])
    assert matrix.cells == ((1.0,),)
    assert matrix.percent_cells() == [["100.0"]]


def test_banjarese_new_concepts_attributed(case_db):
    counts = analytics.diversity_counts(case_db, "bjn", "extended")
    assert counts.new_concepts == 3
    assert analytics.diversity_counts(case_db, "ind").new_concepts == 0


def test_bad_universe_string_rejected():
    db = db_with_sets({"aaa": span(0, 3)}, 5)
    with pytest.raises(Exception) as err:
        analytics.diversity_counts(db, "aaa", universe="Bogus")
    assert "universe" in str(err.value)
