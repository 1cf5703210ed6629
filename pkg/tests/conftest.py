from __future__ import annotations

from pathlib import Path

import pytest

from lexidiv.casestudy import build_case_study_db
from lexidiv.model import Database
from lexidiv.store import import_concept_scaffold

ROOT = Path(__file__).resolve().parent.parent
SCAFFOLD = ROOT / "data" / "kinship_scaffold.tsv"

# Lexicalization pattern for the nine sibling meanings across eight world
# languages; None marks an asserted lexical gap.
TABLE1_LANGS = ("eng", "jpn", "arb", "ita", "ind", "hin", "hun", "jav")
TABLE1 = {
    "sibling": ("sibling", None, None, None, "saudara", "सहोदर", "testvér", "sedulur"),
    "elder-sibling": (None, None, None, None, "kakak", None, "nagytestvér", None),
    "younger-sibling": (None, None, None, None, "adik", None, "kistestvér", "adhi"),
    "brother": ("brother", None, "أخ", "fratello", None, "भैया", None, None),
    "sister": ("sister", None, "أُخْت", "sorella", None, "बहन", None, None),
    "elder-brother": (None, "あに", None, "fratellone", "abang", "भैया", "báty", "kangmas"),
    "elder-sister": (None, "あね", None, "sorellona", None, "दीदी", "nővér", "mbakyu"),
    "younger-brother": (None, "おとうと", None, "fratellino", None, "भाई", "öcs", None),
    "younger-sister": (None, "いもうと", None, "sorellina", None, "बहन", "húg", None),
}


def make_scaffold_db() -> Database:
    db = Database()
    import_concept_scaffold(db, SCAFFOLD)
    return db


def make_table1_db() -> Database:
    db = make_scaffold_db()
    for code in TABLE1_LANGS:
        db.add_lexicon(code)
    for concept, cells in TABLE1.items():
        for code, lemma in zip(TABLE1_LANGS, cells):
            if lemma is None:
                db.assert_gap(code, concept)
            else:
                db.assert_sense(code, concept, [lemma])
    return db


@pytest.fixture
def scaffold_db() -> Database:
    return make_scaffold_db()


@pytest.fixture
def table1_db() -> Database:
    return make_table1_db()


@pytest.fixture(scope="session")
def case_db() -> Database:
    return build_case_study_db(SCAFFOLD)


@pytest.fixture
def scaffold_path() -> Path:
    return SCAFFOLD
