"""Reconstruction of the two kinship case studies as a runnable dataset.

Builds a database holding ten lexicons — seven Arabic dialects and three
languages of Indonesia — by driving the full contribution workflow:
task generation, filled contribution sheets, two-tier validation,
integration, and new-concept merging with cross-lexicon deduplication.

Per-lexicon word counts, the per-subdomain totals, the new-concept tallies
(19 Arabic + 3 Indonesian), and the Egyptian/Gulf lexicalization overlap of
the published study are reproduced exactly. Which concepts each lexicon
lexicalizes, and most lemmas, are placeholders: each lexicon takes the first
n concepts of every subdomain, which pins every pairwise intersection.
Lemmas quoted from the source dictionaries are used where known.
"""

from __future__ import annotations

from pathlib import Path

from . import workflow as wf
from .model import Database
from .store import (
    export_contribution_sheet,
    import_concept_scaffold,
    import_contribution_sheet,
    parse_contribution_sheet,
)

SUBDOMAINS = (
    "grandparents",
    "grandchildren",
    "siblings",
    "uncle-aunt",
    "nephew-niece",
    "cousins",
)

ARABIC = ("arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-syr", "arb-tun", "arb-glf")
INDONESIAN = ("ind", "jav", "bjn")

DISPLAY_NAMES = {
    "arb-alg": "Algerian Arabic",
    "arb-egy": "Egyptian Arabic",
    "arb-mor": "Moroccan Arabic",
    "arb-pal": "Palestinian Arabic",
    "arb-syr": "Syrian Arabic",
    "arb-tun": "Tunisian Arabic",
    "arb-glf": "Gulf Arabic",
    "ind": "Indonesian",
    "jav": "Javanese",
    "bjn": "Banjarese",
}

# words contributed per (lexicon, subdomain); row sums are the per-lexicon
# word totals and column sums the per-subdomain totals of the study
WORD_COUNTS = {
    "arb-alg": (2, 2, 4, 6, 6, 8),
    "arb-egy": (3, 3, 4, 4, 2, 16),
    "arb-mor": (2, 2, 3, 5, 4, 6),
    "arb-pal": (2, 2, 4, 5, 3, 7),
    "arb-syr": (2, 2, 4, 5, 3, 8),
    "arb-tun": (2, 2, 4, 4, 4, 7),
    "arb-glf": (1, 2, 3, 5, 5, 12),
    "ind": (2, 1, 4, 2, 1, 1),
    "jav": (3, 2, 4, 5, 3, 1),
    "bjn": (2, 1, 3, 3, 2, 1),
}

# accepted new concepts: id, subdomain, lemma, definition, placement parents,
# and the lexicons that proposed the meaning (processed in study order, so
# the first lexicon listed in study order is credited as proposer)
NEW_CONCEPTS = [
    ("breastfeeding-brother", "siblings", "أخ في الرضاعة",
     "a male person nursed by the same woman as another person",
     ("brother",), {"arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-syr", "arb-tun", "arb-glf"}),
    ("breastfeeding-sister", "siblings", "أخت في الرضاعة",
     "a female person nursed by the same woman as another person",
     ("sister",), {"arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-syr", "arb-glf"}),
    ("paternal-brother", "siblings", "أخ لأب",
     "a brother sharing only the father with you",
     ("half-brother",), {"arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-syr", "arb-glf"}),
    ("maternal-brother", "siblings", "أخ لأم",
     "a brother sharing only the mother with you",
     ("half-brother",), {"arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-syr", "arb-glf"}),
    ("paternal-sister", "siblings", "أخت لأب",
     "a sister sharing only the father with you",
     ("half-sister",), {"arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-syr", "arb-glf"}),
    ("maternal-sister", "siblings", "أخت لأم",
     "a sister sharing only the mother with you",
     ("half-sister",), {"arb-egy", "arb-syr"}),
    ("blood-brother", "siblings", "أخ بالدم",
     "a brother related by blood rather than by marriage or nursing",
     ("brother",), {"arb-alg", "arb-egy", "arb-pal", "arb-syr", "arb-glf"}),
    ("blood-sister", "siblings", "أخت بالدم",
     "a sister related by blood rather than by marriage or nursing",
     ("sister",), {"arb-alg", "arb-egy", "arb-glf"}),
    ("foster-brother", "siblings", "أخ بالتبني",
     "a male person raised as your sibling without blood relation",
     ("brother",), {"arb-alg", "arb-egy", "arb-pal"}),
    ("foster-sister", "siblings", "أخت بالتبني",
     "a female person raised as your sibling without blood relation",
     ("sister",), {"arb-alg", "arb-egy"}),
    ("eldest-grandson", "grandchildren", "كبير الأحفاد",
     "the oldest grandson",
     ("grandson",), {"arb-alg", "arb-egy", "arb-mor", "arb-pal", "arb-glf"}),
    ("eldest-granddaughter", "grandchildren", "كبيرة الأحفاد",
     "the oldest granddaughter",
     ("granddaughter",), {"arb-egy", "arb-mor", "arb-pal", "arb-glf"}),
    ("youngest-grandson", "grandchildren", "صغير الأحفاد",
     "the youngest grandson",
     ("grandson",), {"arb-egy", "arb-mor", "arb-pal", "arb-glf"}),
    ("youngest-granddaughter", "grandchildren", "صغيرة الأحفاد",
     "the youngest granddaughter",
     ("granddaughter",), {"arb-egy", "arb-mor", "arb-pal", "arb-glf"}),
    ("elder-mothers-brothers-son", "cousins", "أبيه",
     "an elder son of your mother's brother",
     ("mothers-brothers-son",), {"arb-egy"}),
    ("elder-mothers-sisters-daughter", "cousins", "أبله",
     "an elder daughter of your mother's sister",
     ("mothers-sisters-daughter",), {"arb-egy"}),
    ("elder-fathers-brothers-son", "cousins", "ابن العم الأكبر",
     "an elder son of your father's brother",
     ("fathers-brothers-son",), {"arb-egy", "arb-syr", "arb-pal", "arb-glf"}),
    ("elder-fathers-sisters-daughter", "cousins", "بنت العمة الكبرى",
     "an elder daughter of your father's sister",
     ("fathers-sisters-daughter",), {"arb-egy", "arb-syr", "arb-pal", "arb-glf"}),
    ("milk-cousin", "cousins", "ابن في الرضاعة",
     "a child of the woman who nursed you",
     ("cousin",), {"arb-egy", "arb-mor", "arb-syr", "arb-tun", "arb-pal", "arb-glf"}),
    ("parents-eldest-sibling", "uncle-aunt", "julak",
     "the eldest sibling of your parent",
     ("parents-elder-sibling",), {"bjn"}),
    ("parents-second-eldest-sibling", "uncle-aunt", "gulu",
     "the second eldest sibling of your parent",
     ("parents-elder-sibling",), {"bjn"}),
    ("parents-middle-elder-sibling", "uncle-aunt", "angah",
     "the middle elder sibling of your parent when the count is odd",
     ("parents-elder-sibling",), {"bjn"}),
]

STUDY_ORDER = ARABIC + INDONESIAN

STUDY_SET = {code: ARABIC if code in ARABIC else INDONESIAN for code in STUDY_ORDER}


def _scaffold_by_subdomain(db: Database) -> dict[str, list[str]]:
    table: dict[str, list[str]] = {name: [] for name in SUBDOMAINS}
    for concept in db.iter_concepts():
        if concept.id in db.merged_from:
            continue
        if concept.subdomain in table:
            table[concept.subdomain].append(concept.id)
    return table


def word_concepts_for(db: Database, code: str) -> list[str]:
    """The base concepts this lexicon lexicalizes: the first n of each
    subdomain. Prefix assignment makes every pairwise intersection the
    per-subdomain minimum, which pins the published Egyptian/Gulf overlap."""
    chosen: list[str] = []
    table = _scaffold_by_subdomain(db)
    for subdomain, count in zip(SUBDOMAINS, WORD_COUNTS[code]):
        chosen.extend(table[subdomain][:count])
    return chosen

def _lemma(code: str, concept_id: str) -> str:
    return f"{concept_id}_{code.rsplit('-', 1)[-1]}"


def build_filled_sheet(db: Database, code: str, task: wf.Task) -> str:
    """Answer every base row (word for the chosen prefix, gap otherwise),
    mark everything correct, and append the lexicon's new-concept proposal
    rows. Rows for concepts merged from other lexicons stay unanswered."""
    words = set(word_concepts_for(db, code))
    base = db.base_concept_ids()
    template = export_contribution_sheet(
        db, code, SUBDOMAINS, std_lang="arb" if code in ARABIC else "ind", task=task
    )
    _, rows = parse_contribution_sheet(template)
    by_subdomain: dict[str, list[str]] = {name: [] for name in SUBDOMAINS}
    for row in rows:
        if row.concept_id not in base:
            line = [row.concept_id, row.definition_std, row.definition_en] + [""] * 7
        elif row.concept_id in words:
            line = [row.concept_id, row.definition_std, row.definition_en,
                    "word", _lemma(code, row.concept_id), "", "correct", "", "", ""]
        else:
            line = [row.concept_id, row.definition_std, row.definition_en,
                    "gap", "", "", "correct", "", "", ""]
        by_subdomain[row.subdomain].append("\t".join(line))
    for concept_id, subdomain, lemma, definition, _, proposers in NEW_CONCEPTS:
        if code in proposers:
            line = [f"new:{concept_id}", "", definition,
                    "new-concept", lemma, "", "correct", "", "", ""]
            by_subdomain[subdomain].append("\t".join(line))
    lines = [f"# lexicon:{code}", f"# task:{task.id}"]
    for subdomain in SUBDOMAINS:
        lines.append(f"# subdomain:{subdomain}")
        lines.extend(by_subdomain[subdomain])
    return "\n".join(lines) + "\n"


def _resolve_proposals(db: Database, code: str, task: wf.Task) -> None:
    validator = task.concept_validator
    for concept_id, _, _, _, parents, proposers in NEW_CONCEPTS:
        if code not in proposers:
            continue
        placeholder = f"new:{concept_id}"
        if concept_id in db.concepts:
            # the meaning was already merged by an earlier lexicon
            wf.concept_review(
                db, task, placeholder,
                wf.ConceptVerdict.not_new(concept_id), actor=validator,
            )
            wf.lexicon_review(
                db, task, concept_id,
                wf.LexiconVerdict.correct(), actor=task.lexicon_validator,
            )
            wf.integrate(db, task, concept_id)
        else:
            wf.concept_review(
                db, task, placeholder, wf.ConceptVerdict.accept(), actor=validator
            )
            wf.merge_new_concept(
                db, task, placeholder, parents=parents, actor=validator,
                new_id=concept_id, promote=True, study_set=STUDY_SET[code],
            )


def build_case_study_db(scaffold_path: str | Path) -> Database:
    """Run both case studies end to end and return the populated database."""
    db = Database()
    import_concept_scaffold(db, scaffold_path)
    for code in STUDY_ORDER:
        db.add_lexicon(code, DISPLAY_NAMES[code])
    for code in STUDY_ORDER:
        task = generate_study_task(db, code)
        sheet = build_filled_sheet(db, code, task)
        report = import_contribution_sheet(db, task, sheet)
        if report.rows_rejected:
            rejected = [r for r in report.rows if r.status == "rejected"]
            raise RuntimeError(f"unexpected rejected rows for {code}: {rejected[:3]}")
        _resolve_proposals(db, code, task)
    return db


def generate_study_task(db: Database, code: str) -> wf.Task:
    return wf.generate_task(
        db,
        code,
        SUBDOMAINS,
        contributor=f"speaker-{code}",
        lexicon_validator=f"expert-{code}",
        concept_validator="concept-expert",
        task_id=f"task-{code}",
    )
