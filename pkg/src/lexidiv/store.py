"""Persistence and interchange: versioned database documents, the concept
scaffold TSV, contribution sheets, and gap-matrix exports.

All file formats are UTF-8 text, NFC-normalized on read. Writes are atomic
(temp file + rename). The database document is JSON with a mandatory schema
version; saving is deterministic, so saving a loaded document again
reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import workflow as wf
from .errors import (
    CycleDetected,
    DuplicateId,
    IntegrityViolation,
    LexidivError,
    NoConceptsSelected,
    ParseError,
    RowConceptMismatch,
    SchemaVersionMismatch,
    UnknownTask,
)
from .model import (
    AssertionEvent,
    Concept,
    Database,
    Evidence,
    EvidenceKind,
    GapAssertion,
    Lexicon,
    Relation,
    RelationKind,
    Sense,
    nfc,
)

SHEET_COLUMNS = (
    "concept_id",
    "definition_std",
    "definition_en",
    "answer_type",
    "lemma",
    "contributor_comment",
    "validation",
    "validator_comment",
    "concept_eval",
    "concept_comment",
)


def _atomic_write(path: str | Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_text(path: str | Path) -> str:
    return nfc(Path(path).read_text(encoding="utf-8"))


# --- database document ----------------------------------------------------

def _evidence_to_doc(ev: Evidence) -> dict:
    doc = {"kind": ev.kind.value}
    for name in ("name", "query_with_diacritics", "hits_with", "query_without",
                 "hits_without", "total", "note"):
        value = getattr(ev, name)
        if value is not None:
            doc[name] = value
    return doc


def _evidence_from_doc(doc: dict) -> Evidence:
    return Evidence(kind=EvidenceKind(doc["kind"]),
                    **{k: v for k, v in doc.items() if k != "kind"})


def _answer_to_doc(answer: Optional[wf.Answer]) -> Optional[dict]:
    if answer is None:
        return None
    return {
        "kind": answer.kind.value,
        "lemma": answer.lemma,
        "definition": answer.definition,
        "comment": answer.comment,
        "evidence": [_evidence_to_doc(e) for e in answer.evidence],
    }


def _answer_from_doc(doc: Optional[dict]) -> Optional[wf.Answer]:
    if doc is None:
        return None
    return wf.Answer(
        kind=wf.AnswerKind(doc["kind"]),
        lemma=doc.get("lemma"),
        definition=doc.get("definition"),
        comment=doc.get("comment"),
        evidence=tuple(_evidence_from_doc(e) for e in doc.get("evidence", [])),
    )


def _item_to_doc(item: wf.ContributionItem) -> dict:
    return {
        "concept": item.concept,
        "state": item.state.value,
        "answer": _answer_to_doc(item.answer),
        "history": [
            {
                "seq": h.seq,
                "at": h.at,
                "actor": h.actor,
                "transition": h.transition,
                "comment": h.comment,
                "detail": h.detail,
            }
            for h in item.history
        ],
        "revision_count": item.revision_count,
        "subdomain": item.subdomain,
        "pending_correction": _answer_to_doc(item.pending_correction),
    }


def _item_from_doc(doc: dict) -> wf.ContributionItem:
    return wf.ContributionItem(
        concept=doc["concept"],
        state=wf.ItemState(doc["state"]),
        answer=_answer_from_doc(doc.get("answer")),
        history=[
            wf.HistoryEntry(
                seq=h["seq"],
                at=h["at"],
                actor=h["actor"],
                transition=h["transition"],
                comment=h.get("comment"),
                detail=h.get("detail", {}),
            )
            for h in doc.get("history", [])
        ],
        revision_count=doc.get("revision_count", 0),
        subdomain=doc.get("subdomain"),
        pending_correction=_answer_from_doc(doc.get("pending_correction")),
    )


def db_to_doc(db: Database) -> dict:
    """Canonical document form; two semantically equal databases map to the
    same document."""
    return {
        "format": "lexdb",
        "version": Database.SCHEMA_VERSION,
        "concepts": [
            {
                "id": c.id,
                "gloss_en": c.gloss_en,
                "gloss_std": c.gloss_std,
                "subdomain": c.subdomain,
                "origin": c.origin,
                "parents": list(c.parents),
            }
            for c in db.concepts.values()
        ],
        "lexicons": [
            {
                "code": lex.code,
                "display_name": lex.display_name,
                "senses": [
                    {
                        "concept": s.concept,
                        "lemmas": list(s.lemmas),
                        "definition": s.definition,
                        "pos": s.pos,
                    }
                    for _, s in sorted(lex.senses.items())
                ],
                "gaps": [
                    {
                        "concept": g.concept,
                        "evidence": [_evidence_to_doc(e) for e in g.evidence],
                    }
                    for _, g in sorted(lex.gaps.items())
                ],
            }
            for lex in db.lexicons.values()
        ],
        "relations": [
            {"kind": r.kind.value, "source": r.source, "target": r.target}
            for r in db.relations
        ],
        "assertion_log": [
            {
                "seq": e.seq,
                "op": e.op,
                "lexicon": e.lexicon,
                "concept": e.concept,
                "lemmas": list(e.lemmas),
            }
            for e in db.assertion_log
        ],
        "retired_ids": sorted(db.retired_ids),
        "merged_from": dict(sorted(db.merged_from.items())),
        "tasks": [
            {
                "id": t.id,
                "lexicon": t.lexicon,
                "subdomains": list(t.subdomains),
                "contributor": t.contributor,
                "lexicon_validator": t.lexicon_validator,
                "concept_validator": t.concept_validator,
                "max_cycles": t.max_cycles,
                "items": [_item_to_doc(i) for i in t.items],
            }
            for t in db.tasks.values()
        ],
    }


def db_from_doc(doc: dict) -> Database:
    if doc.get("format") != "lexdb" or "version" not in doc:
        raise SchemaVersionMismatch("not a lexdb document")
    if doc["version"] != Database.SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"schema version {doc['version']} unsupported "
            f"(expected {Database.SCHEMA_VERSION})"
        )
    db = Database()
    concept_docs = doc.get("concepts", [])
    known = {c["id"] for c in concept_docs}
    if len(known) != len(concept_docs):
        raise IntegrityViolation("duplicate concept ids in document")
    for c in concept_docs:
        for parent in c.get("parents", []):
            if parent not in known:
                raise IntegrityViolation(
                    f"concept {c['id']!r} references unknown parent {parent!r}"
                )
        db.concepts[c["id"]] = Concept(
            id=c["id"],
            gloss_en=c.get("gloss_en", ""),
            gloss_std=c.get("gloss_std"),
            subdomain=c.get("subdomain", "other"),
            origin=c.get("origin"),
            parents=tuple(c.get("parents", [])),
        )
    for c in db.concepts.values():
        db._children.setdefault(c.id, set())
        for parent in c.parents:
            db._children.setdefault(parent, set()).add(c.id)
    _check_acyclic(db)

    for lex_doc in doc.get("lexicons", []):
        lex = Lexicon(code=lex_doc["code"],
                      display_name=lex_doc.get("display_name", lex_doc["code"]))
        for s in lex_doc.get("senses", []):
            if s["concept"] not in known:
                raise IntegrityViolation(
                    f"sense in {lex.code!r} references unknown concept {s['concept']!r}"
                )
            lex.senses[s["concept"]] = Sense(
                lexicon=lex.code,
                concept=s["concept"],
                lemmas=tuple(s.get("lemmas", [])),
                definition=s.get("definition"),
                pos=s.get("pos"),
            )
        for g in lex_doc.get("gaps", []):
            if g["concept"] not in known:
                raise IntegrityViolation(
                    f"gap in {lex.code!r} references unknown concept {g['concept']!r}"
                )
            if g["concept"] in lex.senses:
                raise IntegrityViolation(
                    f"({lex.code}, {g['concept']}) asserted both as sense and gap"
                )
            lex.gaps[g["concept"]] = GapAssertion(
                lexicon=lex.code,
                concept=g["concept"],
                evidence=tuple(_evidence_from_doc(e) for e in g.get("evidence", [])),
            )
        db.lexicons[lex.code] = lex

    for r in doc.get("relations", []):
        if r["source"] not in known or r["target"] not in known:
            raise IntegrityViolation("relation references unknown concept")
        db.relations.append(
            Relation(RelationKind(r["kind"]), r["source"], r["target"])
        )
    for e in doc.get("assertion_log", []):
        db.assertion_log.append(
            AssertionEvent(
                seq=e["seq"], op=e["op"], lexicon=e["lexicon"],
                concept=e["concept"], lemmas=tuple(e.get("lemmas", [])),
            )
        )
    db.retired_ids = set(doc.get("retired_ids", []))
    for concept_id, proposer in doc.get("merged_from", {}).items():
        if concept_id not in known:
            raise IntegrityViolation(
                f"merge record references unknown concept {concept_id!r}"
            )
        db.merged_from[concept_id] = proposer
    for t in doc.get("tasks", []):
        task = wf.Task(
            id=t["id"],
            lexicon=t["lexicon"],
            subdomains=tuple(t.get("subdomains", [])),
            contributor=t["contributor"],
            lexicon_validator=t["lexicon_validator"],
            concept_validator=t["concept_validator"],
            max_cycles=t.get("max_cycles"),
            items=[_item_from_doc(i) for i in t.get("items", [])],
        )
        for item in task.items:
            if item.concept not in known and not item.concept.startswith(
                wf.NEW_CONCEPT_PREFIX
            ):
                raise IntegrityViolation(
                    f"task {task.id!r} references unknown concept {item.concept!r}"
                )
        db.tasks[task.id] = task
    return db


def _check_acyclic(db: Database) -> None:
    indegree = {c: len(db.concepts[c].parents) for c in db.concepts}
    queue = [c for c, d in indegree.items() if d == 0]
    visited = 0
    while queue:
        node = queue.pop()
        visited += 1
        for child in db._children.get(node, ()):
            indegree[child] -= 1
            if indegree[child] == 0:
                queue.append(child)
    if visited != len(db.concepts):
        raise IntegrityViolation("hypernym graph in document contains a cycle")


def save_lexdb(db: Database, path: str | Path) -> None:
    text = json.dumps(db_to_doc(db), ensure_ascii=False, indent=2, sort_keys=True)
    _atomic_write(path, text + "\n")


def load_lexdb(path: str | Path) -> Database:
    try:
        doc = json.loads(_read_text(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid database document: {e}") from e
    return db_from_doc(doc)


# --- concept scaffold ------------------------------------------------------

@dataclass(frozen=True)
class ScaffoldReport:
    concepts_added: int
    per_subdomain_counts: dict[str, int]


def import_concept_scaffold(db: Database, path: str | Path) -> ScaffoldReport:
    """Load the concept hierarchy from a TSV of
    ``id<TAB>subdomain<TAB>gloss_en<TAB>gloss_std<TAB>parents`` rows
    (parents comma-separated, forward references allowed)."""
    rows: list[tuple[int, Concept]] = []
    seen: dict[str, int] = {}
    for line_no, line in enumerate(_read_text(path).splitlines(), start=1):
        stripped = line.strip("\n")
        if not stripped.strip() or stripped.lstrip().startswith("#"):
            continue
        fields = stripped.split("\t")
        if fields[0] == "id":
            continue  # optional header row
        if len(fields) < 3:
            raise ParseError("expected at least id, subdomain, gloss_en", line_no)
        while len(fields) < 5:
            fields.append("")
        concept_id, subdomain, gloss_en, gloss_std, parents_field = fields[:5]
        concept_id = concept_id.strip()
        if not concept_id:
            raise ParseError("empty concept id", line_no)
        if concept_id in seen or concept_id in db.concepts:
            raise DuplicateId(f"line {line_no}: duplicate concept id {concept_id!r}")
        seen[concept_id] = line_no
        parents = tuple(
            p.strip() for p in parents_field.split(",") if p.strip()
        )
        rows.append(
            (
                line_no,
                Concept(
                    id=concept_id,
                    gloss_en=gloss_en.strip(),
                    gloss_std=gloss_std.strip() or None,
                    subdomain=subdomain.strip() or "other",
                    parents=parents,
                ),
            )
        )

    for line_no, concept in rows:
        for parent in concept.parents:
            if parent not in seen and parent not in db.concepts:
                raise ParseError(f"unknown parent {parent!r}", line_no)

    # insert in dependency order; anything left over is a cycle
    remaining = {c.id: (line_no, c) for line_no, c in rows}
    progress = True
    counts: dict[str, int] = {}
    added = 0
    while remaining and progress:
        progress = False
        for concept_id in list(remaining):
            _, concept = remaining[concept_id]
            if all(p in db.concepts for p in concept.parents):
                db.add_concept(concept)
                counts[concept.subdomain] = counts.get(concept.subdomain, 0) + 1
                added += 1
                del remaining[concept_id]
                progress = True
    if remaining:
        stuck = ", ".join(sorted(remaining))
        raise CycleDetected(f"scaffold rows form a hypernym cycle: {stuck}")
    return ScaffoldReport(concepts_added=added, per_subdomain_counts=counts)


# --- contribution sheets -----------------------------------------------------

@dataclass(frozen=True)
class SheetRow:
    line: int
    subdomain: Optional[str]
    concept_id: str
    definition_std: str
    definition_en: str
    answer_type: str
    lemma: str
    contributor_comment: str
    validation: str
    validator_comment: str
    concept_eval: str
    concept_comment: str


def export_contribution_sheet(
    db: Database,
    lexicon: str,
    subdomains: Sequence[str],
    std_lang: str = "eng",
    task: wf.Task | None = None,
    path: str | Path | None = None,
) -> str:
    """One section per subdomain, one row per concept the lexicon has not
    resolved yet; answer and validation columns are left empty for the
    contributor and the validators."""
    lex = db.lexicon(lexicon)
    wanted = tuple(dict.fromkeys(subdomains))
    if not wanted:
        raise NoConceptsSelected("no subdomains selected")
    if not any(c.subdomain in wanted for c in db.iter_concepts()):
        raise NoConceptsSelected(f"no concepts in subdomains {', '.join(wanted)}")
    lines = [f"# lexicon:{lexicon}", f"# std_lang:{std_lang}"]
    if task is not None:
        lines.append(f"# task:{task.id}")
    lines.append("# columns:" + "\t".join(SHEET_COLUMNS))
    for subdomain in wanted:
        lines.append(f"# subdomain:{subdomain}")
        for concept in db.iter_concepts():
            if concept.subdomain != subdomain:
                continue
            if concept.id in lex.senses or concept.id in lex.gaps:
                continue
            # dialects without a written standard fall back to the English gloss
            definition_std = concept.gloss_std or concept.gloss_en
            lines.append(
                "\t".join(
                    [concept.id, definition_std, concept.gloss_en] + [""] * 7
                )
            )
    text = "\n".join(lines) + "\n"
    if path is not None:
        _atomic_write(path, text)
    return text


def parse_contribution_sheet(text: str) -> tuple[dict, list[SheetRow]]:
    """Returns (metadata, rows). Metadata keys come from ``# key:value``
    lines; ``# subdomain:`` switches the current section."""
    meta: dict = {}
    rows: list[SheetRow] = []
    subdomain: Optional[str] = None
    for line_no, line in enumerate(nfc(text).splitlines(), start=1):
        if not line.strip():
            continue
        if line.lstrip().startswith("#"):
            body = line.lstrip()[1:].strip()
            key, sep, value = body.partition(":")
            if sep:
                key = key.strip()
                if key == "subdomain":
                    subdomain = value.strip()
                elif key != "columns":
                    meta[key] = value.strip()
            continue
        fields = line.split("\t")
        if len(fields) > len(SHEET_COLUMNS):
            raise ParseError(
                f"expected at most {len(SHEET_COLUMNS)} columns, got {len(fields)}",
                line_no,
            )
        fields += [""] * (len(SHEET_COLUMNS) - len(fields))
        stripped = [f.strip() for f in fields]
        if not stripped[0]:
            raise ParseError("row without concept_id", line_no)
        rows.append(SheetRow(line_no, subdomain, *stripped))
    return meta, rows


@dataclass(frozen=True)
class RowResult:
    line: int
    concept: str
    status: str  # "applied" | "unchanged" | "rejected"
    reason: Optional[str] = None
    transitions: tuple[str, ...] = ()


@dataclass
class SheetImportReport:
    rows: list[RowResult] = field(default_factory=list)

    @property
    def rows_total(self) -> int:
        return len(self.rows)

    @property
    def rows_applied(self) -> int:
        return sum(1 for r in self.rows if r.status == "applied")

    @property
    def rows_unchanged(self) -> int:
        return sum(1 for r in self.rows if r.status == "unchanged")

    @property
    def rows_rejected(self) -> int:
        return sum(1 for r in self.rows if r.status == "rejected")


_ANSWER_TYPES = {"", "word", "gap", "skip", "new-concept"}
_VALIDATIONS = {"", "correct", "incorrect", "unclear"}


def _row_answer(row: SheetRow) -> Optional[wf.Answer]:
    if not row.answer_type:
        return None
    if row.answer_type == "word":
        return wf.Answer.word(row.lemma, comment=row.contributor_comment or None)
    if row.answer_type == "gap":
        return wf.Answer.gap(comment=row.contributor_comment or None)
    if row.answer_type == "skip":
        return wf.Answer.skip(comment=row.contributor_comment or None)
    return wf.Answer.new_concept(
        row.lemma,
        definition=row.definition_en or row.definition_std,
        comment=row.contributor_comment or None,
    )


def _same_answer(a: Optional[wf.Answer], b: Optional[wf.Answer]) -> bool:
    if a is None or b is None:
        return a is b
    return (a.kind, a.lemma, a.definition) == (b.kind, b.lemma, b.definition)


def _last_verdict(item: wf.ContributionItem, transition: str) -> Optional[str]:
    for entry in reversed(item.history):
        if entry.transition == transition:
            return entry.detail.get("verdict")
    return None


def import_contribution_sheet(
    db: Database,
    task: wf.Task,
    text: str,
    auto_integrate: bool = True,
) -> SheetImportReport:
    """Replay every row with new content through the workflow state machine.

    Valid transitions are applied (answers, then lexicon verdicts, then
    concept verdicts); rows that repeat already-applied content are reported
    unchanged, so re-importing a sheet is a no-op; invalid rows are reported
    rejected with a reason and do not stop the rest of the sheet. Correct
    words and gaps are integrated on the fly when ``auto_integrate`` is on.
    """
    meta, rows = parse_contribution_sheet(text)
    if "task" in meta and meta["task"] != task.id:
        raise UnknownTask(f"sheet was exported for task {meta['task']!r}, not {task.id!r}")
    if "lexicon" in meta and meta["lexicon"] != task.lexicon:
        raise UnknownTask(
            f"sheet is for lexicon {meta['lexicon']!r}, task is for {task.lexicon!r}"
        )
    report = SheetImportReport()
    for row in rows:
        report.rows.append(_apply_row(db, task, row, auto_integrate))
    return report


def _apply_row(
    db: Database, task: wf.Task, row: SheetRow, auto_integrate: bool
) -> RowResult:
    if row.answer_type not in _ANSWER_TYPES:
        return RowResult(row.line, row.concept_id, "rejected",
                         reason=f"unknown answer type {row.answer_type!r}")
    if row.validation not in _VALIDATIONS:
        return RowResult(row.line, row.concept_id, "rejected",
                         reason=f"unknown validation {row.validation!r}")
    if row.validation and not row.answer_type:
        return RowResult(row.line, row.concept_id, "rejected",
                         reason="validation requires an answer")
    if row.concept_eval and not row.answer_type:
        return RowResult(row.line, row.concept_id, "rejected",
                         reason="concept_eval requires an answer")

    item = task.find(row.concept_id)
    if item is None and row.answer_type != "new-concept":
        return RowResult(row.line, row.concept_id, "rejected",
                         reason=RowConceptMismatch.code)

    transitions: list[str] = []
    try:
        answer = _row_answer(row)
        if answer is not None:
            if item is not None and _same_answer(item.answer, answer):
                pass  # already recorded
            else:
                wf.submit_answer(
                    db, task, row.concept_id, answer, actor=task.contributor,
                    subdomain=row.subdomain,
                )
                item = task.find(row.concept_id)
                transitions.append("answer")

        if row.validation:
            assert item is not None
            if item.state in wf.LEXICON_REVIEW_STATES:
                verdict = _row_lexicon_verdict(row)
                wf.lexicon_review(db, task, row.concept_id, verdict,
                                  actor=task.lexicon_validator)
                transitions.append("lexicon-review")
                if (
                    auto_integrate
                    and item.state is wf.ItemState.LEXICON_APPROVED
                ):
                    wf.integrate(db, task, row.concept_id)
                    transitions.append("integrate")
            elif _last_verdict(item, "lexicon-review") != row.validation:
                return RowResult(row.line, row.concept_id, "rejected",
                                 reason="validation in wrong state",
                                 transitions=tuple(transitions))

        if row.concept_eval:
            assert item is not None
            kind, _, existing = row.concept_eval.partition(":")
            if item.state is wf.ItemState.IN_CONCEPT_REVIEW:
                verdict = _row_concept_verdict(kind, existing, row)
                wf.concept_review(db, task, row.concept_id, verdict,
                                  actor=task.concept_validator)
                transitions.append("concept-review")
            elif _last_verdict(item, "concept-review") != _CONCEPT_EVAL_MAP.get(kind):
                return RowResult(row.line, row.concept_id, "rejected",
                                 reason="concept_eval in wrong state",
                                 transitions=tuple(transitions))
    except LexidivError as exc:
        return RowResult(row.line, row.concept_id, "rejected", reason=exc.code,
                         transitions=tuple(transitions))

    if transitions:
        return RowResult(row.line, row.concept_id, "applied",
                         transitions=tuple(transitions))
    return RowResult(row.line, row.concept_id, "unchanged")


_CONCEPT_EVAL_MAP = {
    "accept": wf.ConceptVerdictKind.ACCEPT.value,
    "not-new": wf.ConceptVerdictKind.CORRECT_BUT_NOT_NEW.value,
    "reject": wf.ConceptVerdictKind.NOT_ACCEPTED.value,
}


def _row_lexicon_verdict(row: SheetRow) -> wf.LexiconVerdict:
    comment = row.validator_comment or None
    if row.validation == "correct":
        return wf.LexiconVerdict.correct(comment)
    if row.validation == "incorrect":
        return wf.LexiconVerdict.incorrect(comment or "marked incorrect in sheet")
    return wf.LexiconVerdict.unclear(comment)


def _row_concept_verdict(kind: str, existing: str, row: SheetRow) -> wf.ConceptVerdict:
    comment = row.concept_comment or None
    if kind == "accept":
        return wf.ConceptVerdict.accept(comment)
    if kind == "not-new":
        return wf.ConceptVerdict.not_new(existing.strip(), comment)
    if kind == "reject":
        return wf.ConceptVerdict.not_accepted(comment or "rejected in sheet")
    raise ParseError(f"unknown concept_eval {kind!r}", row.line)


# --- gap matrix -------------------------------------------------------------

def export_gap_matrix(
    db: Database,
    concepts: Sequence[str],
    lexicons: Sequence[str],
    path: str | Path | None = None,
) -> str:
    """Concept-by-language table: first lemma for a lexicalization, GAP for
    an asserted gap, ? for a pair nobody has examined."""
    for code in lexicons:
        db.lexicon(code)
    lines = ["\t".join(["concept"] + list(lexicons))]
    for concept_id in concepts:
        db.concept(concept_id)
        cells = []
        for code in lexicons:
            status = db.status(code, concept_id)
            if status.sense is not None:
                cells.append(status.sense.lemmas[0])
            elif status.gap is not None:
                cells.append("GAP")
            else:
                cells.append("?")
        lines.append("\t".join([concept_id] + cells))
    text = "\n".join(lines) + "\n"
    if path is not None:
        _atomic_write(path, text)
    return text
