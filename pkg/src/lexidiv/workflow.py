"""Contribution/validation workflow as an auditable state machine.

One task = one lexicon x a set of subdomains, answered concept-by-concept by
a native-speaker contributor, then reviewed in two tiers: a lexicon-level
validator (correct / incorrect / unclear) and a concept-level validator
(accept / correct-but-not-new / not accepted). Every transition appends to an
immutable per-item history; replaying the history reconstructs the state.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    EmptySelection,
    InvalidAnswer,
    MissingComment,
    RetargetConflict,
    ReviewIncomplete,
    UnknownConcept,
    UnknownExistingConcept,
    UnknownLexicon,
    WrongActor,
    WrongState,
)
from .model import Concept, Database, Evidence, nfc

NEW_CONCEPT_PREFIX = "new:"


class AnswerKind(str, Enum):
    WORD = "word"
    GAP = "gap"
    SKIP = "skip"
    NEW_CONCEPT = "new-concept"


@dataclass(frozen=True)
class Answer:
    kind: AnswerKind
    lemma: Optional[str] = None
    definition: Optional[str] = None
    comment: Optional[str] = None
    evidence: tuple[Evidence, ...] = ()

    @classmethod
    def word(cls, lemma: str, evidence: Sequence[Evidence] = (), comment: str | None = None) -> "Answer":
        return cls(AnswerKind.WORD, lemma=nfc(lemma), evidence=tuple(evidence), comment=comment)

    @classmethod
    def gap(cls, evidence: Sequence[Evidence] = (), comment: str | None = None) -> "Answer":
        return cls(AnswerKind.GAP, evidence=tuple(evidence), comment=comment)

    @classmethod
    def skip(cls, comment: str | None = None) -> "Answer":
        return cls(AnswerKind.SKIP, comment=comment)

    @classmethod
    def new_concept(
        cls,
        lemma: str,
        definition: str,
        evidence: Sequence[Evidence] = (),
        comment: str | None = None,
    ) -> "Answer":
        return cls(
            AnswerKind.NEW_CONCEPT,
            lemma=nfc(lemma),
            definition=nfc(definition),
            evidence=tuple(evidence),
            comment=comment,
        )


class ItemState(str, Enum):
    PENDING = "pending"
    ANSWERED = "answered"
    IN_LEXICON_REVIEW = "in-lexicon-review"
    NEEDS_REVISION = "needs-revision"
    LEXICON_APPROVED = "lexicon-approved"
    IN_CONCEPT_REVIEW = "in-concept-review"
    INTEGRATED = "integrated"
    SKIPPED = "skipped"
    REJECTED = "rejected"


TERMINAL_STATES = frozenset(
    {ItemState.INTEGRATED, ItemState.SKIPPED, ItemState.REJECTED}
)

ANSWER_STATES = frozenset({ItemState.PENDING, ItemState.NEEDS_REVISION})
LEXICON_REVIEW_STATES = frozenset({ItemState.ANSWERED, ItemState.IN_LEXICON_REVIEW})


class LexiconVerdictKind(str, Enum):
    CORRECT = "correct"
    INCORRECT = "incorrect"
    UNCLEAR = "unclear"


@dataclass(frozen=True)
class LexiconVerdict:
    kind: LexiconVerdictKind
    comment: Optional[str] = None
    # optional replacement the validator proposes for an incorrect answer;
    # applied only when the contributor resubmits with it
    correction: Optional[Answer] = None

    @classmethod
    def correct(cls, comment: str | None = None) -> "LexiconVerdict":
        return cls(LexiconVerdictKind.CORRECT, comment=comment)

    @classmethod
    def incorrect(cls, comment: str, correction: Answer | None = None) -> "LexiconVerdict":
        return cls(LexiconVerdictKind.INCORRECT, comment=comment, correction=correction)

    @classmethod
    def unclear(cls, comment: str | None = None) -> "LexiconVerdict":
        return cls(LexiconVerdictKind.UNCLEAR, comment=comment)


class ConceptVerdictKind(str, Enum):
    ACCEPT = "accept"
    CORRECT_BUT_NOT_NEW = "correct-but-not-new"
    NOT_ACCEPTED = "not-accepted"


@dataclass(frozen=True)
class ConceptVerdict:
    kind: ConceptVerdictKind
    existing: Optional[str] = None
    comment: Optional[str] = None
    # a final rejection ends the revision cycle instead of returning the item
    final: bool = False

    @classmethod
    def accept(cls, comment: str | None = None) -> "ConceptVerdict":
        return cls(ConceptVerdictKind.ACCEPT, comment=comment)

    @classmethod
    def not_new(cls, existing: str, comment: str | None = None) -> "ConceptVerdict":
        return cls(ConceptVerdictKind.CORRECT_BUT_NOT_NEW, existing=existing, comment=comment)

    @classmethod
    def not_accepted(cls, comment: str, final: bool = False) -> "ConceptVerdict":
        return cls(ConceptVerdictKind.NOT_ACCEPTED, comment=comment, final=final)


@dataclass(frozen=True)
class HistoryEntry:
    seq: int
    at: float
    actor: str
    transition: str
    comment: Optional[str] = None
    detail: dict = field(default_factory=dict)


@dataclass
class ContributionItem:
    concept: str
    state: ItemState = ItemState.PENDING
    answer: Optional[Answer] = None
    history: list[HistoryEntry] = field(default_factory=list)
    revision_count: int = 0
    subdomain: Optional[str] = None  # set for new-concept proposals
    pending_correction: Optional[Answer] = None

    def first_lexicon_verdict(self) -> Optional[HistoryEntry]:
        for entry in self.history:
            if entry.transition == "lexicon-review":
                return entry
        return None


@dataclass
class Task:
    id: str
    lexicon: str
    subdomains: tuple[str, ...]
    contributor: str
    lexicon_validator: str
    concept_validator: str
    items: list[ContributionItem] = field(default_factory=list)
    max_cycles: Optional[int] = None

    def item(self, concept: str) -> ContributionItem:
        for item in self.items:
            if item.concept == concept:
                return item
        raise UnknownConcept(f"task {self.id!r} has no item for {concept!r}")

    def find(self, concept: str) -> Optional[ContributionItem]:
        for item in self.items:
            if item.concept == concept:
                return item
        return None


@dataclass(frozen=True)
class MergeResult:
    new_id: str
    origin: Optional[str]
    followups: tuple[tuple[str, str], ...]  # (task id, lexicon) pairs


@dataclass(frozen=True)
class CorrectnessReport:
    word_total: int
    word_correct: int
    gap_total: int
    gap_correct: int

    @property
    def word_correctness(self) -> Optional[float]:
        return self.word_correct / self.word_total if self.word_total else None

    @property
    def gap_correctness(self) -> Optional[float]:
        return self.gap_correct / self.gap_total if self.gap_total else None


def _now(at: float | None) -> float:
    return time.time() if at is None else at


def _log(item: ContributionItem, actor: str, transition: str,
         comment: str | None = None, detail: dict | None = None,
         at: float | None = None) -> None:
    item.history.append(
        HistoryEntry(
            seq=len(item.history),
            at=_now(at),
            actor=actor,
            transition=transition,
            comment=comment,
            detail=detail or {},
        )
    )


def _require_state(item: ContributionItem, allowed) -> None:
    if item.state not in allowed:
        raise WrongState(
            f"item {item.concept!r} is {item.state.value}; transition needs "
            + " or ".join(sorted(s.value for s in allowed))
        )


def _require_actor(actual: str, expected: str, role: str) -> None:
    if actual != expected:
        raise WrongActor(f"{role} is {expected!r}, not {actual!r}")


def generate_task(
    db: Database,
    lexicon: str,
    subdomains: Sequence[str],
    contributor: str,
    lexicon_validator: str,
    concept_validator: str,
    task_id: str | None = None,
    max_cycles: int | None = None,
) -> Task:
    """One pending item per concept of the chosen subdomains that the lexicon
    has not resolved yet (no sense, no gap)."""
    if lexicon not in db.lexicons:
        raise UnknownLexicon(f"unknown lexicon {lexicon!r}")
    if contributor in (lexicon_validator, concept_validator):
        raise WrongActor("validators must be distinct from the contributor")
    wanted = tuple(dict.fromkeys(subdomains))
    if not wanted:
        raise EmptySelection("no subdomains selected")
    lex = db.lexicons[lexicon]
    pending = [
        c.id
        for c in db.iter_concepts()
        if c.subdomain in wanted
        and c.id not in lex.senses
        and c.id not in lex.gaps
    ]
    if not pending:
        raise EmptySelection(
            f"nothing left to collect for {lexicon!r} in {', '.join(wanted)}"
        )
    task_id = task_id or f"t{len(db.tasks) + 1:03d}"
    task = Task(
        id=task_id,
        lexicon=lexicon,
        subdomains=wanted,
        contributor=contributor,
        lexicon_validator=lexicon_validator,
        concept_validator=concept_validator,
        items=[ContributionItem(concept=c) for c in pending],
        max_cycles=max_cycles,
    )
    db.tasks[task_id] = task
    return task


def _check_answer(answer: Answer) -> None:
    if answer.kind is AnswerKind.WORD and not (answer.lemma or "").strip():
        raise InvalidAnswer("word answers need a lemma")
    if answer.kind is AnswerKind.NEW_CONCEPT:
        if not (answer.lemma or "").strip():
            raise InvalidAnswer("new-concept proposals need a lemma")
        if not (answer.definition or "").strip():
            raise InvalidAnswer("new-concept proposals need a definition")


def submit_answer(
    db: Database,
    task: Task,
    concept: str,
    answer: Answer,
    actor: str,
    subdomain: str | None = None,
    at: float | None = None,
) -> ItemState:
    """Contributor answers one concept: a word, a gap, a skip, or a
    new-concept proposal. Proposals use a fresh ``new:`` placeholder id and
    create their own item."""
    _require_actor(actor, task.contributor, "contributor")
    _check_answer(answer)
    item = task.find(concept)
    if item is None:
        if answer.kind is not AnswerKind.NEW_CONCEPT:
            raise UnknownConcept(f"task {task.id!r} has no item for {concept!r}")
        if not concept.startswith(NEW_CONCEPT_PREFIX):
            raise InvalidAnswer(
                f"new-concept proposals need a {NEW_CONCEPT_PREFIX!r} placeholder id"
            )
        if concept in db.concepts:
            raise InvalidAnswer(f"{concept!r} collides with an existing concept")
        item = ContributionItem(concept=concept, subdomain=subdomain)
        task.items.append(item)
    elif answer.kind is AnswerKind.NEW_CONCEPT and not item.concept.startswith(
        NEW_CONCEPT_PREFIX
    ):
        raise InvalidAnswer(
            "new-concept answers are only valid on proposal placeholders"
        )
    _require_state(item, ANSWER_STATES)

    item.answer = answer
    item.pending_correction = None
    if answer.kind is AnswerKind.SKIP:
        item.state = ItemState.SKIPPED
        _log(item, actor, "skip", comment=answer.comment, at=at)
    else:
        item.state = ItemState.ANSWERED
        _log(
            item, actor, "answer",
            comment=answer.comment,
            detail={"kind": answer.kind.value, "lemma": answer.lemma},
            at=at,
        )
    return item.state


def lexicon_review(
    db: Database,
    task: Task,
    concept: str,
    verdict: LexiconVerdict,
    actor: str,
    at: float | None = None,
) -> ItemState:
    """First-tier review. Correct words/gaps become ready to integrate,
    correct proposals and unclear cases escalate to the concept tier, and
    incorrect answers go back to the contributor."""
    _require_actor(actor, task.lexicon_validator, "lexicon validator")
    item = task.item(concept)
    _require_state(item, LEXICON_REVIEW_STATES)

    if verdict.kind is LexiconVerdictKind.CORRECT:
        if item.answer and item.answer.kind is AnswerKind.NEW_CONCEPT:
            item.state = ItemState.IN_CONCEPT_REVIEW
        else:
            item.state = ItemState.LEXICON_APPROVED
    elif verdict.kind is LexiconVerdictKind.INCORRECT:
        if not (verdict.comment or "").strip():
            raise MissingComment("incorrect verdicts need a comment")
        if verdict.correction is not None and verdict.correction.kind not in (
            AnswerKind.WORD,
            AnswerKind.GAP,
        ):
            raise InvalidAnswer("a correction must be a word or a gap")
        item.state = ItemState.NEEDS_REVISION
        item.pending_correction = verdict.correction
        item.revision_count += 1
        if task.max_cycles is not None and item.revision_count > task.max_cycles:
            _log(
                item, actor, "max-cycles-warning",
                detail={"revision_count": item.revision_count}, at=at,
            )
    else:  # unclear: always escalates to the concept tier
        item.state = ItemState.IN_CONCEPT_REVIEW

    correction = None
    if verdict.correction is not None:
        correction = {
            "kind": verdict.correction.kind.value,
            "lemma": verdict.correction.lemma,
        }
    _log(
        item, actor, "lexicon-review",
        comment=verdict.comment,
        detail={"verdict": verdict.kind.value, "correction": correction},
        at=at,
    )
    return item.state


def concept_review(
    db: Database,
    task: Task,
    concept: str,
    verdict: ConceptVerdict,
    actor: str,
    at: float | None = None,
) -> ItemState:
    """Second-tier review of proposals and escalations."""
    _require_actor(actor, task.concept_validator, "concept validator")
    item = task.item(concept)
    _require_state(item, {ItemState.IN_CONCEPT_REVIEW})

    detail: dict = {"verdict": verdict.kind.value}
    if verdict.kind is ConceptVerdictKind.ACCEPT:
        item.state = ItemState.LEXICON_APPROVED
    elif verdict.kind is ConceptVerdictKind.CORRECT_BUT_NOT_NEW:
        if verdict.existing is None or verdict.existing not in db.concepts:
            raise UnknownExistingConcept(
                f"correct-but-not-new must name an existing concept, got {verdict.existing!r}"
            )
        _retarget(task, item, verdict.existing, actor, at)
        if item.answer and item.answer.kind is AnswerKind.NEW_CONCEPT:
            # the proposed lemma becomes a word answer for the existing concept
            item.answer = Answer(
                AnswerKind.WORD,
                lemma=item.answer.lemma,
                definition=item.answer.definition,
                comment=item.answer.comment,
                evidence=item.answer.evidence,
            )
        item.state = ItemState.IN_LEXICON_REVIEW
        detail["existing"] = verdict.existing
    else:  # not accepted
        if not (verdict.comment or "").strip():
            raise MissingComment("not-accepted verdicts need a comment")
        item.revision_count += 1
        item.state = ItemState.REJECTED if verdict.final else ItemState.NEEDS_REVISION
        detail["final"] = verdict.final

    _log(item, actor, "concept-review", comment=verdict.comment, detail=detail, at=at)
    return item.state


def _retarget(task: Task, item: ContributionItem, target: str, actor: str,
              at: float | None) -> None:
    existing = task.find(target)
    if existing is not None and existing is not item:
        if existing.state is not ItemState.PENDING:
            raise RetargetConflict(
                f"task {task.id!r} already has an active item for {target!r}"
            )
        # an untouched pending item (e.g. a merge follow-up) is absorbed
        task.items.remove(existing)
        _log(item, actor, "absorb", detail={"absorbed": target}, at=at)
    _log(item, actor, "retarget", detail={"from": item.concept, "to": target}, at=at)
    item.concept = target


def integrate(
    db: Database,
    task: Task,
    concept: str,
    at: float | None = None,
) -> ItemState:
    """Write an approved word or gap into the lexicon. Approved new-concept
    proposals are integrated by merge_new_concept instead."""
    item = task.item(concept)
    _require_state(item, {ItemState.LEXICON_APPROVED})
    answer = item.answer
    assert answer is not None
    if answer.kind is AnswerKind.WORD:
        db.assert_sense(task.lexicon, item.concept, [answer.lemma or ""],
                        definition=answer.definition)
    elif answer.kind is AnswerKind.GAP:
        db.assert_gap(task.lexicon, item.concept, answer.evidence)
    else:
        raise WrongState(
            f"{item.concept!r} is a new-concept proposal; merge it instead"
        )
    item.state = ItemState.INTEGRATED
    _log(item, task.lexicon_validator, "integrate", at=at)
    return item.state


def attesting_lexicons(db: Database, placeholder: str) -> set[str]:
    """Lexicons with a live proposal under the same placeholder id. Used to
    decide whether a merged concept starts out shared or language-specific."""
    live = {
        ItemState.ANSWERED,
        ItemState.IN_LEXICON_REVIEW,
        ItemState.IN_CONCEPT_REVIEW,
        ItemState.LEXICON_APPROVED,
    }
    found = set()
    for task in db.tasks.values():
        item = task.find(placeholder)
        if (
            item is not None
            and item.state in live
            and item.answer is not None
            and item.answer.kind is AnswerKind.NEW_CONCEPT
        ):
            found.add(task.lexicon)
    return found


def merge_new_concept(
    db: Database,
    task: Task,
    placeholder: str,
    parents: Sequence[str],
    actor: str,
    new_id: str | None = None,
    promote: bool = False,
    study_set: Sequence[str] | None = None,
    gloss_std: str | None = None,
    at: float | None = None,
) -> MergeResult:
    """Merge an accepted proposal into the concept graph.

    The proposing lexicon gets its sense; every other lexicon of the study
    set gets a fresh pending follow-up item in its open task (a human must
    still decide word-or-gap there — gaps are never auto-asserted). The new
    concept is shared (supra-lingual) when promoted explicitly or when at
    least two lexicons hold the same proposal at merge time; otherwise it
    stays language-specific to the proposer.
    """
    _require_actor(actor, task.concept_validator, "concept validator")
    item = task.item(placeholder)
    _require_state(item, {ItemState.LEXICON_APPROVED})
    answer = item.answer
    if answer is None or answer.kind is not AnswerKind.NEW_CONCEPT:
        raise WrongState(f"{placeholder!r} is not a new-concept proposal")

    attesting = attesting_lexicons(db, placeholder)
    supra = promote or len(attesting) >= 2
    new_id = new_id or f"new-concept-{len(db.merged_from) + 1:03d}"
    db.add_concept(
        Concept(
            id=new_id,
            gloss_en=answer.definition or "",
            gloss_std=gloss_std,
            subdomain=item.subdomain or "other",
            origin=None if supra else task.lexicon,
            parents=tuple(parents),
        )
    )
    db.merged_from[new_id] = task.lexicon

    _log(
        item, actor, "merge",
        detail={"new_id": new_id, "from": placeholder,
                "origin": None if supra else task.lexicon},
        at=at,
    )
    item.concept = new_id
    db.assert_sense(task.lexicon, new_id, [answer.lemma or ""],
                    definition=answer.definition)
    item.state = ItemState.INTEGRATED

    others = [
        code for code in (study_set if study_set is not None else db.lexicons)
        if code != task.lexicon
    ]
    followups: list[tuple[str, str]] = []
    subdomain = item.subdomain or "other"
    for code in others:
        target = _open_task_for(db, code, subdomain)
        if target is None or target.find(new_id) is not None:
            continue
        followup = ContributionItem(concept=new_id, subdomain=subdomain)
        _log(followup, actor, "follow-up", detail={"merged_from": task.lexicon}, at=at)
        target.items.append(followup)
        followups.append((target.id, code))
    return MergeResult(new_id=new_id, origin=None if supra else task.lexicon,
                       followups=tuple(followups))


def _open_task_for(db: Database, lexicon: str, subdomain: str) -> Optional[Task]:
    candidate = None
    for task in db.tasks.values():
        if task.lexicon == lexicon and subdomain in task.subdomains:
            candidate = task  # latest matching task wins
    return candidate


def correctness_report(task: Task) -> CorrectnessReport:
    """First-round correctness: per answer kind, the share of items whose
    first lexicon verdict was "correct". Later revision cycles change the
    final data but not this report."""
    totals = {AnswerKind.WORD: [0, 0], AnswerKind.GAP: [0, 0]}
    for item in task.items:
        first = item.first_lexicon_verdict()
        if first is None:
            if item.state is ItemState.ANSWERED:
                raise ReviewIncomplete(
                    f"item {item.concept!r} awaits its first review"
                )
            continue
        kind = _answer_kind_before(item, first.seq)
        if kind not in totals:
            continue
        totals[kind][0] += 1
        if first.detail.get("verdict") == LexiconVerdictKind.CORRECT.value:
            totals[kind][1] += 1
    return CorrectnessReport(
        word_total=totals[AnswerKind.WORD][0],
        word_correct=totals[AnswerKind.WORD][1],
        gap_total=totals[AnswerKind.GAP][0],
        gap_correct=totals[AnswerKind.GAP][1],
    )


def _answer_kind_before(item: ContributionItem, seq: int) -> Optional[AnswerKind]:
    kind = None
    for entry in item.history:
        if entry.seq >= seq:
            break
        if entry.transition == "answer":
            kind = AnswerKind(entry.detail["kind"])
        elif entry.transition == "skip":
            kind = AnswerKind.SKIP
    return kind


def replay_history(entries: Sequence[HistoryEntry]) -> tuple[ItemState, int]:
    """Recompute (state, revision_count) from a history alone. Used as the
    event-sourcing cross-check: the stored state must match the replay."""
    state = ItemState.PENDING
    revisions = 0
    answer_kind: Optional[AnswerKind] = None
    for entry in entries:
        t = entry.transition
        if t == "answer":
            answer_kind = AnswerKind(entry.detail["kind"])
            state = ItemState.ANSWERED
        elif t == "skip":
            state = ItemState.SKIPPED
        elif t == "lexicon-review":
            verdict = entry.detail["verdict"]
            if verdict == LexiconVerdictKind.CORRECT.value:
                state = (
                    ItemState.IN_CONCEPT_REVIEW
                    if answer_kind is AnswerKind.NEW_CONCEPT
                    else ItemState.LEXICON_APPROVED
                )
            elif verdict == LexiconVerdictKind.INCORRECT.value:
                state = ItemState.NEEDS_REVISION
                revisions += 1
            else:
                state = ItemState.IN_CONCEPT_REVIEW
        elif t == "concept-review":
            verdict = entry.detail["verdict"]
            if verdict == ConceptVerdictKind.ACCEPT.value:
                state = ItemState.LEXICON_APPROVED
            elif verdict == ConceptVerdictKind.CORRECT_BUT_NOT_NEW.value:
                state = ItemState.IN_LEXICON_REVIEW
                answer_kind = AnswerKind.WORD if answer_kind is AnswerKind.NEW_CONCEPT else answer_kind
            else:
                revisions += 1
                state = (
                    ItemState.REJECTED
                    if entry.detail.get("final")
                    else ItemState.NEEDS_REVISION
                )
        elif t == "integrate" or t == "merge":
            state = ItemState.INTEGRATED
        # follow-up, retarget, absorb, max-cycles-warning: no state change
    return state, revisions
