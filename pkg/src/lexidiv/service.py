"""HTTP surface over a database snapshot.

Read endpoints are pure; mutating endpoints (workflow transitions, merges)
are serialized by a process-wide lock and persisted to the backing file when
one is configured. Errors carry a machine-readable code and message; unknown
ids map to 404, state conflicts to 409, malformed input to 422.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Optional

from fastapi import Body, FastAPI, Header, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import analytics, queries
from . import workflow as wf
from .errors import LexidivError, UnknownTask, ValidationFailure
from .model import Database, Evidence, EvidenceKind, LexStatus, Sense
from .store import _evidence_to_doc, _item_to_doc, save_lexdb


def _sense_doc(sense: Sense) -> dict:
    return {
        "lexicon": sense.lexicon,
        "concept": sense.concept,
        "lemmas": list(sense.lemmas),
        "definition": sense.definition,
        "pos": sense.pos,
    }


def _status_doc(status: LexStatus) -> dict:
    doc: dict = {"kind": status.kind.value, "sense": None, "gap": None}
    if status.sense is not None:
        doc["sense"] = _sense_doc(status.sense)
    if status.gap is not None:
        doc["gap"] = {
            "lexicon": status.gap.lexicon,
            "concept": status.gap.concept,
            "evidence": [_evidence_to_doc(e) for e in status.gap.evidence],
            "unevidenced": status.gap.unevidenced,
        }
    return doc


def _task_doc(task: wf.Task) -> dict:
    counts: dict[str, int] = {}
    for item in task.items:
        counts[item.state.value] = counts.get(item.state.value, 0) + 1
    return {
        "id": task.id,
        "lexicon": task.lexicon,
        "subdomains": list(task.subdomains),
        "contributor": task.contributor,
        "lexicon_validator": task.lexicon_validator,
        "concept_validator": task.concept_validator,
        "items_total": len(task.items),
        "state_counts": counts,
    }


_EVIDENCE_FIELDS = (
    "name", "query_with_diacritics", "hits_with", "query_without",
    "hits_without", "total", "note",
)


def _parse_evidence(raw: list | None) -> tuple[Evidence, ...]:
    if not raw:
        return ()
    if not isinstance(raw, list):
        raise ValidationFailure("evidence must be a list")
    parsed = []
    for entry in raw:
        if not isinstance(entry, dict) or "kind" not in entry:
            raise ValidationFailure("evidence entries need a kind")
        try:
            kind = EvidenceKind(entry["kind"])
        except ValueError:
            raise ValidationFailure(f"unknown evidence kind {entry['kind']!r}") from None
        fields = {k: entry[k] for k in _EVIDENCE_FIELDS if k in entry}
        parsed.append(Evidence(kind=kind, **fields))
    return tuple(parsed)


def _enum_param(enum_cls, value: str, label: str):
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise ValidationFailure(f"{label} must be one of: {allowed}") from None


def _list_field(body: dict, key: str, default=None) -> list:
    value = body.get(key, default if default is not None else [])
    if not isinstance(value, list):
        raise ValidationFailure(f"{key} must be a list")
    return value


def _parse_answer(body: dict) -> wf.Answer:
    kind = body.get("type") or body.get("kind")
    if kind not in {k.value for k in wf.AnswerKind}:
        raise ValidationFailure(f"unknown answer type {kind!r}")
    evidence = _parse_evidence(body.get("evidence"))
    comment = body.get("comment")
    if kind == "word":
        return wf.Answer.word(body.get("lemma") or "", evidence, comment)
    if kind == "gap":
        return wf.Answer.gap(evidence, comment)
    if kind == "skip":
        return wf.Answer.skip(comment)
    return wf.Answer.new_concept(
        body.get("lemma") or "", body.get("definition") or "", evidence, comment
    )


def _require_actor(actor: str | None) -> str:
    if not actor:
        raise ValidationFailure("X-Actor header is required for this operation")
    return actor


def create_app(db: Database, db_path: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="lexidiv", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    lock = threading.Lock()

    def persist() -> None:
        if db_path is not None:
            save_lexdb(db, db_path)

    def get_task(task_id: str) -> wf.Task:
        task = db.tasks.get(task_id)
        if task is None:
            raise UnknownTask(f"unknown task {task_id!r}")
        return task

    @app.exception_handler(LexidivError)
    async def domain_error(_request: Request, exc: LexidivError):
        return JSONResponse(
            status_code=exc.http_status,
            content={"code": exc.code, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def body_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": "validation", "message": str(exc.errors()[:1])},
        )

    # --- read side ---------------------------------------------------------

    @app.get("/concepts/{concept_id}")
    def panorama(concept_id: str):
        view = queries.concept_panorama(db, concept_id)
        concept = db.concept(concept_id)
        return {
            "concept": view.concept,
            "gloss_en": concept.gloss_en,
            "gloss_std": concept.gloss_std,
            "subdomain": concept.subdomain,
            "origin": concept.origin,
            "statuses": {code: _status_doc(s) for code, s in view.statuses.items()},
            "parents": list(view.parents),
            "children": list(view.children),
            "relations": [
                {"kind": r.kind.value, "source": r.source, "target": r.target}
                for r in view.relations
            ],
        }

    @app.get("/lexicons/{code}/status/{concept_id}")
    def status(code: str, concept_id: str):
        return _status_doc(queries.lookup(db, code, concept_id))

    @app.get("/lexicons/{code}/fallback/{concept_id}")
    def fallback(code: str, concept_id: str):
        result = queries.fallback(db, code, concept_id)
        return {
            "status": result.status,
            "distance": result.distance,
            "matches": [
                {"concept": m.concept, "sense": _sense_doc(m.sense)}
                for m in result.matches
            ],
        }

    @app.get("/lexicons/{code}/words")
    def words(code: str, lemma: str = Query("")):
        found = queries.word_meanings(db, code, lemma)
        return {
            "lemma": lemma,
            "meanings": [
                {"concept": concept, "sense": _sense_doc(sense)}
                for concept, sense in found
            ],
        }

    @app.get("/stats/overlap")
    def overlap_stats(
        langs: str = Query(...),
        domain: Optional[str] = Query(None),
        universe: str = Query("base"),
        mode: str = Query("asserted"),  # accepted for symmetry; overlap uses senses only
    ):
        codes = [c for c in langs.split(",") if c]
        if not codes:
            raise ValidationFailure("langs must name at least one lexicon")
        subdomains = [s for s in domain.split(",") if s] if domain else None
        report = analytics.overlap(db, codes, subdomains, universe)
        matrix = analytics.overlap_matrix(db, codes, subdomains, universe)
        return {
            "lexicons": codes,
            "subdomains": subdomains,
            "universe": universe,
            "intersection_size": report.intersection_size,
            "max_size": report.max_size,
            "ratio": report.ratio,
            "percent": report.percent,
            "degenerate": report.degenerate,
            "matrix": [list(row) for row in matrix.cells],
            "matrix_percent": matrix.percent_cells(),
        }

    @app.get("/stats/counts")
    def counts_stats(
        langs: Optional[str] = Query(None),
        universe: str = Query("base"),
        mode: str = Query("closed"),
    ):
        codes = [c for c in langs.split(",") if c] if langs else list(db.lexicons)
        counting = _enum_param(analytics.CountingMode, mode, "mode")
        rows = [analytics.diversity_counts(db, c, universe, counting) for c in codes]
        return {
            "universe": universe,
            "mode": counting.value,
            "rows": [
                {
                    "lexicon": r.lexicon,
                    "words": r.words,
                    "gaps": r.gaps,
                    "new_concepts": r.new_concepts,
                }
                for r in rows
            ],
        }

    # --- tasks ------------------------------------------------------------

    @app.get("/tasks")
    def list_tasks():
        return {"tasks": [_task_doc(t) for t in db.tasks.values()]}

    @app.get("/tasks/{task_id}/items")
    def task_items(task_id: str, state: Optional[str] = Query(None)):
        task = get_task(task_id)
        items = task.items
        if state:
            wanted = _enum_param(wf.ItemState, state, "state")
            items = [i for i in items if i.state is wanted]
        return {"task": task_id, "items": [_item_to_doc(i) for i in items]}

    @app.post("/tasks", status_code=201)
    def create_task(body: dict = Body(...)):
        with lock:
            task = wf.generate_task(
                db,
                lexicon=body.get("lexicon", ""),
                subdomains=_list_field(body, "subdomains"),
                contributor=body.get("contributor", ""),
                lexicon_validator=body.get("lexicon_validator", ""),
                concept_validator=body.get("concept_validator", ""),
                task_id=body.get("id"),
                max_cycles=body.get("max_cycles"),
            )
            persist()
        return _task_doc(task)

    @app.post("/tasks/{task_id}/items/{concept_id}/answer")
    def answer(task_id: str, concept_id: str, body: dict = Body(...),
               x_actor: Optional[str] = Header(None)):
        task = get_task(task_id)
        with lock:
            state = wf.submit_answer(
                db, task, concept_id, _parse_answer(body),
                actor=_require_actor(x_actor), subdomain=body.get("subdomain"),
            )
            persist()
        return {"concept": concept_id, "state": state.value}

    @app.post("/tasks/{task_id}/items/{concept_id}/lexicon-review")
    def review_lexicon(task_id: str, concept_id: str, body: dict = Body(...),
                       x_actor: Optional[str] = Header(None)):
        task = get_task(task_id)
        kind = body.get("verdict")
        correction = None
        if body.get("correction"):
            correction = _parse_answer(body["correction"])
        if kind == "correct":
            verdict = wf.LexiconVerdict.correct(body.get("comment"))
        elif kind == "incorrect":
            verdict = wf.LexiconVerdict.incorrect(body.get("comment") or "", correction)
        elif kind == "unclear":
            verdict = wf.LexiconVerdict.unclear(body.get("comment"))
        else:
            raise ValidationFailure(f"unknown lexicon verdict {kind!r}")
        with lock:
            state = wf.lexicon_review(
                db, task, concept_id, verdict, actor=_require_actor(x_actor)
            )
            persist()
        return {"concept": concept_id, "state": state.value}

    @app.post("/tasks/{task_id}/items/{concept_id}/concept-review")
    def review_concept(task_id: str, concept_id: str, body: dict = Body(...),
                       x_actor: Optional[str] = Header(None)):
        task = get_task(task_id)
        kind = body.get("verdict")
        if kind == "accept":
            verdict = wf.ConceptVerdict.accept(body.get("comment"))
        elif kind in ("correct-but-not-new", "not-new"):
            verdict = wf.ConceptVerdict.not_new(
                body.get("existing") or "", body.get("comment")
            )
        elif kind in ("not-accepted", "reject"):
            verdict = wf.ConceptVerdict.not_accepted(
                body.get("comment") or "", final=bool(body.get("final"))
            )
        else:
            raise ValidationFailure(f"unknown concept verdict {kind!r}")
        with lock:
            state = wf.concept_review(
                db, task, concept_id, verdict, actor=_require_actor(x_actor)
            )
            persist()
        return {"concept": concept_id, "state": state.value}

    @app.post("/tasks/{task_id}/items/{concept_id}/integrate")
    def integrate_item(task_id: str, concept_id: str):
        task = get_task(task_id)
        with lock:
            state = wf.integrate(db, task, concept_id)
            persist()
        return {"concept": concept_id, "state": state.value}

    @app.post("/concepts/merge")
    def merge(body: dict = Body(...), x_actor: Optional[str] = Header(None)):
        task = get_task(body.get("task", ""))
        placeholder = body.get("concept") or body.get("placeholder") or ""
        study_set = body.get("study_set")
        if study_set is not None and not isinstance(study_set, list):
            raise ValidationFailure("study_set must be a list")
        with lock:
            result = wf.merge_new_concept(
                db,
                task,
                placeholder,
                parents=_list_field(body, "parents"),
                actor=_require_actor(x_actor),
                new_id=body.get("new_id"),
                promote=bool(body.get("promote")),
                study_set=study_set,
            )
            persist()
        return {
            "new_id": result.new_id,
            "origin": result.origin,
            "followups": [
                {"task": task_id, "lexicon": code}
                for task_id, code in result.followups
            ],
        }

    return app
