"""Command-line interface.

Every command operates on a database file (``--db``, default
``lexidiv.json``); mutating commands save it back atomically.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import analytics, queries
from . import workflow as wf
from .errors import LexidivError, UnknownTask, ValidationFailure
from .model import Database
from .store import (
    export_contribution_sheet,
    export_gap_matrix,
    import_concept_scaffold,
    import_contribution_sheet,
    load_lexdb,
    save_lexdb,
)


def _load(path: str, must_exist: bool = True) -> Database:
    if Path(path).exists():
        return load_lexdb(path)
    if must_exist:
        raise click.ClickException(f"database file {path!r} does not exist")
    return Database()


def _get_task(db: Database, task_id: str) -> wf.Task:
    task = db.tasks.get(task_id)
    if task is None:
        raise UnknownTask(f"unknown task {task_id!r}")
    return task


def _codes(value: str) -> list[str]:
    return [part for part in value.split(",") if part]


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except LexidivError as exc:
            raise click.ClickException(f"{exc.code}: {exc}") from exc


@click.group(cls=_Group)
@click.option("--db", "db_path", default="lexidiv.json", show_default=True,
              envvar="LEXIDIV_DB", help="Database file.")
@click.pass_context
def main(ctx, db_path):
    """Diversity-aware lexicon engine: concepts, words, gaps, workflow, stats."""
    ctx.ensure_object(dict)
    ctx.obj["db_path"] = db_path


@main.command("import-scaffold")
@click.argument("file", type=click.Path(exists=True))
@click.pass_context
def import_scaffold(ctx, file):
    """Import a concept scaffold TSV into the database."""
    path = ctx.obj["db_path"]
    db = _load(path, must_exist=False)
    report = import_concept_scaffold(db, file)
    save_lexdb(db, path)
    click.echo(f"added {report.concepts_added} concepts")
    for name, count in report.per_subdomain_counts.items():
        click.echo(f"  {name}\t{count}")


@main.command()
@click.argument("names", nargs=-1)
@click.option("--display-name", default="")
@click.pass_context
def lexicon(ctx, names, display_name):
    """Register one or more lexicons by language code."""
    path = ctx.obj["db_path"]
    db = _load(path)
    for code in names:
        db.add_lexicon(code, display_name if len(names) == 1 else "")
        click.echo(f"added lexicon {code}")
    save_lexdb(db, path)


@main.group()
def sheet():
    """Export and import contribution sheets."""


@sheet.command("export")
@click.option("--lexicon", "code", required=True)
@click.option("--subdomains", required=True, help="Comma-separated subdomain names.")
@click.option("--std-lang", default="eng", show_default=True)
@click.option("--task", "task_id", default=None)
@click.option("--out", type=click.Path(), required=True)
@click.pass_context
def sheet_export(ctx, code, subdomains, std_lang, task_id, out):
    db = _load(ctx.obj["db_path"])
    task = _get_task(db, task_id) if task_id else None
    text = export_contribution_sheet(
        db, code, _codes(subdomains), std_lang=std_lang, task=task, path=out
    )
    click.echo(f"wrote {out} ({sum(1 for l in text.splitlines() if not l.startswith('#'))} rows)")


@sheet.command("import")
@click.argument("file", type=click.Path(exists=True))
@click.option("--task", "task_id", required=True)
@click.option("--integrate/--no-integrate", "auto", default=True, show_default=True,
              help="Integrate correct words/gaps on the fly.")
@click.pass_context
def sheet_import(ctx, file, task_id, auto):
    path = ctx.obj["db_path"]
    db = _load(path)
    task = _get_task(db, task_id)
    text = Path(file).read_text(encoding="utf-8")
    report = import_contribution_sheet(db, task, text, auto_integrate=auto)
    save_lexdb(db, path)
    click.echo(
        f"rows: {report.rows_total} total, {report.rows_applied} applied, "
        f"{report.rows_unchanged} unchanged, {report.rows_rejected} rejected"
    )
    for row in report.rows:
        if row.status == "rejected":
            click.echo(f"  line {row.line} ({row.concept}): {row.reason}")


@main.group()
def task():
    """Create tasks and drive items through the workflow."""


@task.command("new")
@click.option("--lexicon", "code", required=True)
@click.option("--subdomains", required=True)
@click.option("--contributor", required=True)
@click.option("--lexicon-validator", required=True)
@click.option("--concept-validator", required=True)
@click.option("--id", "task_id", default=None)
@click.option("--max-cycles", type=int, default=None)
@click.pass_context
def task_new(ctx, code, subdomains, contributor, lexicon_validator,
             concept_validator, task_id, max_cycles):
    path = ctx.obj["db_path"]
    db = _load(path)
    created = wf.generate_task(
        db, code, _codes(subdomains), contributor=contributor,
        lexicon_validator=lexicon_validator, concept_validator=concept_validator,
        task_id=task_id, max_cycles=max_cycles,
    )
    save_lexdb(db, path)
    click.echo(f"task {created.id}: {len(created.items)} pending items")


@task.command("answer")
@click.argument("task_id")
@click.argument("concept")
@click.option("--type", "answer_type", required=True,
              type=click.Choice(["word", "gap", "skip", "new-concept"]))
@click.option("--lemma", default=None)
@click.option("--definition", default=None)
@click.option("--comment", default=None)
@click.option("--subdomain", default=None)
@click.option("--actor", required=True)
@click.pass_context
def task_answer(ctx, task_id, concept, answer_type, lemma, definition, comment,
                subdomain, actor):
    path = ctx.obj["db_path"]
    db = _load(path)
    target = _get_task(db, task_id)
    if answer_type == "word":
        answer = wf.Answer.word(lemma or "", comment=comment)
    elif answer_type == "gap":
        answer = wf.Answer.gap(comment=comment)
    elif answer_type == "skip":
        answer = wf.Answer.skip(comment)
    else:
        answer = wf.Answer.new_concept(lemma or "", definition or "", comment=comment)
    state = wf.submit_answer(db, target, concept, answer, actor=actor,
                             subdomain=subdomain)
    save_lexdb(db, path)
    click.echo(f"{concept}: {state.value}")


@task.command("review")
@click.argument("task_id")
@click.argument("concept")
@click.option("--verdict", required=True,
              type=click.Choice(["correct", "incorrect", "unclear",
                                 "accept", "not-new", "reject"]))
@click.option("--comment", default=None)
@click.option("--existing", default=None, help="Target concept for not-new.")
@click.option("--final", is_flag=True, help="Make a reject verdict final.")
@click.option("--correction-word", default=None,
              help="Replacement lemma proposed with an incorrect verdict.")
@click.option("--correction-gap", is_flag=True,
              help="Propose 'it is a gap' with an incorrect verdict.")
@click.option("--actor", required=True)
@click.pass_context
def task_review(ctx, task_id, concept, verdict, comment, existing, final,
                correction_word, correction_gap, actor):
    """Record a lexicon-level (correct/incorrect/unclear) or concept-level
    (accept/not-new/reject) verdict; the tier follows from the verdict."""
    path = ctx.obj["db_path"]
    db = _load(path)
    target = _get_task(db, task_id)
    if verdict in ("correct", "incorrect", "unclear"):
        correction = None
        if correction_word:
            correction = wf.Answer.word(correction_word)
        elif correction_gap:
            correction = wf.Answer.gap()
        if verdict == "correct":
            v = wf.LexiconVerdict.correct(comment)
        elif verdict == "incorrect":
            v = wf.LexiconVerdict.incorrect(comment or "", correction)
        else:
            v = wf.LexiconVerdict.unclear(comment)
        state = wf.lexicon_review(db, target, concept, v, actor=actor)
    else:
        if verdict == "accept":
            v = wf.ConceptVerdict.accept(comment)
        elif verdict == "not-new":
            if not existing:
                raise ValidationFailure("--existing is required for not-new")
            v = wf.ConceptVerdict.not_new(existing, comment)
        else:
            v = wf.ConceptVerdict.not_accepted(comment or "", final=final)
        state = wf.concept_review(db, target, concept, v, actor=actor)
    save_lexdb(db, path)
    click.echo(f"{concept}: {state.value}")


@task.command("integrate")
@click.argument("task_id")
@click.argument("concept")
@click.pass_context
def task_integrate(ctx, task_id, concept):
    path = ctx.obj["db_path"]
    db = _load(path)
    state = wf.integrate(db, _get_task(db, task_id), concept)
    save_lexdb(db, path)
    click.echo(f"{concept}: {state.value}")


@task.command("merge")
@click.argument("task_id")
@click.argument("concept")
@click.option("--parents", required=True, help="Comma-separated parent concept ids.")
@click.option("--new-id", default=None)
@click.option("--promote", is_flag=True,
              help="Place the concept in the shared layer immediately.")
@click.option("--study-set", default=None,
              help="Comma-separated lexicons that get follow-up items.")
@click.option("--actor", required=True)
@click.pass_context
def task_merge(ctx, task_id, concept, parents, new_id, promote, study_set, actor):
    """Merge an accepted new-concept proposal into the concept graph."""
    path = ctx.obj["db_path"]
    db = _load(path)
    result = wf.merge_new_concept(
        db, _get_task(db, task_id), concept, parents=_codes(parents), actor=actor,
        new_id=new_id, promote=promote,
        study_set=_codes(study_set) if study_set else None,
    )
    save_lexdb(db, path)
    click.echo(f"merged as {result.new_id} (origin: {result.origin or 'shared'})")
    for followup_task, code in result.followups:
        click.echo(f"  follow-up: {code} in task {followup_task}")


@task.command("report")
@click.argument("task_id")
@click.pass_context
def task_report(ctx, task_id):
    """First-round correctness of words and gaps for a task."""
    db = _load(ctx.obj["db_path"])
    report = wf.correctness_report(_get_task(db, task_id))
    for label, ratio, correct, total in (
        ("words", report.word_correctness, report.word_correct, report.word_total),
        ("gaps", report.gap_correctness, report.gap_correct, report.gap_total),
    ):
        if ratio is None:
            click.echo(f"{label}: no reviewed answers")
        else:
            click.echo(f"{label}: {analytics.percent(ratio, 2)}% ({correct}/{total})")


@main.group()
def stats():
    """Overlap, diversity counts, and per-subdomain breakdowns."""


@stats.command("overlap")
@click.option("--langs", required=True)
@click.option("--domain", default=None)
@click.option("--universe", default="base", type=click.Choice(["base", "extended"]),
              show_default=True)
@click.option("--mode", default="asserted",
              type=click.Choice(["asserted", "closed"]), show_default=True)
@click.pass_context
def stats_overlap(ctx, langs, domain, universe, mode):
    db = _load(ctx.obj["db_path"])
    codes = _codes(langs)
    subdomains = _codes(domain) if domain else None
    report = analytics.overlap(db, codes, subdomains, universe)
    click.echo(
        f"overlap({','.join(codes)}) = {report.intersection_size}/{report.max_size}"
        f" = {report.percent}%" + (" (degenerate)" if report.degenerate else "")
    )
    if len(codes) > 2:
        click.echo(analytics.overlap_matrix(db, codes, subdomains, universe).to_tsv(),
                   nl=False)


@stats.command("counts")
@click.option("--langs", default=None)
@click.option("--universe", default="base", type=click.Choice(["base", "extended"]),
              show_default=True)
@click.option("--mode", default="closed", type=click.Choice(["asserted", "closed"]),
              show_default=True)
@click.pass_context
def stats_counts(ctx, langs, universe, mode):
    db = _load(ctx.obj["db_path"])
    codes = _codes(langs) if langs else list(db.lexicons)
    rows = [
        analytics.diversity_counts(db, c, universe, analytics.CountingMode(mode))
        for c in codes
    ]
    click.echo(analytics.counts_to_tsv(rows), nl=False)


@stats.command("breakdown")
@click.option("--langs", default=None)
@click.option("--universe", default="base", type=click.Choice(["base", "extended"]),
              show_default=True)
@click.option("--mode", default="closed", type=click.Choice(["asserted", "closed"]),
              show_default=True)
@click.pass_context
def stats_breakdown(ctx, langs, universe, mode):
    db = _load(ctx.obj["db_path"])
    codes = _codes(langs) if langs else list(db.lexicons)
    breakdown = analytics.domain_breakdown(
        db, codes, universe, analytics.CountingMode(mode)
    )
    click.echo(breakdown.to_tsv(), nl=False)


@main.command()
@click.argument("lang")
@click.argument("concept")
@click.pass_context
def lookup(ctx, lang, concept):
    """Tri-state status of a concept in a lexicon."""
    db = _load(ctx.obj["db_path"])
    status = queries.lookup(db, lang, concept)
    if status.sense is not None:
        click.echo(f"lexicalized: {', '.join(status.sense.lemmas)}")
    elif status.gap is not None:
        note = " (unevidenced)" if status.gap.unevidenced else ""
        click.echo(f"gap{note}")
    else:
        click.echo("unknown")


@main.command()
@click.argument("lang")
@click.argument("concept")
@click.pass_context
def fallback(ctx, lang, concept):
    """Nearest lexicalized hypernym when the concept itself is not lexicalized."""
    db = _load(ctx.obj["db_path"])
    result = queries.fallback(db, lang, concept)
    if result.status == "none":
        click.echo("no lexicalized ancestor")
        return
    for match in result.matches:
        click.echo(
            f"{result.status} ({result.distance} hops): "
            f"{match.concept} -> {', '.join(match.sense.lemmas)}"
        )


@main.command()
@click.argument("concepts")
@click.argument("langs")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def matrix(ctx, concepts, langs, out):
    """Concept-by-language table of lemma / GAP / ? cells."""
    db = _load(ctx.obj["db_path"])
    text = export_gap_matrix(db, _codes(concepts), _codes(langs), path=out)
    if out:
        click.echo(f"wrote {out}")
    else:
        click.echo(text, nl=False)


@main.command()
@click.pass_context
def check(ctx):
    """Concept-layer health check (unlexicalized shared concepts etc.)."""
    db = _load(ctx.obj["db_path"])
    violations = db.check_concept_layer()
    if not violations:
        click.echo("concept layer ok")
        return
    for violation in violations:
        click.echo(f"{violation.kind}: {violation.concept} ({violation.detail})")
    sys.exit(1)


@main.command()
@click.option("--addr", default="127.0.0.1:8000", show_default=True)
@click.option("--db", "db_path", default=None,
              help="Database file (defaults to the global --db).")
@click.pass_context
def serve(ctx, addr, db_path):
    """Serve the HTTP API over a database file."""
    import uvicorn

    from .service import create_app

    path = db_path or ctx.obj["db_path"]
    db = _load(path)
    host, _, port = addr.partition(":")
    app = create_app(db, db_path=path)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000))


if __name__ == "__main__":
    main()
