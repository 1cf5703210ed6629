"""Exception hierarchy shared by all lexidiv modules.

Every error carries a stable machine-readable ``code`` so that batch
importers, the CLI, and the HTTP service can report failures uniformly.
The class attribute ``http_status`` drives the service's status mapping:
404 for unknown identifiers, 409 for state/exclusivity conflicts, 422 for
malformed input.
"""

from __future__ import annotations


class LexidivError(Exception):
    """Base class for all domain errors."""

    code = "error"
    http_status = 422

    def __init__(self, message: str = ""):
        super().__init__(message or self.__doc__ or self.code)


class NotFoundError(LexidivError):
    """An identifier does not resolve to anything in the database."""

    code = "not-found"
    http_status = 404


class ConflictError(LexidivError):
    """The operation contradicts existing state."""

    code = "conflict"
    http_status = 409


class ValidationFailure(LexidivError):
    """Input is malformed or violates a data invariant."""

    code = "validation"
    http_status = 422


# --- core model ---------------------------------------------------------

class MalformedCode(ValidationFailure):
    """Language code does not match ``xxx`` or ``xxx-yyy`` (lowercase)."""

    code = "malformed-code"


class DuplicateId(ConflictError):
    """Concept id already in use (or retired and never reusable)."""

    code = "duplicate-id"


class DuplicateLexicon(ConflictError):
    """A lexicon with this code already exists."""

    code = "duplicate-lexicon"


class UnknownParent(NotFoundError):
    """A referenced hypernym does not exist."""

    code = "unknown-parent"


class CycleDetected(ConflictError):
    """The edge would create a cycle in the hypernym graph."""

    code = "cycle-detected"


class UnknownConcept(NotFoundError):
    """No concept with this id."""

    code = "unknown-concept"


class UnknownLexicon(NotFoundError):
    """No lexicon with this code."""

    code = "unknown-lexicon"


class ConflictsWithGap(ConflictError):
    """A gap assertion already exists for this (lexicon, concept)."""

    code = "conflicts-with-gap"


class ConflictsWithSense(ConflictError):
    """A sense already exists for this (lexicon, concept)."""

    code = "conflicts-with-sense"


class EmptyLemmas(ValidationFailure):
    """A sense needs at least one non-empty lemma."""

    code = "empty-lemmas"


class BadEvidence(ValidationFailure):
    """Evidence record fields are inconsistent (negative or mismatched counts)."""

    code = "bad-evidence"


# --- persistence / interchange ------------------------------------------

class SchemaVersionMismatch(ValidationFailure):
    """Database file was written with an unsupported schema version."""

    code = "schema-version-mismatch"


class IntegrityViolation(ValidationFailure):
    """Database file references ids that are not defined in it."""

    code = "integrity-violation"


class ParseError(ValidationFailure):
    """A line of an interchange file could not be parsed."""

    code = "parse-error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoConceptsSelected(ValidationFailure):
    """Sheet export selected no subdomains/concepts."""

    code = "no-concepts-selected"


class UnknownTask(NotFoundError):
    """No task with this id (or sheet metadata names a different task)."""

    code = "unknown-task"


class RowConceptMismatch(ValidationFailure):
    """Sheet row concept does not belong to the target task."""

    code = "row-concept-mismatch"


# --- workflow -------------------------------------------------------------

class EmptySelection(ValidationFailure):
    """Task generation matched no unresolved concepts."""

    code = "empty-selection"


class WrongState(ConflictError):
    """The item is not in a state that allows this transition."""

    code = "wrong-state"


class WrongActor(ConflictError):
    """The acting user does not hold the role this transition requires."""

    code = "wrong-actor"


class MissingComment(ValidationFailure):
    """This verdict requires a non-empty comment."""

    code = "missing-comment"


class InvalidAnswer(ValidationFailure):
    """The answer payload is malformed for its kind."""

    code = "invalid-answer"


class UnknownExistingConcept(NotFoundError):
    """A correct-but-not-new verdict must reference an existing concept."""

    code = "unknown-existing-concept"


class RetargetConflict(ConflictError):
    """The task already holds a non-absorbable item for the target concept."""

    code = "retarget-conflict"


class ReviewIncomplete(ConflictError):
    """Correctness is undefined before every answered item has a first verdict."""

    code = "review-incomplete"
