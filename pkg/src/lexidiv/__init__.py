"""Diversity-aware multilingual lexicon engine.

Stores shared concepts, per-language lexicalizations, and explicit lexical
gaps; runs the contribution/validation workflow that collects them; and
computes overlap and word/gap statistics across lexicons.
"""

from .analytics import (
    CountingMode,
    DiversityCounts,
    DomainBreakdown,
    OverlapMatrix,
    OverlapReport,
    diversity_counts,
    domain_breakdown,
    overlap,
    overlap_matrix,
    percent,
)
from .errors import LexidivError
from .model import (
    Concept,
    Database,
    Evidence,
    GapAssertion,
    LanguageCode,
    LexStatus,
    RelationKind,
    Sense,
    StatusKind,
    parse_language_code,
)
from .queries import concept_panorama, fallback, lookup, word_meanings
from .store import (
    export_contribution_sheet,
    export_gap_matrix,
    import_concept_scaffold,
    import_contribution_sheet,
    load_lexdb,
    save_lexdb,
)
from .workflow import (
    Answer,
    ConceptVerdict,
    ItemState,
    LexiconVerdict,
    Task,
    concept_review,
    correctness_report,
    generate_task,
    integrate,
    lexicon_review,
    merge_new_concept,
    submit_answer,
)

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "Concept",
    "ConceptVerdict",
    "CountingMode",
    "Database",
    "DiversityCounts",
    "DomainBreakdown",
    "Evidence",
    "GapAssertion",
    "ItemState",
    "LanguageCode",
    "LexStatus",
    "LexiconVerdict",
    "LexidivError",
    "OverlapMatrix",
    "OverlapReport",
    "RelationKind",
    "Sense",
    "StatusKind",
    "Task",
    "concept_panorama",
    "concept_review",
    "correctness_report",
    "diversity_counts",
    "domain_breakdown",
    "export_contribution_sheet",
    "export_gap_matrix",
    "fallback",
    "generate_task",
    "import_concept_scaffold",
    "import_contribution_sheet",
    "integrate",
    "lexicon_review",
    "load_lexdb",
    "lookup",
    "merge_new_concept",
    "overlap",
    "overlap_matrix",
    "parse_language_code",
    "percent",
    "save_lexdb",
    "submit_answer",
    "word_meanings",
]
