"""Diversity statistics over a database snapshot.

The overlap of a set of lexicons over a domain is the size of the
intersection of their lexicalized-concept sets divided by the size of the
largest of those sets. Counts can be taken on the base universe (imported
concepts only) or the extended one (base plus accepted new concepts), and
either over explicit assertions only or closed-world, where every
universe concept a lexicon has not lexicalized counts as a gap.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from .errors import UnknownConcept, ValidationFailure
from .model import Database

Universe = Union[str, Iterable[str]]


class CountingMode(str, Enum):
    ASSERTED_ONLY = "asserted"
    CLOSED_WORLD = "closed"


def percent(ratio: float, decimals: int = 1) -> str:
    """Render a 0..1 ratio as a percentage, rounding half up."""
    q = Decimal(1).scaleb(-decimals) if decimals else Decimal(1)
    return str(Decimal(repr(ratio * 100)).quantize(q, rounding=ROUND_HALF_UP))


def resolve_universe(db: Database, universe: Universe = "base") -> frozenset[str]:
    if universe == "base":
        return frozenset(db.base_concept_ids())
    if universe == "extended":
        return frozenset(db.concepts)
    if isinstance(universe, str):
        raise ValidationFailure(
            f"universe must be 'base', 'extended', or a concept set, got {universe!r}"
        )
    explicit = frozenset(universe)
    for concept_id in explicit:
        if concept_id not in db.concepts:
            raise UnknownConcept(f"universe names unknown concept {concept_id!r}")
    return explicit


def lex_concepts(
    db: Database,
    lexicon: str,
    subdomains: Optional[Sequence[str]] = None,
    universe: Universe = "base",
) -> set[str]:
    """The lexicalized concepts of one lexicon, restricted to a domain and
    universe. This is the set the overlap formula operates on."""
    return db.lexicalized_concepts(lexicon, subdomains) & resolve_universe(db, universe)


@dataclass(frozen=True)
class OverlapReport:
    lexicons: tuple[str, ...]
    subdomains: Optional[tuple[str, ...]]
    universe: str
    intersection_size: int
    max_size: int
    ratio: float
    degenerate: bool  # all sets empty: ratio pinned to 0 instead of erroring

    @property
    def percent(self) -> str:
        return percent(self.ratio)


def overlap(
    db: Database,
    lexicons: Sequence[str],
    subdomains: Optional[Sequence[str]] = None,
    universe: Universe = "base",
) -> OverlapReport:
    if not lexicons:
        raise ValidationFailure("overlap needs at least one lexicon")
    sets = [lex_concepts(db, code, subdomains, universe) for code in lexicons]
    intersection = set.intersection(*sets)
    max_size = max(len(s) for s in sets)
    degenerate = max_size == 0
    ratio = 0.0 if degenerate else len(intersection) / max_size
    return OverlapReport(
        lexicons=tuple(lexicons),
        subdomains=tuple(subdomains) if subdomains is not None else None,
        universe=universe if isinstance(universe, str) else "explicit",
        intersection_size=len(intersection),
        max_size=max_size,
        ratio=ratio,
        degenerate=degenerate,
    )


@dataclass(frozen=True)
class OverlapMatrix:
    lexicons: tuple[str, ...]
    cells: tuple[tuple[float, ...], ...]

    def percent_cells(self) -> list[list[str]]:
        return [[percent(v) for v in row] for row in self.cells]

    def to_tsv(self) -> str:
        lines = ["\t".join(("",) + self.lexicons)]
        for code, row in zip(self.lexicons, self.percent_cells()):
            lines.append("\t".join([code] + row))
        return "\n".join(lines) + "\n"


def overlap_matrix(
    db: Database,
    lexicons: Sequence[str],
    subdomains: Optional[Sequence[str]] = None,
    universe: Universe = "base",
) -> OverlapMatrix:
    """Pairwise overlaps; symmetric, with a 1.0 diagonal for every lexicon
    that lexicalizes anything in the universe."""
    sets = {code: lex_concepts(db, code, subdomains, universe) for code in lexicons}
    n = len(lexicons)
    cells = [[0.0] * n for _ in range(n)]
    for i, a in enumerate(lexicons):
        for j, b in enumerate(lexicons[: i + 1]):
            max_size = max(len(sets[a]), len(sets[b]))
            value = len(sets[a] & sets[b]) / max_size if max_size else 0.0
            cells[i][j] = cells[j][i] = value
    return OverlapMatrix(
        lexicons=tuple(lexicons),
        cells=tuple(tuple(row) for row in cells),
    )


@dataclass(frozen=True)
class DiversityCounts:
    lexicon: str
    words: int
    gaps: int
    new_concepts: int


def diversity_counts(
    db: Database,
    lexicon: str,
    universe: Universe = "base",
    mode: CountingMode = CountingMode.CLOSED_WORLD,
) -> DiversityCounts:
    """Words, gaps, and accepted new-concept proposals for one lexicon.

    A proposal that a later lexicon re-derived (correct-but-not-new) counts
    only for the lexicon that proposed it first, so new-concept totals add
    up across lexicons without double counting.
    """
    uni = resolve_universe(db, universe)
    words = db.lexicalized_concepts(lexicon) & uni
    if mode is CountingMode.CLOSED_WORLD:
        gaps = len(uni) - len(words)
    else:
        gaps = len(db.gap_concepts(lexicon) & uni)
    new_concepts = sum(1 for proposer in db.merged_from.values() if proposer == lexicon)
    return DiversityCounts(
        lexicon=lexicon, words=len(words), gaps=gaps, new_concepts=new_concepts
    )


@dataclass(frozen=True)
class DomainBreakdown:
    subdomains: tuple[str, ...]
    words: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def total_words(self) -> int:
        return sum(self.words)

    @property
    def total_gaps(self) -> int:
        return sum(self.gaps)

    def to_tsv(self) -> str:
        lines = ["subdomain\twords\tgaps"]
        for name, w, g in zip(self.subdomains, self.words, self.gaps):
            lines.append(f"{name}\t{w}\t{g}")
        lines.append(f"total\t{self.total_words}\t{self.total_gaps}")
        return "\n".join(lines) + "\n"


def domain_breakdown(
    db: Database,
    lexicons: Sequence[str],
    universe: Universe = "base",
    mode: CountingMode = CountingMode.CLOSED_WORLD,
) -> DomainBreakdown:
    """Word/gap counts per subdomain summed across the given lexicons; the
    column totals equal the grand totals over the whole selection."""
    uni = resolve_universe(db, universe)
    order: dict[str, None] = {}
    for concept in db.iter_concepts():
        if concept.id in uni:
            order.setdefault(concept.subdomain, None)
    by_subdomain = {name: [0, 0] for name in order}
    for name in order:
        sub_universe = {c for c in uni if db.concepts[c].subdomain == name}
        for code in lexicons:
            words = db.lexicalized_concepts(code, name) & sub_universe
            if mode is CountingMode.CLOSED_WORLD:
                gaps = len(sub_universe) - len(words)
            else:
                gaps = len(db.gap_concepts(code, name) & sub_universe)
            by_subdomain[name][0] += len(words)
            by_subdomain[name][1] += gaps
    return DomainBreakdown(
        subdomains=tuple(order),
        words=tuple(by_subdomain[name][0] for name in order),
        gaps=tuple(by_subdomain[name][1] for name in order),
    )


def counts_to_tsv(rows: Sequence[DiversityCounts]) -> str:
    lines = ["lexicon\twords\tgaps\tnew_concepts"]
    for row in rows:
        lines.append(f"{row.lexicon}\t{row.words}\t{row.gaps}\t{row.new_concepts}")
    return "\n".join(lines) + "\n"
