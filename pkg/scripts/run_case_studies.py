#!/usr/bin/env python3
"""Rebuild the two kinship case studies and print their headline statistics.

Writes the populated database to data/case_studies.json (override with the
first CLI argument) and prints per-lexicon counts, the per-subdomain
breakdown, and the pairwise overlap matrices.
"""

from __future__ import annotations

import sys
from pathlib import Path

from lexidiv import analytics
from lexidiv.casestudy import ARABIC, INDONESIAN, STUDY_ORDER, build_case_study_db
from lexidiv.store import save_lexdb

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "data" / "case_studies.json"
    db = build_case_study_db(ROOT / "data" / "kinship_scaffold.tsv")
    save_lexdb(db, out)
    print(f"wrote {out}")

    print("\nPer-lexicon counts (base universe, closed world):")
    rows = [analytics.diversity_counts(db, code) for code in STUDY_ORDER]
    print(analytics.counts_to_tsv(rows), end="")

    print("\nPer-subdomain breakdown over all ten lexicons:")
    print(analytics.domain_breakdown(db, STUDY_ORDER).to_tsv(), end="")

    print("\nLexicalization overlap, extended universe (percent):")
    for family in (ARABIC, INDONESIAN):
        print(analytics.overlap_matrix(db, family, universe="extended").to_tsv(), end="")
        joint = analytics.overlap(db, list(family), universe="extended")
        print(f"all {len(family)}: {joint.percent}%\n")

    pair = analytics.overlap(db, ["arb-egy", "arb-glf"], universe="extended")
    print(
        f"Egyptian/Gulf: {pair.intersection_size}/{pair.max_size} = {pair.percent}%"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
