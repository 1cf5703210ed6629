#!/usr/bin/env python3
"""Regenerate data/kinship_scaffold.tsv.

The scaffold is the shared input concept hierarchy for the kinship domain:
184 concepts in six subdomains (grandparents 19, grandchildren 27,
siblings 21, uncle/aunt 27, nephew/niece 33, cousins 57), each row
``id<TAB>subdomain<TAB>gloss_en<TAB>gloss_std<TAB>parents``.
"""

from __future__ import annotations

import sys
from pathlib import Path

GRANDPARENTS = [
    ("grandparent", "a parent of your father or mother", ""),
    ("grandfather", "the father of your father or mother", "grandparent"),
    ("grandmother", "the mother of your father or mother", "grandparent"),
    ("paternal-grandparent", "a parent of your father", "grandparent"),
    ("maternal-grandparent", "a parent of your mother", "grandparent"),
    ("paternal-grandfather", "the father of your father", "paternal-grandparent,grandfather"),
    ("paternal-grandmother", "the mother of your father", "paternal-grandparent,grandmother"),
    ("maternal-grandfather", "the father of your mother", "maternal-grandparent,grandfather"),
    ("maternal-grandmother", "the mother of your mother", "maternal-grandparent,grandmother"),
    ("great-grandparent", "a parent of your grandparent", ""),
    ("great-grandfather", "the father of your grandparent", "great-grandparent"),
    ("great-grandmother", "the mother of your grandparent", "great-grandparent"),
    ("paternal-great-grandfather", "the father of your paternal grandparent", "great-grandfather"),
    ("paternal-great-grandmother", "the mother of your paternal grandparent", "great-grandmother"),
    ("maternal-great-grandfather", "the father of your maternal grandparent", "great-grandfather"),
    ("maternal-great-grandmother", "the mother of your maternal grandparent", "great-grandmother"),
    ("great-great-grandparent", "a grandparent of your grandparent", ""),
    ("great-great-grandfather", "a grandfather of your grandparent", "great-great-grandparent"),
    ("great-great-grandmother", "a grandmother of your grandparent", "great-great-grandparent"),
]

GRANDCHILDREN = [
    ("grandchild", "a child of your son or daughter", ""),
    ("grandson", "a son of your son or daughter", "grandchild"),
    ("granddaughter", "a daughter of your son or daughter", "grandchild"),
    ("sons-child", "a child of your son", "grandchild"),
    ("daughters-child", "a child of your daughter", "grandchild"),
    ("sons-son", "a son of your son", "sons-child,grandson"),
    ("sons-daughter", "a daughter of your son", "sons-child,granddaughter"),
    ("daughters-son", "a son of your daughter", "daughters-child,grandson"),
    ("daughters-daughter", "a daughter of your daughter", "daughters-child,granddaughter"),
    ("great-grandchild", "a child of your grandchild", ""),
    ("great-grandson", "a son of your grandchild", "great-grandchild"),
    ("great-granddaughter", "a daughter of your grandchild", "great-grandchild"),
    ("great-great-grandchild", "a grandchild of your grandchild", ""),
    ("great-great-grandson", "a grandson of your grandchild", "great-great-grandchild"),
    ("great-great-granddaughter", "a granddaughter of your grandchild", "great-great-grandchild"),
    ("sons-sons-child", "a child of your son's son", "great-grandchild"),
    ("sons-daughters-child", "a child of your son's daughter", "great-grandchild"),
    ("daughters-sons-child", "a child of your daughter's son", "great-grandchild"),
    ("daughters-daughters-child", "a child of your daughter's daughter", "great-grandchild"),
    ("sons-sons-son", "a son of your son's son", "sons-sons-child,great-grandson"),
    ("sons-sons-daughter", "a daughter of your son's son", "sons-sons-child,great-granddaughter"),
    ("sons-daughters-son", "a son of your son's daughter", "sons-daughters-child,great-grandson"),
    ("sons-daughters-daughter", "a daughter of your son's daughter", "sons-daughters-child,great-granddaughter"),
    ("daughters-sons-son", "a son of your daughter's son", "daughters-sons-child,great-grandson"),
    ("daughters-sons-daughter", "a daughter of your daughter's son", "daughters-sons-child,great-granddaughter"),
    ("daughters-daughters-son", "a son of your daughter's daughter", "daughters-daughters-child,great-grandson"),
    ("daughters-daughters-daughter", "a daughter of your daughter's daughter", "daughters-daughters-child,great-granddaughter"),
]

SIBLINGS = [
    ("sibling", "a person who has the same parents as another person", ""),
    ("elder-sibling", "a sibling older than you", "sibling"),
    ("younger-sibling", "a sibling younger than you", "sibling"),
    ("brother", "a male person who has the same parents as another person", "sibling"),
    ("sister", "a female person who has the same parents as another person", "sibling"),
    ("elder-brother", "a brother older than you", "elder-sibling,brother"),
    ("elder-sister", "a sister older than you", "elder-sibling,sister"),
    ("younger-brother", "a brother younger than you", "younger-sibling,brother"),
    ("younger-sister", "a sister younger than you", "younger-sibling,sister"),
    ("half-sibling", "a sibling sharing only one parent with you", "sibling"),
    ("half-brother", "a brother sharing only one parent with you", "half-sibling,brother"),
    ("half-sister", "a sister sharing only one parent with you", "half-sibling,sister"),
    ("full-brother", "a brother sharing both parents with you", "brother"),
    ("full-sister", "a sister sharing both parents with you", "sister"),
    ("twin-sibling", "a sibling born at the same birth as you", "sibling"),
    ("twin-brother", "a brother born at the same birth as you", "twin-sibling,brother"),
    ("twin-sister", "a sister born at the same birth as you", "twin-sibling,sister"),
    ("eldest-brother", "the oldest of your brothers", "elder-brother"),
    ("eldest-sister", "the oldest of your sisters", "elder-sister"),
    ("youngest-brother", "the youngest of your brothers", "younger-brother"),
    ("youngest-sister", "the youngest of your sisters", "younger-sister"),
]

UNCLE_AUNT = [
    ("parents-sibling", "a sibling of your father or mother", ""),
    ("uncle", "a brother of your father or mother", "parents-sibling"),
    ("aunt", "a sister of your father or mother", "parents-sibling"),
    ("fathers-sibling", "a sibling of your father", "parents-sibling"),
    ("mothers-sibling", "a sibling of your mother", "parents-sibling"),
    ("paternal-uncle", "a brother of your father", "fathers-sibling,uncle"),
    ("paternal-aunt", "a sister of your father", "fathers-sibling,aunt"),
    ("maternal-uncle", "a brother of your mother", "mothers-sibling,uncle"),
    ("maternal-aunt", "a sister of your mother", "mothers-sibling,aunt"),
    ("parents-elder-sibling", "a sibling of your parent older than your parent", "parents-sibling"),
    ("parents-younger-sibling", "a sibling of your parent younger than your parent", "parents-sibling"),
    ("fathers-elder-brother", "a brother of your father older than him", "paternal-uncle,parents-elder-sibling"),
    ("fathers-younger-brother", "a brother of your father younger than him", "paternal-uncle,parents-younger-sibling"),
    ("fathers-elder-sister", "a sister of your father older than him", "paternal-aunt,parents-elder-sibling"),
    ("fathers-younger-sister", "a sister of your father younger than him", "paternal-aunt,parents-younger-sibling"),
    ("mothers-elder-brother", "a brother of your mother older than her", "maternal-uncle,parents-elder-sibling"),
    ("mothers-younger-brother", "a brother of your mother younger than her", "maternal-uncle,parents-younger-sibling"),
    ("mothers-elder-sister", "a sister of your mother older than her", "maternal-aunt,parents-elder-sibling"),
    ("mothers-younger-sister", "a sister of your mother younger than her", "maternal-aunt,parents-younger-sibling"),
    ("granduncle", "a brother of your grandparent", ""),
    ("grandaunt", "a sister of your grandparent", ""),
    ("paternal-granduncle", "a brother of your paternal grandparent", "granduncle"),
    ("paternal-grandaunt", "a sister of your paternal grandparent", "grandaunt"),
    ("maternal-granduncle", "a brother of your maternal grandparent", "granduncle"),
    ("maternal-grandaunt", "a sister of your maternal grandparent", "grandaunt"),
    ("uncles-wife", "the wife of your uncle", "aunt"),
    ("aunts-husband", "the husband of your aunt", "uncle"),
]

NEPHEW_NIECE = [
    ("siblings-child", "a child of your sibling", ""),
    ("nephew", "a son of your sibling", "siblings-child"),
    ("niece", "a daughter of your sibling", "siblings-child"),
    ("brothers-child", "a child of your brother", "siblings-child"),
    ("sisters-child", "a child of your sister", "siblings-child"),
    ("brothers-son", "a son of your brother", "brothers-child,nephew"),
    ("brothers-daughter", "a daughter of your brother", "brothers-child,niece"),
    ("sisters-son", "a son of your sister", "sisters-child,nephew"),
    ("sisters-daughter", "a daughter of your sister", "sisters-child,niece"),
    ("elder-siblings-child", "a child of your elder sibling", "siblings-child"),
    ("younger-siblings-child", "a child of your younger sibling", "siblings-child"),
    ("elder-brothers-son", "a son of your elder brother", "brothers-son,elder-siblings-child"),
    ("elder-brothers-daughter", "a daughter of your elder brother", "brothers-daughter,elder-siblings-child"),
    ("younger-brothers-son", "a son of your younger brother", "brothers-son,younger-siblings-child"),
    ("younger-brothers-daughter", "a daughter of your younger brother", "brothers-daughter,younger-siblings-child"),
    ("elder-sisters-son", "a son of your elder sister", "sisters-son,elder-siblings-child"),
    ("elder-sisters-daughter", "a daughter of your elder sister", "sisters-daughter,elder-siblings-child"),
    ("younger-sisters-son", "a son of your younger sister", "sisters-son,younger-siblings-child"),
    ("younger-sisters-daughter", "a daughter of your younger sister", "sisters-daughter,younger-siblings-child"),
    ("siblings-child-ms", "a child of a man's sibling", "siblings-child"),
    ("siblings-child-ws", "a child of a woman's sibling", "siblings-child"),
    ("brothers-son-ms", "a son of a man's brother", "siblings-child-ms,brothers-son"),
    ("brothers-daughter-ms", "a daughter of a man's brother", "siblings-child-ms,brothers-daughter"),
    ("sisters-son-ms", "a son of a man's sister", "siblings-child-ms,sisters-son"),
    ("sisters-daughter-ms", "a daughter of a man's sister", "siblings-child-ms,sisters-daughter"),
    ("brothers-son-ws", "a son of a woman's brother", "siblings-child-ws,brothers-son"),
    ("brothers-daughter-ws", "a daughter of a woman's brother", "siblings-child-ws,brothers-daughter"),
    ("sisters-son-ws", "a son of a woman's sister", "siblings-child-ws,sisters-son"),
    ("sisters-daughter-ws", "a daughter of a woman's sister", "siblings-child-ws,sisters-daughter"),
    ("siblings-grandchild", "a grandchild of your sibling", ""),
    ("grandnephew", "a grandson of your sibling", "siblings-grandchild"),
    ("grandniece", "a granddaughter of your sibling", "siblings-grandchild"),
    ("spouses-siblings-child", "a child of your spouse's sibling", ""),
]

COUSINS = [
    ("cousin", "a child of your uncle or aunt", ""),
    ("male-cousin", "a son of your uncle or aunt", "cousin"),
    ("female-cousin", "a daughter of your uncle or aunt", "cousin"),
    ("paternal-cousin", "a child of your father's sibling", "cousin"),
    ("maternal-cousin", "a child of your mother's sibling", "cousin"),
    ("fathers-brothers-child", "a child of your father's brother", "paternal-cousin"),
    ("fathers-sisters-child", "a child of your father's sister", "paternal-cousin"),
    ("mothers-brothers-child", "a child of your mother's brother", "maternal-cousin"),
    ("mothers-sisters-child", "a child of your mother's sister", "maternal-cousin"),
    ("fathers-brothers-son", "a son of your father's brother", "fathers-brothers-child,male-cousin"),
    ("fathers-brothers-daughter", "a daughter of your father's brother", "fathers-brothers-child,female-cousin"),
    ("fathers-sisters-son", "a son of your father's sister", "fathers-sisters-child,male-cousin"),
    ("fathers-sisters-daughter", "a daughter of your father's sister", "fathers-sisters-child,female-cousin"),
    ("mothers-brothers-son", "a son of your mother's brother", "mothers-brothers-child,male-cousin"),
    ("mothers-brothers-daughter", "a daughter of your mother's brother", "mothers-brothers-child,female-cousin"),
    ("mothers-sisters-son", "a son of your mother's sister", "mothers-sisters-child,male-cousin"),
    ("mothers-sisters-daughter", "a daughter of your mother's sister", "mothers-sisters-child,female-cousin"),
    ("fathers-brothers-son-ms", "a son of a man's father's brother", "fathers-brothers-son"),
    ("fathers-brothers-son-ws", "a son of a woman's father's brother", "fathers-brothers-son"),
    ("fathers-brothers-daughter-ms", "a daughter of a man's father's brother", "fathers-brothers-daughter"),
    ("fathers-brothers-daughter-ws", "a daughter of a woman's father's brother", "fathers-brothers-daughter"),
    ("fathers-sisters-son-ms", "a son of a man's father's sister", "fathers-sisters-son"),
    ("fathers-sisters-son-ws", "a son of a woman's father's sister", "fathers-sisters-son"),
    ("fathers-sisters-daughter-ms", "a daughter of a man's father's sister", "fathers-sisters-daughter"),
    ("fathers-sisters-daughter-ws", "a daughter of a woman's father's sister", "fathers-sisters-daughter"),
    ("mothers-brothers-son-ms", "a son of a man's mother's brother", "mothers-brothers-son"),
    ("mothers-brothers-son-ws", "a son of a woman's mother's brother", "mothers-brothers-son"),
    ("mothers-brothers-daughter-ms", "a daughter of a man's mother's brother", "mothers-brothers-daughter"),
    ("mothers-brothers-daughter-ws", "a daughter of a woman's mother's brother", "mothers-brothers-daughter"),
    ("mothers-sisters-son-ms", "a son of a man's mother's sister", "mothers-sisters-son"),
    ("mothers-sisters-son-ws", "a son of a woman's mother's sister", "mothers-sisters-son"),
    ("mothers-sisters-daughter-ms", "a daughter of a man's mother's sister", "mothers-sisters-daughter"),
    ("mothers-sisters-daughter-ws", "a daughter of a woman's mother's sister", "mothers-sisters-daughter"),
    ("elder-cousin", "a cousin older than you", "cousin"),
    ("younger-cousin", "a cousin younger than you", "cousin"),
    ("elder-male-cousin", "a male cousin older than you", "elder-cousin,male-cousin"),
    ("elder-female-cousin", "a female cousin older than you", "elder-cousin,female-cousin"),
    ("younger-male-cousin", "a male cousin younger than you", "younger-cousin,male-cousin"),
    ("younger-female-cousin", "a female cousin younger than you", "younger-cousin,female-cousin"),
    ("parallel-cousin", "a child of your father's brother or mother's sister", "cousin"),
    ("cross-cousin", "a child of your father's sister or mother's brother", "cousin"),
    ("male-parallel-cousin", "a son of your father's brother or mother's sister", "parallel-cousin,male-cousin"),
    ("female-parallel-cousin", "a daughter of your father's brother or mother's sister", "parallel-cousin,female-cousin"),
    ("male-cross-cousin", "a son of your father's sister or mother's brother", "cross-cousin,male-cousin"),
    ("female-cross-cousin", "a daughter of your father's sister or mother's brother", "cross-cousin,female-cousin"),
    ("second-cousin", "a child of a cousin of your parent", ""),
    ("male-second-cousin", "a son of a cousin of your parent", "second-cousin"),
    ("female-second-cousin", "a daughter of a cousin of your parent", "second-cousin"),
    ("parents-cousin", "a cousin of your father or mother", ""),
    ("parents-male-cousin", "a male cousin of your father or mother", "parents-cousin"),
    ("parents-female-cousin", "a female cousin of your father or mother", "parents-cousin"),
    ("cousins-child", "a child of your cousin", ""),
    ("cousins-son", "a son of your cousin", "cousins-child"),
    ("cousins-daughter", "a daughter of your cousin", "cousins-child"),
    ("double-cousin", "a child of your parent's sibling married to your other parent's sibling", "cousin"),
    ("cousin-in-law", "a cousin of your spouse", ""),
    ("distant-cousin", "a relative descended from a common ancestor more than two generations back", ""),
]

SUBDOMAIN_TABLES = [
    ("grandparents", GRANDPARENTS, 19),
    ("grandchildren", GRANDCHILDREN, 27),
    ("siblings", SIBLINGS, 21),
    ("uncle-aunt", UNCLE_AUNT, 27),
    ("nephew-niece", NEPHEW_NIECE, 33),
    ("cousins", COUSINS, 57),
]


def rows():
    for subdomain, table, expected in SUBDOMAIN_TABLES:
        if len(table) != expected:
            raise SystemExit(
                f"{subdomain}: {len(table)} concepts, expected {expected}"
            )
        for concept_id, gloss_en, parents in table:
            yield concept_id, subdomain, gloss_en, "", parents


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "data" / "kinship_scaffold.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = ["id\tsubdomain\tgloss_en\tgloss_std\tparents"]
    total = 0
    for row in rows():
        lines.append("\t".join(row))
        total += 1
    if total != 184:
        raise SystemExit(f"scaffold has {total} concepts, expected 184")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({total} concepts)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
