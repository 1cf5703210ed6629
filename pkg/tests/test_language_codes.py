from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lexidiv.errors import MalformedCode
from lexidiv.model import LanguageCode, parse_language_code

lowercase3 = st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=3, max_size=3)


def test_extended_dialect_code():
    code = parse_language_code("arb-syr")
    assert code == LanguageCode("arb", "syr")
    assert code.render() == "arb-syr"


def test_plain_iso_code():
    assert parse_language_code("jav") == LanguageCode("jav", None)


@pytest.mark.parametrize(
    "bad",
    ["ARB-Syr", "ar", "arab", "arb_syr", "arb-", "arb-sy", "arb-syri", "", "arb syr"],
)
def test_malformed_codes_rejected(bad):
    with pytest.raises(MalformedCode):
        parse_language_code(bad)


@given(lowercase3, st.none() | lowercase3)
def test_render_parse_round_trip(base, ext):
    rendered = base if ext is None else f"{base}-{ext}"
    assert parse_language_code(rendered).render() == rendered
