import re

import pytest
from hypothesis import given, strategies as st

from pii_fixtures import clean_strings, pii_strings
from snipsearch.redact import DEFAULT_RULES, load_rules, redact, redact_hits
from snipsearch.search import ScoredHit


def test_email_example():
    assert redact("mail me at john.doe@example.com today") == ("mail me at [EMAIL] today", 1)


def test_ipv4_example():
    assert redact("server at 192.168.0.1 died") == ("server at [IP] died", 1)


def test_no_pii_unchanged():
    assert redact("no pii here") == ("no pii here", 0)


def test_ipv6_and_phone_and_id():
    text = "ping fe80::1 then call +1 415 555 2671 or card 4111111111111111"
    redacted, count = redact(text)
    assert redacted == "ping [IPV6] then call [PHONE] or card [ID]"
    assert count == 3


def test_rule_order_ipv4_not_eaten_by_phone():
    redacted, _ = redact("10.0.0.254 and 415.555.2671")
    assert redacted == "[IP] and [PHONE]"


def test_case_insensitive_ipv6():
    assert redact("ABCD:EF01:2345:6789:ABCD:EF01:2345:6789")[0] == "[IPV6]"


def test_pii_fixture_zero_survivors():
    fixture = pii_strings()
    assert len(fixture) == 100
    for s in fixture:
        redacted, count = redact(s)
        assert count >= 1, s
        _, count2 = redact(redacted)
        assert count2 == 0, (s, redacted)


def test_clean_fixture_zero_redactions():
    fixture = clean_strings()
    assert len(fixture) == 100
    for s in fixture:
        assert redact(s) == (s, 0)


@given(st.text(max_size=120))
def test_idempotent_on_arbitrary_text(text):
    once, _ = redact(text)
    twice, count = redact(once)
    assert twice == once
    assert count == 0


@given(st.lists(st.sampled_from(pii_strings() + clean_strings()), min_size=1, max_size=5),
       st.text(max_size=20))
def test_idempotent_on_pii_mixes(parts, glue):
    text = glue.join(parts)
    once, _ = redact(text)
    assert redact(once) == (once, 0)


def hit(text, meta=None):
    return ScoredHit(id="d1#0", score=1.0, rank=1, matched_terms=["x"],
                     text=text, meta=meta or {})


def test_redact_hits_covers_meta():
    hits = redact_hits([hit("ok text", {"url": "http://x.com/u?mail=bob@example.com"})])
    assert hits[0].meta["url"] == "http://x.com/u?mail=[EMAIL]"
    assert hits[0].text == "ok text"
    assert hits[0].score == 1.0 and hits[0].rank == 1


def test_redact_hits_empty():
    assert redact_hits([]) == []


def test_redact_hits_additive_counts():
    hits = [hit("clean"), hit("reach me: a@b.co"), hit("clean too")]
    out = redact_hits(hits)
    changed = sum(1 for before, after in zip(hits, out) if before.text != after.text)
    assert changed == 1
    assert out[1].text == "reach me: [EMAIL]"


def test_redact_hits_does_not_mutate_input():
    h = hit("a@b.co")
    redact_hits([h])
    assert h.text == "a@b.co"


def test_custom_rules_file(tmp_path):
    p = tmp_path / "rules.tsv"
    p.write_text("codename\tproject-[a-z]+\t[CODENAME]\n")
    rules = load_rules(p)
    assert redact("about project-falcon here", rules) == ("about [CODENAME] here", 1)


def test_placeholders_are_stable_tokens():
    redacted, _ = redact(" ".join(pii_strings()[:20]))
    placeholders = set(re.findall(r"\[[A-Z0-9]+\]", redacted))
    assert placeholders <= {"[EMAIL]", "[IP]", "[IPV6]", "[PHONE]", "[ID]"}
